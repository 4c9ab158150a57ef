#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "orbicheck/matrix.hpp"

namespace oracles {

using orbicheck::Integer;
using orbicheck::IntegerMatrix;

inline Integer det(std::vector<std::vector<Integer>> m) {
  // Laplace expansion along the first row; sizes here are at most 5.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return total;
}

inline void choose(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = gcd of all k x k minors,
// s_k = d_k / d_{k-1}.
inline std::vector<Integer> determinantal_factors(const IntegerMatrix& a) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (int k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<int>> rows, cols;
    std::vector<int> cur;
    choose(a.rows(), k, 0, cur, rows);
    choose(a.cols(), k, 0, cur, cols);
    Integer g = 0;
    for (const auto& rs : rows)
      for (const auto& cs : cols) {
        std::vector<std::vector<Integer>> m;
        for (int r : rs) {
          std::vector<Integer> row;
          for (int c : cs) row.push_back(a(r, c));
          m.push_back(row);
        }
        g = std::gcd(g, det(m));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline IntegerMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> entry(-3, 3);
  IntegerMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

}  // namespace oracles
