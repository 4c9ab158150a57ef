#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "orbicheck/coxeter.hpp"
#include "orbicheck/gluing.hpp"
#include "orbicheck/quotient.hpp"

namespace fixtures {

using namespace orbicheck;

inline std::string data_path(const std::string& name) { return std::string(ORBICHECK_DATA_DIR) + "/" + name; }

inline const GluingTable& cp2_table() {
  static const GluingTable table = read_complex_file(data_path("cp2.tri"));
  return table;
}

inline const QuotientComplex& cp2() {
  static const QuotientComplex qc = build_quotient(cp2_table());
  return qc;
}

inline const CoxeterMatrix& lanner_343() {
  static const CoxeterMatrix cox = read_coxeter_file(data_path("lanner_343.cox"));
  return cox;
}

/// Two simplices glued along every facet: the boundary of a (d+1)-simplex.
inline GluingTable double_simplex(LabelSet labels = kAllLabels) {
  GluingTable t(2, labels);
  for (int l : label_list(labels)) t.glue(0, l, 1);
  return t;
}

/// Boundary of the 5-dimensional cross-polytope: simplex s puts label i at
/// +e_i or -e_i according to bit i; facet i is shared with s ^ (1 << i).
inline GluingTable cross_polytope() {
  GluingTable t(32);
  for (int s = 0; s < 32; ++s)
    for (int i = 0; i < kMaxLabels; ++i)
      if (s < (s ^ (1 << i))) t.glue(s, i, s ^ (1 << i));
  return t;
}

/// Random label-preserving gluings: for each label an independent random
/// matching of the simplices. With `closed` every facet is glued (n even).
inline GluingTable random_table(std::mt19937& rng, int n, LabelSet labels = kAllLabels, bool closed = true) {
  GluingTable t(n, labels);
  for (int l : label_list(labels)) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 0; i + 1 < n; i += 2) {
      if (!closed && std::uniform_int_distribution<int>(0, 3)(rng) == 0) continue;
      t.glue(order[i], l, order[i + 1]);
    }
  }
  return t;
}

/// Coxeter matrix with every pair orthogonal.
inline CoxeterMatrix all_right(int rank = kMaxLabels) { return CoxeterMatrix(rank); }

inline std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace fixtures
