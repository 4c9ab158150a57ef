#include "orbicheck/matrix.hpp"

#include <algorithm>
#include <ostream>

namespace orbicheck {

Integer checked_add(Integer a, Integer b) {
  Integer out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
  return out;
}

Integer checked_mul(Integer a, Integer b) {
  Integer out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in multiplication");
  return out;
}

Integer checked_neg(Integer a) { return checked_mul(a, -1); }

IntegerMatrix::IntegerMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Integer x) { return x == 0; });
}

void IntegerMatrix::add_row_multiple(int target, int source, Integer factor) {
  if (factor == 0) return;
  auto t = row(target);
  auto s = row(source);
  for (int c = 0; c < cols_; ++c)
    if (s[c] != 0) t[c] = checked_add(t[c], checked_mul(factor, s[c]));
}

void IntegerMatrix::add_col_multiple(int target, int source, Integer factor) {
  if (factor == 0) return;
  for (int r = 0; r < rows_; ++r) {
    Integer s = (*this)(r, source);
    if (s != 0) (*this)(r, target) = checked_add((*this)(r, target), checked_mul(factor, s));
  }
}

void IntegerMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void IntegerMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::negate_row(int r) {
  for (auto& x : row(r)) x = checked_neg(x);
}

IntegerMatrix IntegerMatrix::row_block(int first, int last) const {
  IntegerMatrix out(last - first, cols_);
  for (int r = first; r < last; ++r) std::copy(row(r).begin(), row(r).end(), out.row(r - first).begin());
  return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  IntegerMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      Integer x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) = checked_add(out(i, j), checked_mul(x, b(k, j)));
    }
  return out;
}

std::vector<Integer> operator*(const IntegerMatrix& a, std::span<const Integer> v) {
  if (static_cast<int>(v.size()) != a.cols()) throw std::invalid_argument("vector length mismatch");
  std::vector<Integer> out(static_cast<std::size_t>(a.rows()), 0);
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0 && v[k] != 0) out[i] = checked_add(out[i], checked_mul(a(i, k), v[k]));
  return out;
}

void write_matrix(std::ostream& os, const IntegerMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
}

}  // namespace orbicheck
