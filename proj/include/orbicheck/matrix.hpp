#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace orbicheck {

/// Exact integers. Every operation that could exceed 64 bits is checked and
/// throws std::overflow_error rather than wrapping.
using Integer = std::int64_t;

Integer checked_add(Integer a, Integer b);
Integer checked_mul(Integer a, Integer b);
Integer checked_neg(Integer a);

/// Dense row-major integer matrix.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols);

  static IntegerMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Integer& operator()(int r, int c) { return data_[index(r, c)]; }
  Integer operator()(int r, int c) const { return data_[index(r, c)]; }

  std::span<Integer> row(int r) { return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }
  std::span<const Integer> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }

  bool is_zero() const;

  /// row(target) += factor * row(source)
  void add_row_multiple(int target, int source, Integer factor);
  /// col(target) += factor * col(source)
  void add_col_multiple(int target, int source, Integer factor);
  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  void negate_row(int r);

  /// Rows [first, last) as a new matrix.
  IntegerMatrix row_block(int first, int last) const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
std::vector<Integer> operator*(const IntegerMatrix& a, std::span<const Integer> v);

/// Plain-text export: "rows cols" then one row per line.
void write_matrix(std::ostream& os, const IntegerMatrix& m);

}  // namespace orbicheck
