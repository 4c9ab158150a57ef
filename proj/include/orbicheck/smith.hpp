#pragma once

#include <vector>

#include "orbicheck/matrix.hpp"

namespace orbicheck {

/// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... | dr.
struct SmithDecomposition {
  std::vector<Integer> factors;  ///< positive invariant factors, divisibility chain
  int rank = 0;
  IntegerMatrix diagonal;        ///< D, same shape as A
  // Empty (0x0) unless transforms were requested.
  IntegerMatrix row_transform;          ///< U
  IntegerMatrix row_transform_inverse;  ///< U^-1
  IntegerMatrix col_transform;          ///< V
  IntegerMatrix col_transform_inverse;  ///< V^-1

  bool has_transforms() const { return row_transform.rows() > 0 || col_transform.rows() > 0; }
};

/// Pivot rule: the nonzero entry of least absolute value in the remaining block.
SmithDecomposition smith_normal_form(const IntegerMatrix& a, bool with_transforms = true);

}  // namespace orbicheck
