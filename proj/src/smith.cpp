#include "orbicheck/smith.hpp"

#include <cstdlib>
#include <optional>

namespace orbicheck {

namespace {

// Applies every elementary operation to A and, when tracked, to the transforms.
class Reducer {
 public:
  Reducer(const IntegerMatrix& a, bool track) : a_(a), track_(track) {
    if (track_) {
      u_ = IntegerMatrix::identity(a.rows());
      u_inv_ = IntegerMatrix::identity(a.rows());
      v_ = IntegerMatrix::identity(a.cols());
      v_inv_ = IntegerMatrix::identity(a.cols());
    }
  }

  void add_row(int target, int source, Integer c) {
    a_.add_row_multiple(target, source, c);
    if (track_) {
      u_.add_row_multiple(target, source, c);
      u_inv_.add_col_multiple(source, target, checked_neg(c));
    }
  }
  void add_col(int target, int source, Integer c) {
    a_.add_col_multiple(target, source, c);
    if (track_) {
      v_.add_col_multiple(target, source, c);
      v_inv_.add_row_multiple(source, target, checked_neg(c));
    }
  }
  void swap_rows(int i, int j) {
    a_.swap_rows(i, j);
    if (track_) {
      u_.swap_rows(i, j);
      u_inv_.swap_cols(i, j);
    }
  }
  void swap_cols(int i, int j) {
    a_.swap_cols(i, j);
    if (track_) {
      v_.swap_cols(i, j);
      v_inv_.swap_rows(i, j);
    }
  }
  void negate_row(int i) {
    a_.negate_row(i);
    if (track_) {
      u_.negate_row(i);
      for (int r = 0; r < u_inv_.rows(); ++r) u_inv_(r, i) = checked_neg(u_inv_(r, i));
    }
  }

  IntegerMatrix& a() { return a_; }
  SmithDecomposition finish() {
    SmithDecomposition out;
    int n = std::min(a_.rows(), a_.cols());
    for (int i = 0; i < n && a_(i, i) != 0; ++i) out.factors.push_back(a_(i, i));
    out.rank = static_cast<int>(out.factors.size());
    out.diagonal = std::move(a_);
    if (track_) {
      out.row_transform = std::move(u_);
      out.row_transform_inverse = std::move(u_inv_);
      out.col_transform = std::move(v_);
      out.col_transform_inverse = std::move(v_inv_);
    }
    return out;
  }

 private:
  IntegerMatrix a_;
  bool track_;
  IntegerMatrix u_, u_inv_, v_, v_inv_;
};

Integer floor_div(Integer a, Integer b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& input, bool with_transforms) {
  Reducer red(input, with_transforms);
  auto& a = red.a();
  const int rows = a.rows();
  const int cols = a.cols();

  for (int t = 0; t < std::min(rows, cols); ++t) {
    // Least nonzero |entry| in the remaining block.
    std::optional<std::pair<int, int>> pivot;
    Integer best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        Integer x = std::llabs(a(i, j));
        if (x != 0 && (!pivot || x < best)) {
          best = x;
          pivot = {i, j};
        }
      }
    if (!pivot) break;
    red.swap_rows(t, pivot->first);
    red.swap_cols(t, pivot->second);

    for (;;) {
      const Integer p = a(t, t);
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        red.add_row(i, t, -floor_div(a(i, t), p));
        if (a(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        red.add_col(j, t, -floor_div(a(t, j), p));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survives; move it to the pivot slot.
        int bi = t, bj = t;
        Integer bv = std::llabs(a(t, t));
        for (int i = t + 1; i < rows; ++i)
          if (a(i, t) != 0 && std::llabs(a(i, t)) < bv) {
            bv = std::llabs(a(i, t));
            bi = i;
            bj = t;
          }
        for (int j = t + 1; j < cols; ++j)
          if (a(t, j) != 0 && std::llabs(a(t, j)) < bv) {
            bv = std::llabs(a(t, j));
            bi = t;
            bj = j;
          }
        red.swap_rows(t, bi);
        red.swap_cols(t, bj);
        continue;
      }
      // Row and column of the pivot are clear; enforce divisibility.
      int offending = -1;
      for (int i = t + 1; i < rows && offending < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (a(i, j) % p != 0) {
            offending = i;
            break;
          }
      if (offending < 0) break;
      red.add_row(t, offending, 1);
    }
    if (a(t, t) < 0) red.negate_row(t);
  }
  return red.finish();
}

}  // namespace orbicheck
