#pragma once

#include <vector>

#include "lgr/rational.hpp"

namespace lgr {

/* Dense rectangular matrix over Rat. Row/column indices are 0-based
 * everywhere except minor_det, whose index lists are 1-based to match the
 * principal-minor labelling J ⊆ {1..N} used throughout the library. */
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  RatMatrix transpose() const;
  bool is_symmetric() const;
  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  RatMatrix operator*(const RatMatrix& o) const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

/* Exact determinant. Denominators are cleared row-wise, then fraction-free
 * (Bareiss) elimination runs over integers so intermediate entries stay the
 * size of minors rather than exploding. det of the 0x0 matrix is 1. Throws
 * std::invalid_argument on non-square input. */
Rat det(const RatMatrix& m);

/* Determinant of the submatrix selected by 1-based, strictly increasing row
 * and column index lists of equal length. Empty selection gives 1. */
Rat minor_det(const RatMatrix& m, const std::vector<int>& rows,
              const std::vector<int>& cols);

/* 0-based submatrix extraction preserving index order. */
RatMatrix submatrix(const RatMatrix& m, const std::vector<int>& rows,
                    const std::vector<int>& cols);

int rank(const RatMatrix& m);

}  // namespace lgr
