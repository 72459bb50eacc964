#pragma once

#include <utility>
#include <vector>

#include "hopfbraid/cyclotomic.hpp"

namespace hopfbraid {

struct singular_matrix : std::runtime_error {
  singular_matrix() : std::runtime_error("matrix is singular") {}
};

struct inconsistent_system : std::runtime_error {
  inconsistent_system() : std::runtime_error("linear system has no solution") {}
};

// Dense matrix over the cyclotomic scalars.  Sizes in this project are tiny
// (dim <= 24 for algebras, n^2 <= 576 for convolution systems), so dense
// row-major storage with exact Gaussian elimination is enough everywhere
// except the convolution solves, which get a sparsity-aware routine below.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  CycloScalar& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const CycloScalar& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transposed() const;
  Mat inverse() const;  // throws singular_matrix
  int rank() const;
  bool is_identity() const;

  std::vector<CycloScalar> apply(const std::vector<CycloScalar>& v) const;      // M v
  std::vector<CycloScalar> apply_left(const std::vector<CycloScalar>& v) const; // v^T M

 private:
  int rows_, cols_;
  std::vector<CycloScalar> a_;
};

// solve A x = b; throws inconsistent_system / singular_matrix as appropriate
std::vector<CycloScalar> solve_dense(Mat a, std::vector<CycloScalar> b);

// basis of the nullspace of A (as rows)
std::vector<std::vector<CycloScalar>> nullspace(Mat a);

// Sparse linear solve for square consistent systems with few nonzeros per
// row (the convolution-inverse equations).  Equations are (cols, rhs) pairs;
// pivots are chosen Markowitz-style to limit fill-in.
using SparseRow = std::vector<std::pair<int, CycloScalar>>;
std::vector<CycloScalar> solve_sparse(std::vector<SparseRow> rows,
                                      std::vector<CycloScalar> rhs,
                                      int unknowns);

}  // namespace hopfbraid
