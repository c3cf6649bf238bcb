#pragma once

#include <cstddef>
#include <vector>

namespace spectraltk {

// Row-major dense matrix, just enough for desk-scale dense linear algebra.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<double>& data() const { return a_; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

 private:
  int rows_, cols_;
  std::vector<double> a_;
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column j is the eigenvector for values[j]
  double residual_tol;         // certified bound on residual / orthonormality defect
};

// Cyclic Jacobi rotations; input must be symmetric. Throws on non-symmetric
// input or failure to converge within the sweep budget.
EigenDecomposition jacobi_eigensolve(const Matrix& m, int max_sweeps = 64);

}  // namespace spectraltk
