#pragma once

#include <span>
#include <vector>

namespace langmuir {

/// Dense column-major matrix (LAPACK layout).
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) {
    return data_[static_cast<std::size_t>(j) * rows_ + i];
  }
  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(j) * rows_ + i];
  }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

std::vector<double> multiply(const DenseMatrix& a, std::span<const double> x);

struct DenseSystem {
  DenseMatrix matrix;
  std::vector<double> rhs;
};

struct Solution {
  std::vector<double> x;
  double residual_inf;  // ||Ax - b||_inf
  double residual_rel;  // residual_inf / ||b||_inf (0 when b = 0)
};

/// LU solve with partial pivoting. Throws SingularMatrix on a zero pivot or
/// when some |U_jj| < 1e-13 * max|A|, and ResidualTooLarge when the relative
/// residual exceeds 1e-8.
Solution solve(const DenseSystem& sys);

}  // namespace langmuir
