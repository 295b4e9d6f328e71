#include "langmuir/linsolve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "langmuir/errors.hpp"

// LAPACK (Fortran) routines; the build links a LAPACK implementation.
extern "C" {
void dgetrf_(const int* m, const int* n, double* a, const int* lda, int* ipiv, int* info);
void dgetrs_(const char* trans, const int* n, const int* nrhs, const double* a,
             const int* lda, const int* ipiv, double* b, const int* ldb, int* info);
}

namespace langmuir {

namespace {
constexpr double kPivotThreshold = 1e-13;
constexpr double kResidualLimit = 1e-8;
}  // namespace

std::vector<double> multiply(const DenseMatrix& a, std::span<const double> x) {
  const int m = a.rows();
  const int n = a.cols();
  std::vector<double> y(static_cast<std::size_t>(m), 0.0);
  for (int j = 0; j < n; ++j) {
    const double xj = x[static_cast<std::size_t>(j)];
    const double* col = a.data() + static_cast<std::size_t>(j) * m;
    for (int i = 0; i < m; ++i) y[static_cast<std::size_t>(i)] += col[i] * xj;
  }
  return y;
}

Solution solve(const DenseSystem& sys) {
  const int n = sys.matrix.rows();
  if (n == 0 || sys.matrix.cols() != n) {
    throw InvalidParameters("solve: matrix must be square and non-empty");
  }
  if (static_cast<int>(sys.rhs.size()) != n) {
    throw InvalidParameters("solve: rhs length does not match matrix size");
  }

  std::vector<double> column_max(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    const double* col = sys.matrix.data() + static_cast<std::size_t>(j) * n;
    double m = 0.0;
    for (int i = 0; i < n; ++i) {
      if (!std::isfinite(col[i])) throw InvalidParameters("solve: non-finite matrix entry");
      m = std::max(m, std::abs(col[i]));
    }
    column_max[static_cast<std::size_t>(j)] = m;
  }
  for (double v : sys.rhs) {
    if (!std::isfinite(v)) throw InvalidParameters("solve: non-finite rhs entry");
  }

  DenseMatrix lu = sys.matrix;
  std::vector<int> pivots(static_cast<std::size_t>(n));
  int info = 0;
  dgetrf_(&n, &n, lu.data(), &n, pivots.data(), &info);
  if (info > 0) {
    throw SingularMatrix("zero pivot at column " + std::to_string(info));
  }
  if (info < 0) throw SolveFailed("dgetrf: invalid argument " + std::to_string(-info));

  // dgetrf only fails on exactly zero pivots; treat tiny ones as singular
  // too, relative to the largest original entry in the pivot's column.
  for (int j = 0; j < n; ++j) {
    if (std::abs(lu(j, j)) < kPivotThreshold * column_max[static_cast<std::size_t>(j)]) {
      throw SingularMatrix("pivot " + std::to_string(j) + " below threshold (" +
                           std::to_string(lu(j, j)) + ")");
    }
  }

  Solution sol;
  sol.x = sys.rhs;
  const int one = 1;
  const char trans = 'N';
  dgetrs_(&trans, &n, &one, lu.data(), &n, pivots.data(), sol.x.data(), &n, &info);
  if (info != 0) throw SolveFailed("dgetrs: invalid argument " + std::to_string(-info));

  const std::vector<double> ax = multiply(sys.matrix, sol.x);
  double res = 0.0;
  double bnorm = 0.0;
  for (int i = 0; i < n; ++i) {
    res = std::max(res, std::abs(ax[static_cast<std::size_t>(i)] -
                                 sys.rhs[static_cast<std::size_t>(i)]));
    bnorm = std::max(bnorm, std::abs(sys.rhs[static_cast<std::size_t>(i)]));
  }
  sol.residual_inf = res;
  sol.residual_rel = bnorm > 0.0 ? res / bnorm : (res > 0.0 ? 1.0 : 0.0);
  if (sol.residual_rel > kResidualLimit) {
    throw ResidualTooLarge("relative residual " + std::to_string(sol.residual_rel) +
                           " exceeds " + std::to_string(kResidualLimit));
  }
  return sol;
}

}  // namespace langmuir
