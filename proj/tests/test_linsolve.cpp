#include <doctest.h>

#include <cmath>
#include <random>

#include "langmuir/errors.hpp"
#include "langmuir/linsolve.hpp"

using namespace langmuir;

TEST_CASE("identity and diagonal systems") {
  {
    DenseMatrix eye(5, 5);
    for (int i = 0; i < 5; ++i) eye(i, i) = 1.0;
    const std::vector<double> b{1, -2, 3, 0.5, -0.25};
    const Solution s = solve({eye, b});
    for (int i = 0; i < 5; ++i) CHECK(s.x[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(i)]);
    CHECK(s.residual_inf == 0.0);
  }
  {
    DenseMatrix d(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = 4.0;
    const Solution s = solve({d, {2.0, 8.0}});
    CHECK(s.x[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.x[1] == doctest::Approx(2.0).epsilon(1e-15));
  }
}

TEST_CASE("singular matrices are rejected") {
  DenseMatrix ones(2, 2);
  ones(0, 0) = ones(0, 1) = ones(1, 0) = ones(1, 1) = 1.0;
  CHECK_THROWS_AS(solve({ones, {1.0, 2.0}}), SingularMatrix);

  DenseMatrix zero(3, 3);
  CHECK_THROWS_AS(solve({zero, {1.0, 2.0, 3.0}}), SingularMatrix);
}

TEST_CASE("input validation") {
  DenseMatrix rect(2, 3);
  CHECK_THROWS_AS(solve({rect, {1.0, 2.0}}), InvalidParameters);

  DenseMatrix bad(2, 2);
  bad(0, 0) = std::nan("");
  bad(1, 1) = 1.0;
  CHECK_THROWS_AS(solve({bad, {1.0, 2.0}}), InvalidParameters);

  DenseMatrix ok(2, 2);
  ok(0, 0) = ok(1, 1) = 1.0;
  CHECK_THROWS_AS(solve({ok, {1.0}}), InvalidParameters);
}

TEST_CASE("round trip on random well-conditioned systems") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> d(-1, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 61);  // up to 64
    DenseMatrix a(n, n);
    std::vector<double> b(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      b[static_cast<std::size_t>(j)] = d(rng);
      for (int i = 0; i < n; ++i) a(i, j) = d(rng);
      a(j, j) += n;  // diagonally dominant
    }
    const Solution s = solve({a, b});
    double bnorm = 0.0;
    for (double v : b) bnorm = std::max(bnorm, std::abs(v));
    CHECK(s.residual_inf <= 1e-10 * bnorm);
    CHECK(s.residual_rel <= 1e-10);
  }
}

TEST_CASE("row permutation does not change the solution") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> d(-1, 1);
  const int n = 24;
  DenseMatrix a(n, n);
  std::vector<double> b(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    b[static_cast<std::size_t>(j)] = d(rng);
    for (int i = 0; i < n; ++i) a(i, j) = d(rng);
    a(j, j) += n;
  }
  const Solution base = solve({a, b});

  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = (i * 7 + 3) % n;
  DenseMatrix pa(n, n);
  std::vector<double> pb(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int src = perm[static_cast<std::size_t>(i)];
    pb[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(src)];
    for (int j = 0; j < n; ++j) pa(i, j) = a(src, j);
  }
  const Solution permuted = solve({pa, pb});
  for (int i = 0; i < n; ++i) {
    CHECK(std::abs(permuted.x[static_cast<std::size_t>(i)] -
                   base.x[static_cast<std::size_t>(i)]) <= 1e-12);
  }
}
