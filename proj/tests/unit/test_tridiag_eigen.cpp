#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "dense_oracle.hpp"
#include "diraclanczos/errors.hpp"
#include "diraclanczos/tridiag_eigen.hpp"
#include "diraclanczos/tridiagonal.hpp"

using namespace diraclanczos;

namespace {

TridiagonalMatrix random_tridiag(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> diag(-2.0, 2.0);
  std::uniform_real_distribution<double> off(0.05, 1.5);
  TridiagonalMatrix t;
  t.append(diag(rng));
  for (int i = 1; i < n; ++i) t.append(diag(rng), off(rng));
  return t;
}

Eigen::MatrixXd dense_of(const TridiagonalMatrix& t) {
  const int n = t.order();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = t.diag()[i];
    if (i + 1 < n) {
      m(i, i + 1) = t.offdiag()[i];
      m(i + 1, i) = t.offdiag()[i];
    }
  }
  return m;
}

}  // namespace

TEST_CASE("tridiagonal growth keeps the band bookkeeping consistent") {
  TridiagonalMatrix t;
  CHECK(t.order() == 0);
  CHECK_THROWS_AS(t.append(1.0, 0.5), InvalidStateError);
  t.append(2.0);
  CHECK(t.order() == 1);
  CHECK_THROWS_AS(t.append(1.0), InvalidStateError);
  t.append(3.0, 0.25);
  CHECK(t.order() == 2);
  CHECK(t.diag()[1] == 3.0);
  CHECK(t.offdiag()[0] == 0.25);
  CHECK_THROWS_AS(t.append(1.0, 0.0), InvalidParameterError);
  CHECK_THROWS_AS(t.append(1.0, -0.5), InvalidParameterError);
  CHECK_THROWS_AS(t.append(std::nan(""), 0.5), NumericalError);
}

TEST_CASE("orders one and two solve in closed form") {
  TridiagonalMatrix t1;
  t1.append(0.7);
  const auto p1 = eigen_tridiag(t1);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].value == doctest::Approx(0.7));
  CHECK(p1[0].iteration == 1);
  REQUIRE(p1[0].coeffs.size() == 1);
  CHECK(p1[0].coeffs[0] == doctest::Approx(1.0));

  TridiagonalMatrix t2;
  t2.append(0.0);
  t2.append(0.0, 1.0);
  const auto p2 = eigen_tridiag(t2);
  REQUIRE(p2.size() == 2);
  CHECK(p2[0].value == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(p2[1].value == doctest::Approx(1.0).epsilon(1e-14));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (const auto& pair : p2) {
    CHECK(std::abs(pair.coeffs[0]) == doctest::Approx(inv_sqrt2).epsilon(1e-14));
    CHECK(std::abs(pair.coeffs[1]) == doctest::Approx(inv_sqrt2).epsilon(1e-14));
  }
  // Opposite relative signs for the two eigenvectors.
  CHECK(p2[0].coeffs[0] * p2[0].coeffs[1] * p2[1].coeffs[0] * p2[1].coeffs[1] <
        0.0);

  CHECK(eigen_tridiag(TridiagonalMatrix{}).empty());
}

TEST_CASE("eigenvalues match the dense oracle to 1e-12 up to order 50") {
  for (int n : {10, 23, 50}) {
    const TridiagonalMatrix t = random_tridiag(n, static_cast<unsigned>(n));
    const auto pairs = eigen_tridiag(t);
    REQUIRE(pairs.size() == static_cast<std::size_t>(n));
    const auto oracle = testsupport::sorted_eigenvalues(dense_of(t));
    double scale = 0.0;
    for (double v : oracle) scale = std::max(scale, std::abs(v));
    for (int i = 0; i < n; ++i) {
      CHECK(std::abs(pairs[static_cast<std::size_t>(i)].value - oracle[static_cast<std::size_t>(i)]) <=
            1e-12 * scale);
    }
  }
}

TEST_CASE("eigenvectors are unit residuals of the matrix they diagonalize") {
  const int n = 30;
  const TridiagonalMatrix t = random_tridiag(n, 99);
  const Eigen::MatrixXd m = dense_of(t);
  const double scale = m.cwiseAbs().maxCoeff();
  for (const auto& pair : eigen_tridiag(t)) {
    Eigen::Map<const Eigen::VectorXd> c(pair.coeffs.data(), n);
    CHECK(std::abs(c.norm() - 1.0) <= 1e-12);
    CHECK((m * c - pair.value * c).norm() <= 1e-12 * scale * n);
  }
}

TEST_CASE("values come out ascending and interlace after one growth step") {
  const int n = 20;
  TridiagonalMatrix t = random_tridiag(n, 7);
  const auto before = eigen_tridiag(t);
  for (std::size_t i = 0; i + 1 < before.size(); ++i) {
    CHECK(before[i].value <= before[i + 1].value);
  }

  t.append(0.3, 0.8);
  const auto after = eigen_tridiag(t);
  REQUIRE(after.size() == before.size() + 1);
  // Strict Cauchy interlacing: new values bracket every old value.
  for (std::size_t i = 0; i < before.size(); ++i) {
    CHECK(after[i].value < before[i].value);
    CHECK(before[i].value < after[i + 1].value);
  }
}
