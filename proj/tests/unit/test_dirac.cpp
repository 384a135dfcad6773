#include "doctest.h"

#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include "dense_oracle.hpp"
#include "diraclanczos/dirac.hpp"
#include "diraclanczos/errors.hpp"
#include "diraclanczos/reference.hpp"

using namespace diraclanczos;

namespace {

Spinor random_spinor(const std::shared_ptr<const RadialGrid>& grid,
                     unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Spinor v(grid);
  for (auto& x : v.packed()) x = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("parameter validation covers the physical domain") {
  DiracParams p;
  CHECK(p.z == 100);
  CHECK(p.kappa == -1);
  CHECK(p.coupling() == doctest::Approx(0.72973525693).epsilon(1e-14));
  CHECK(p.s() == doctest::Approx(testsupport::kGroundEnergyZ100).epsilon(1e-15));
  CHECK_NOTHROW(p.validate());

  p.kappa = 0;
  CHECK_THROWS_AS(p.validate(), InvalidParameterError);
  p.kappa = -1;
  p.z = -1;
  CHECK_THROWS_AS(p.validate(), InvalidParameterError);
  p.z = 100;
  p.alpha = 0.0;
  CHECK_THROWS_AS(p.validate(), InvalidParameterError);
  p.alpha = kFineStructure;
  p.z = 138;  // coupling > 1
  CHECK_THROWS_AS(p.validate(), InvalidParameterError);
  p.z = 0;
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("self-adjointness warning fires above sqrt(3)/2") {
  DiracParams p;
  p.z = 118;  // coupling 0.861, still below sqrt(3)/2 = 0.8660
  CHECK(p.warnings().empty());
  p.z = 119;  // coupling 0.868
  CHECK(p.warnings().size() == 1);
}

TEST_CASE("operator application matches the independently assembled matrix") {
  auto grid = std::make_shared<const RadialGrid>(40, 8.0);
  DiracParams p;
  const Eigen::MatrixXd h = testsupport::assemble_dense_h(*grid, p);

  const Spinor v = random_spinor(grid, 11);
  const Spinor hv = apply_h(v, p);

  Eigen::Map<const Eigen::VectorXd> x(v.packed().data(), 80);
  const Eigen::VectorXd expect = h * x;
  for (int i = 0; i < 80; ++i) {
    CHECK(hv.packed()[static_cast<std::size_t>(i)] ==
          doctest::Approx(expect(i)).epsilon(1e-12));
  }
}

TEST_CASE("discrete operator is symmetric under the grid inner product") {
  auto grid = std::make_shared<const RadialGrid>(500, 40.0);
  DiracParams p;
  for (unsigned seed = 0; seed < 100; ++seed) {
    const Spinor a = random_spinor(grid, 2 * seed);
    const Spinor b = random_spinor(grid, 2 * seed + 1);
    const Spinor ha = apply_h(a, p);
    const Spinor hb = apply_h(b, p);
    const double lhs = inner_product(a, hb);
    const double rhs = inner_product(ha, b);
    const double scale = norm(ha) * norm(b) + norm(a) * norm(hb);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
  }
}

TEST_CASE("apply rejects aliasing and mismatched grids") {
  auto grid = std::make_shared<const RadialGrid>(10, 2.0);
  auto other = std::make_shared<const RadialGrid>(11, 2.0);
  DiracParams p;
  Spinor v = random_spinor(grid, 3);
  Spinor out(grid);
  Spinor wrong(other);
  CHECK_THROWS_AS(apply_h(v, p, v), InvalidParameterError);
  CHECK_THROWS_AS(apply_h(v, p, wrong), GridMismatchError);

  std::vector<double> flat(20, 0.0);
  CHECK_THROWS_AS(
      apply_h_packed(std::span<const double>(flat.data(), 18),
                     std::span<double>(flat.data(), 20), *grid, p),
      InvalidParameterError);
}

TEST_CASE("exact eigenfunction shape gives the exact Rayleigh quotient") {
  // g = r^s e^{-za r}, f = (s-1)g/za solves the continuum problem with
  // energy s; on this discretization the quotient is exact to roundoff,
  // not just O(h^p): the skew part of the derivative cancels between the
  // proportional components and the 1/r terms cancel identically.
  DiracParams p;
  for (int n : {2000, 4000}) {
    auto grid = std::make_shared<const RadialGrid>(n, 40.0);
    StartVectorSpec spec;
    spec.gamma = 1.0;
    spec.params = p;
    const Spinor v = bethe_start(spec, grid);
    const Spinor hv = apply_h(v, p);
    const double quotient = inner_product(v, hv);
    CHECK(std::abs(quotient - p.s()) <= 1e-12);
  }
}

TEST_CASE("free-particle operator keeps the rest-mass block structure") {
  auto grid = std::make_shared<const RadialGrid>(30, 5.0);
  DiracParams p;
  p.z = 0;
  // With no potential the diagonal blocks are exactly +1 and -1.
  Spinor v(grid);
  v.g()[10] = 1.0;
  const Spinor hv = apply_h(v, p);
  CHECK(hv.g()[10] == doctest::Approx(1.0));
  const Eigen::MatrixXd h = testsupport::assemble_dense_h(*grid, p);
  CHECK(h(10, 10) == doctest::Approx(1.0));
  CHECK(h(40, 40) == doctest::Approx(-1.0));
}
