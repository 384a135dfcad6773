#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "diraclanczos/errors.hpp"
#include "diraclanczos/kernels/kernels.hpp"

using namespace diraclanczos;

namespace {

std::vector<double> random_vec(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

// Straight-line restatement of the stencil, used as the expected value.
void dirac_apply_expected(const kernels::DiracApplyArgs& a) {
  for (std::size_t i = 0; i < a.n; ++i) {
    const double fm = i > 0 ? a.f[i - 1] : 0.0;
    const double fp = i + 1 < a.n ? a.f[i + 1] : 0.0;
    const double gm = i > 0 ? a.g[i - 1] : 0.0;
    const double gp = i + 1 < a.n ? a.g[i + 1] : 0.0;
    a.out_g[i] = (1.0 - a.coupling * a.inv_r[i]) * a.g[i] -
                 (fp - fm) * a.inv_2h + a.kappa * a.inv_r[i] * a.f[i];
    a.out_f[i] = (gp - gm) * a.inv_2h + a.kappa * a.inv_r[i] * a.g[i] -
                 (a.coupling * a.inv_r[i] + 1.0) * a.f[i];
  }
}

struct StencilData {
  std::vector<double> g, f, inv_r, out_g, out_f;
  kernels::DiracApplyArgs args{};

  explicit StencilData(std::size_t n, unsigned seed) {
    g = random_vec(n, seed);
    f = random_vec(n, seed + 1);
    inv_r.resize(n);
    for (std::size_t i = 0; i < n; ++i) inv_r[i] = 1.0 / (0.01 * (i + 1.0));
    out_g.assign(n, 0.0);
    out_f.assign(n, 0.0);
    args.g = g.data();
    args.f = f.data();
    args.inv_r = inv_r.data();
    args.out_g = out_g.data();
    args.out_f = out_f.data();
    args.n = n;
    args.coupling = 0.7297;
    args.kappa = -1.0;
    args.inv_2h = 50.0;
  }
};

}  // namespace

TEST_CASE("scalar dot, axpy and scale match hand-computed values") {
  const auto& ops = kernels::scalar_ops();
  std::vector<double> x = {1.0, 2.0, -3.0};
  std::vector<double> y = {0.5, -1.0, 4.0};
  CHECK(ops.dot(x.data(), y.data(), 3) == doctest::Approx(-13.5));
  CHECK(ops.dot(x.data(), y.data(), 0) == 0.0);

  ops.axpy(2.0, x.data(), y.data(), 3);
  CHECK(y[0] == doctest::Approx(2.5));
  CHECK(y[1] == doctest::Approx(3.0));
  CHECK(y[2] == doctest::Approx(-2.0));

  ops.scale(-0.5, x.data(), 3);
  CHECK(x[0] == doctest::Approx(-0.5));
  CHECK(x[1] == doctest::Approx(-1.0));
  CHECK(x[2] == doctest::Approx(1.5));
}

TEST_CASE("scalar stencil applies ghost zeros at both ends") {
  for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{7}}) {
    StencilData d(n, 42);
    kernels::scalar_ops().dirac_apply(d.args);
    StencilData expect(n, 42);
    dirac_apply_expected(expect.args);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(d.out_g[i] == doctest::Approx(expect.out_g[i]).epsilon(1e-14));
      CHECK(d.out_f[i] == doctest::Approx(expect.out_f[i]).epsilon(1e-14));
    }
  }
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  if (!kernels::avx2_supported()) {
    MESSAGE("avx2 not supported on this machine; skipping equivalence");
    return;
  }
  const auto& sc = kernels::scalar_ops();
  const auto& vx = kernels::ops_for(kernels::Backend::avx2);

  // Sizes straddle the vector width and its remainders.
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 17u, 31u,
                        64u, 100u, 1000u}) {
    const auto x = random_vec(n, static_cast<unsigned>(n));
    const auto y = random_vec(n, static_cast<unsigned>(n) + 7);

    const double ds = sc.dot(x.data(), y.data(), n);
    const double dv = vx.dot(x.data(), y.data(), n);
    CHECK(std::abs(ds - dv) <= 1e-13 * (1.0 + std::abs(ds)));

    auto ys = y;
    auto yv = y;
    sc.axpy(0.37, x.data(), ys.data(), n);
    vx.axpy(0.37, x.data(), yv.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(ys[i] == doctest::Approx(yv[i]).epsilon(1e-13));
    }

    auto xs = x;
    auto xv = x;
    sc.scale(-1.31, xs.data(), n);
    vx.scale(-1.31, xv.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(xs[i] == xv[i]);

    StencilData dsd(n, static_cast<unsigned>(n) + 100);
    StencilData dvd(n, static_cast<unsigned>(n) + 100);
    sc.dirac_apply(dsd.args);
    vx.dirac_apply(dvd.args);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(dsd.out_g[i] == doctest::Approx(dvd.out_g[i]).epsilon(1e-13));
      CHECK(dsd.out_f[i] == doctest::Approx(dvd.out_f[i]).epsilon(1e-13));
    }
  }
}

TEST_CASE("backend selection is explicit and reversible") {
  CHECK(kernels::backend_name(kernels::Backend::scalar) == "scalar");
  CHECK(kernels::backend_name(kernels::Backend::avx2) == "avx2");

  kernels::select_backend(kernels::Backend::scalar);
  CHECK(kernels::active_backend() == kernels::Backend::scalar);
  CHECK(kernels::active_ops().dot == kernels::scalar_ops().dot);

  if (kernels::avx2_supported()) {
    kernels::select_backend(kernels::Backend::avx2);
    CHECK(kernels::active_backend() == kernels::Backend::avx2);
  } else {
    CHECK_THROWS_AS(kernels::select_backend(kernels::Backend::avx2),
                    InvalidParameterError);
    CHECK_THROWS_AS(kernels::ops_for(kernels::Backend::avx2),
                    InvalidParameterError);
  }

  kernels::select_auto();
  if (kernels::avx2_supported()) {
    CHECK(kernels::active_backend() == kernels::Backend::avx2);
  } else {
    CHECK(kernels::active_backend() == kernels::Backend::scalar);
  }
}
