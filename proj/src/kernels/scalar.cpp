// Reference implementations of the vector kernels. These define the
// semantics; the SIMD variants are tested for agreement against them.

#include "diraclanczos/kernels/kernels.hpp"

namespace diraclanczos::kernels {

namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void dirac_apply_scalar(const DiracApplyArgs& a) {
  const std::size_t n = a.n;
  for (std::size_t i = 0; i < n; ++i) {
    const double fm = (i > 0) ? a.f[i - 1] : 0.0;
    const double fp = (i + 1 < n) ? a.f[i + 1] : 0.0;
    const double gm = (i > 0) ? a.g[i - 1] : 0.0;
    const double gp = (i + 1 < n) ? a.g[i + 1] : 0.0;
    const double w = a.inv_r[i];
    a.out_g[i] = (1.0 - a.coupling * w) * a.g[i] - (fp - fm) * a.inv_2h +
                 a.kappa * w * a.f[i];
    a.out_f[i] = (gp - gm) * a.inv_2h + a.kappa * w * a.g[i] -
                 (a.coupling * w + 1.0) * a.f[i];
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table{dot_scalar, axpy_scalar, scale_scalar,
                         dirac_apply_scalar};
  return table;
}

}  // namespace diraclanczos::kernels
