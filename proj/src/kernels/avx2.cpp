// AVX2/FMA variants of the vector kernels. This translation unit is only
// part of the build on x86-64 and is compiled with -mavx2 -mfma; callers
// must check avx2_supported() before routing work here.

#include "diraclanczos/kernels/kernels.hpp"

#include <immintrin.h>

namespace diraclanczos::kernels {

namespace {

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4),
                           _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  lo = _mm_add_pd(lo, hi);
  double sum = _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
  for (; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vy =
        _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(double a, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) x[i] *= a;
}

// One output element with ghost-zero handling, used for the boundary
// points and the remainder of the vector loop.
inline void apply_element(const DiracApplyArgs& a, std::size_t i) {
  const double fm = (i > 0) ? a.f[i - 1] : 0.0;
  const double fp = (i + 1 < a.n) ? a.f[i + 1] : 0.0;
  const double gm = (i > 0) ? a.g[i - 1] : 0.0;
  const double gp = (i + 1 < a.n) ? a.g[i + 1] : 0.0;
  const double w = a.inv_r[i];
  a.out_g[i] = (1.0 - a.coupling * w) * a.g[i] - (fp - fm) * a.inv_2h +
               a.kappa * w * a.f[i];
  a.out_f[i] = (gp - gm) * a.inv_2h + a.kappa * w * a.g[i] -
               (a.coupling * w + 1.0) * a.f[i];
}

void dirac_apply_avx2(const DiracApplyArgs& a) {
  const std::size_t n = a.n;
  if (n == 0) return;
  apply_element(a, 0);
  std::size_t i = 1;
  if (n > 1) {
    const __m256d vcoup = _mm256_set1_pd(a.coupling);
    const __m256d vkap = _mm256_set1_pd(a.kappa);
    const __m256d vi2h = _mm256_set1_pd(a.inv_2h);
    const __m256d vone = _mm256_set1_pd(1.0);
    // Interior points have both neighbors in range, so the stencil loads
    // are plain unaligned reads shifted by one element.
    for (; i + 4 <= n - 1; i += 4) {
      const __m256d g0 = _mm256_loadu_pd(a.g + i);
      const __m256d f0 = _mm256_loadu_pd(a.f + i);
      const __m256d gm = _mm256_loadu_pd(a.g + i - 1);
      const __m256d gp = _mm256_loadu_pd(a.g + i + 1);
      const __m256d fm = _mm256_loadu_pd(a.f + i - 1);
      const __m256d fp = _mm256_loadu_pd(a.f + i + 1);
      const __m256d w = _mm256_loadu_pd(a.inv_r + i);
      const __m256d kw = _mm256_mul_pd(vkap, w);

      __m256d og = _mm256_mul_pd(_mm256_fnmadd_pd(vcoup, w, vone), g0);
      og = _mm256_fnmadd_pd(_mm256_sub_pd(fp, fm), vi2h, og);
      og = _mm256_fmadd_pd(kw, f0, og);

      __m256d of = _mm256_mul_pd(_mm256_sub_pd(gp, gm), vi2h);
      of = _mm256_fmadd_pd(kw, g0, of);
      of = _mm256_fnmadd_pd(_mm256_fmadd_pd(vcoup, w, vone), f0, of);

      _mm256_storeu_pd(a.out_g + i, og);
      _mm256_storeu_pd(a.out_f + i, of);
    }
  }
  for (; i < n; ++i) apply_element(a, i);
}

}  // namespace

const Ops& avx2_ops_table() {
  static const Ops table{dot_avx2, axpy_avx2, scale_avx2, dirac_apply_avx2};
  return table;
}

}  // namespace diraclanczos::kernels
