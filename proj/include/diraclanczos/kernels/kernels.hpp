#pragma once

#include <cstddef>
#include <string_view>

namespace diraclanczos::kernels {

// Arguments for the fused radial Dirac stencil. The two components and the
// outputs are separate arrays of length n; out_g/out_f must not alias g/f.
// Boundary values beyond [0, n) are treated as zero (Dirichlet ghosts).
struct DiracApplyArgs {
  const double* g;
  const double* f;
  const double* inv_r;  // precomputed 1/r_i
  double* out_g;
  double* out_f;
  std::size_t n;
  double coupling;  // z * alpha
  double kappa;
  double inv_2h;    // 1 / (2h)
};

// Function table for the low-level vector kernels. All hot loops in the
// iteration go through the active table so that the scalar and SIMD
// implementations stay interchangeable.
struct Ops {
  double (*dot)(const double* x, const double* y, std::size_t n);
  void (*axpy)(double a, const double* x, double* y, std::size_t n);  // y += a*x
  void (*scale)(double a, double* x, std::size_t n);                  // x *= a
  void (*dirac_apply)(const DiracApplyArgs& args);
};

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b);

// True when the AVX2 translation unit was compiled in (x86-64 builds).
bool avx2_compiled();
// True when avx2_compiled() and the running CPU reports AVX2 and FMA.
bool avx2_supported();

// The table currently in use. Defaults to the best supported backend.
const Ops& active_ops();
Backend active_backend();

// Force a specific backend. Throws InvalidParameterError if it is not
// supported on this build/CPU. select_auto() restores the default choice.
void select_backend(Backend b);
void select_auto();

// Direct access for equivalence tests. ops_for throws InvalidParameterError
// for an unsupported backend.
const Ops& scalar_ops();
const Ops& ops_for(Backend b);

}  // namespace diraclanczos::kernels
