// Backend selection for the vector kernels. The default is chosen once per
// process from compile-time and CPU capabilities; tests may force a backend.

#include "diraclanczos/kernels/kernels.hpp"

#include "diraclanczos/errors.hpp"

namespace diraclanczos::kernels {

#ifdef DIRACLANCZOS_HAVE_AVX2
const Ops& avx2_ops_table();  // defined in avx2.cpp
#endif

namespace {

struct Active {
  const Ops* ops;
  Backend backend;
};

Active detect_default() {
  if (avx2_supported()) {
#ifdef DIRACLANCZOS_HAVE_AVX2
    return {&avx2_ops_table(), Backend::avx2};
#endif
  }
  return {&scalar_ops(), Backend::scalar};
}

Active& active() {
  static Active a = detect_default();
  return a;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

bool avx2_compiled() {
#ifdef DIRACLANCZOS_HAVE_AVX2
  return true;
#else
  return false;
#endif
}

bool avx2_supported() {
#if defined(DIRACLANCZOS_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Ops& active_ops() { return *active().ops; }

Backend active_backend() { return active().backend; }

const Ops& ops_for(Backend b) {
  switch (b) {
    case Backend::scalar:
      return scalar_ops();
    case Backend::avx2:
#ifdef DIRACLANCZOS_HAVE_AVX2
      if (avx2_supported()) return avx2_ops_table();
#endif
      throw InvalidParameterError(
          "avx2 kernel backend is not supported on this build or CPU");
  }
  throw InvalidParameterError("unknown kernel backend");
}

void select_backend(Backend b) { active() = {&ops_for(b), b}; }

void select_auto() { active() = detect_default(); }

}  // namespace diraclanczos::kernels
