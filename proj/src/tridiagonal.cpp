#include "diraclanczos/tridiagonal.hpp"

#include <cmath>
#include <string>

#include "diraclanczos/errors.hpp"

namespace diraclanczos {

void TridiagonalMatrix::append(double v) {
  if (!diag_.empty()) {
    throw InvalidStateError(
        "appending without an off-diagonal entry is only valid at order 0");
  }
  if (!std::isfinite(v)) {
    throw NumericalError("non-finite tridiagonal diagonal entry");
  }
  diag_.push_back(v);
}

void TridiagonalMatrix::append(double v, double w_prev) {
  if (diag_.empty()) {
    throw InvalidStateError(
        "the first diagonal entry has no preceding off-diagonal coupling");
  }
  if (!std::isfinite(v) || !std::isfinite(w_prev)) {
    throw NumericalError("non-finite tridiagonal entry");
  }
  if (!(w_prev > 0.0)) {
    throw InvalidParameterError(
        "off-diagonal entries are residual norms and must be positive, got " +
        std::to_string(w_prev));
  }
  diag_.push_back(v);
  offdiag_.push_back(w_prev);
}

}  // namespace diraclanczos
