#pragma once

#include <vector>

#include "diraclanczos/lanczos.hpp"
#include "diraclanczos/spinor.hpp"
#include "diraclanczos/tridiagonal.hpp"

namespace diraclanczos {

// Eigenpair of the projected operator at iteration n: value e and the
// unit-norm expansion coefficients over the first n Lanczos vectors.
struct RitzPair {
  double value = 0.0;
  std::vector<double> coeffs;
  int iteration = 0;
};

// All eigenpairs of the symmetric tridiagonal matrix, values ascending.
// Implicit-shift QL with eigenvector accumulation; backward stable, and
// strict interlacing follows from the positive off-diagonal entries.
// Throws NumericalError if a sweep fails to converge (internal error for
// well-formed input).
std::vector<RitzPair> eigen_tridiag(const TridiagonalMatrix& t);

// Materializes sum_m coeffs_m phi_m as flat coordinates in the state's
// space. Throws IterationMismatchError unless pair.iteration equals the
// state's tridiagonal order.
std::vector<double> ritz_coords(const RitzPair& pair, const LanczosState& state);

// Same, wrapped as a Spinor. Requires the state to be driven by a
// SpinorSpace; throws InvalidStateError otherwise.
Spinor ritz_vector(const RitzPair& pair, const LanczosState& state);

}  // namespace diraclanczos
