#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diraclanczos/dirac.hpp"
#include "diraclanczos/grid.hpp"
#include "diraclanczos/spinor.hpp"

namespace diraclanczos {

// Perturbed hydrogenic start vector: g(r) = r^{s*gamma} exp(-z*alpha*r),
// f(r) = (s - 1) g(r) / (z*alpha). gamma = 1 is the exact ground-state
// shape for kappa = -1; gamma != 1 deforms the cusp exponent.
struct StartVectorSpec {
  double gamma = 1.0;
  DiracParams params;
  // Escape hatch: use this radial exponent instead of s*gamma, for
  // comparing alternative readings of the perturbation. Rarely set.
  std::optional<double> exponent_override;
};

// Builds the normalized start spinor on the given grid. The shape is the
// kappa = -1 ground-state form; if params.kappa differs a warning is
// appended to *warnings (the seed is still usable, just less targeted).
// Throws InvalidParameterError for gamma <= 0 or coupling >= 1, and
// ZeroVectorError if the sampled function underflows to zero everywhere.
Spinor bethe_start(const StartVectorSpec& spec,
                   std::shared_ptr<const RadialGrid> grid,
                   std::vector<std::string>* warnings = nullptr);

// Relativistic Coulomb bound-state energy (Sommerfeld formula) in units
// mc^2 = 1: E = [1 + (z*alpha / (n - |kappa| + s_kappa))^2]^{-1/2} with
// s_kappa = sqrt(kappa^2 - (z*alpha)^2). For n = 1, kappa = -1 this
// reduces to sqrt(1 - (z*alpha)^2).
// Throws InvalidParameterError unless principal_n >= |kappa| and the
// params validate with coupling < 1.
double exact_energy(const DiracParams& params, int principal_n);

}  // namespace diraclanczos
