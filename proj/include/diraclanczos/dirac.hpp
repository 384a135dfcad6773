#pragma once

#include <span>
#include <string>
#include <vector>

#include "diraclanczos/grid.hpp"
#include "diraclanczos/spinor.hpp"

namespace diraclanczos {

inline constexpr double kFineStructure = 7.2973525693e-3;

// Physical parameters of the radial Coulomb-Dirac problem in natural
// units (hbar = c = m = 1), energies in units of the electron rest mass.
struct DiracParams {
  int z = 100;                     // nuclear charge
  int kappa = -1;                  // relativistic angular quantum number
  double alpha = kFineStructure;   // fine-structure constant

  double coupling() const { return static_cast<double>(z) * alpha; }
  // Exact ground-state energy for kappa = -1 equals sqrt(1 - (z*alpha)^2).
  double s() const;

  // Throws InvalidParameterError for kappa = 0, negative z, non-positive
  // alpha, or coupling at/above 1 where the point-Coulomb problem has no
  // normalizable ground state.
  void validate() const;

  // Non-fatal diagnostics, e.g. coupling beyond sqrt(3)/2 where the
  // operator is no longer essentially self-adjoint.
  std::vector<std::string> warnings() const;
};

// out = H in on the grid the spinors share. The central first derivative
// uses ghost zeros outside the grid, so the discrete operator is exactly
// symmetric under the grid inner product. out must be a distinct object.
void apply_h(const Spinor& in, const DiracParams& params, Spinor& out);
Spinor apply_h(const Spinor& in, const DiracParams& params);

// Flat variant for iteration loops: in and out are packed (g then f)
// arrays of length 2*n_points and must not overlap.
void apply_h_packed(std::span<const double> in, std::span<double> out,
                    const RadialGrid& grid, const DiracParams& params);

}  // namespace diraclanczos
