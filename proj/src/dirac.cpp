#include "diraclanczos/dirac.hpp"

#include <cmath>
#include <string>

#include "diraclanczos/errors.hpp"
#include "diraclanczos/kernels/kernels.hpp"

namespace diraclanczos {

double DiracParams::s() const {
  const double za = coupling();
  return std::sqrt(1.0 - za * za);
}

void DiracParams::validate() const {
  if (kappa == 0) {
    throw InvalidParameterError("kappa = 0 does not occur in the radial problem");
  }
  if (z < 0) {
    throw InvalidParameterError("nuclear charge must be non-negative, got " +
                                std::to_string(z));
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidParameterError("fine-structure constant must be positive");
  }
  if (coupling() >= 1.0) {
    throw InvalidParameterError(
        "coupling z*alpha >= 1: the point-Coulomb ground state is not "
        "normalizable");
  }
}

std::vector<std::string> DiracParams::warnings() const {
  std::vector<std::string> out;
  const double limit = std::sqrt(3.0) / 2.0;
  if (coupling() > limit) {
    out.push_back(
        "coupling z*alpha exceeds sqrt(3)/2; the operator is not essentially "
        "self-adjoint and grid results depend on the boundary treatment");
  }
  return out;
}

void apply_h_packed(std::span<const double> in, std::span<double> out,
                    const RadialGrid& grid, const DiracParams& params) {
  const auto n = static_cast<std::size_t>(grid.n_points());
  if (in.size() != 2 * n || out.size() != 2 * n) {
    throw InvalidParameterError("packed spinor length does not match the grid");
  }
  if (in.data() == out.data()) {
    throw InvalidParameterError("operator apply needs distinct input and output");
  }
  kernels::DiracApplyArgs args{};
  args.g = in.data();
  args.f = in.data() + n;
  args.inv_r = grid.inv_points().data();
  args.out_g = out.data();
  args.out_f = out.data() + n;
  args.n = n;
  args.coupling = params.coupling();
  args.kappa = static_cast<double>(params.kappa);
  args.inv_2h = 1.0 / (2.0 * grid.spacing());
  kernels::active_ops().dirac_apply(args);
}

void apply_h(const Spinor& in, const DiracParams& params, Spinor& out) {
  if (!in.grid().same_as(out.grid())) {
    throw GridMismatchError("operator input and output live on different grids");
  }
  if (&in == &out) {
    throw InvalidParameterError("operator apply needs distinct input and output");
  }
  apply_h_packed(in.packed(), out.packed(), in.grid(), params);
}

Spinor apply_h(const Spinor& in, const DiracParams& params) {
  Spinor out(in.grid_ptr());
  apply_h_packed(in.packed(), out.packed(), in.grid(), params);
  return out;
}

}  // namespace diraclanczos
