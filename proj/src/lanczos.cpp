#include "diraclanczos/lanczos.hpp"

#include <cmath>
#include <utility>

#include "diraclanczos/errors.hpp"
#include "diraclanczos/kernels/kernels.hpp"

namespace diraclanczos {

SpinorSpace::SpinorSpace(std::shared_ptr<const RadialGrid> grid,
                         DiracParams params)
    : grid_(std::move(grid)), params_(params) {
  if (!grid_) throw InvalidParameterError("spinor space needs a grid");
  params_.validate();
}

std::size_t SpinorSpace::dim() const {
  return 2 * static_cast<std::size_t>(grid_->n_points());
}

double SpinorSpace::dot(std::span<const double> a,
                        std::span<const double> b) const {
  return grid_->spacing() *
         kernels::active_ops().dot(a.data(), b.data(), a.size());
}

void SpinorSpace::apply(std::span<const double> in,
                        std::span<double> out) const {
  apply_h_packed(in, out, *grid_, params_);
}

LanczosState lanczos_init(std::shared_ptr<const InnerProductSpace> space,
                          std::span<const double> start) {
  if (!space) throw InvalidParameterError("lanczos_init needs a space");
  if (start.size() != space->dim()) {
    throw InvalidParameterError("start vector length does not match the space");
  }
  const double nrm = std::sqrt(space->dot(start, start));
  if (!std::isfinite(nrm)) {
    throw NumericalError("start vector has non-finite norm");
  }
  if (nrm <= 1e-300) {
    throw ZeroVectorError("start vector norm is zero to machine precision");
  }
  LanczosState state;
  state.space_ = std::move(space);
  std::vector<double> phi1(start.begin(), start.end());
  kernels::active_ops().scale(1.0 / nrm, phi1.data(), phi1.size());
  state.basis_.push_back(std::move(phi1));
  state.scratch_.resize(start.size());
  return state;
}

void lanczos_step(LanczosState& state) {
  if (state.status_ != LanczosStatus::running) {
    throw InvalidStateError("lanczos_step on a state that is not running");
  }
  const auto& ops = kernels::active_ops();
  const InnerProductSpace& sp = *state.space_;
  const std::vector<double>& phi_n = state.basis_.back();
  const std::size_t dim = phi_n.size();
  const int n = static_cast<int>(state.basis_.size());

  // r starts as H phi_n, then the recurrence and the reorthogonalization
  // subtract basis components in place.
  std::vector<double>& r = state.scratch_;
  sp.apply(phi_n, r);
  const double h_norm = std::sqrt(sp.dot(r, r));
  const double v_n = sp.dot(phi_n, r);
  if (!std::isfinite(v_n) || !std::isfinite(h_norm)) {
    throw NumericalError("operator application produced non-finite values");
  }

  ops.axpy(-v_n, phi_n.data(), r.data(), dim);
  if (n > 1) {
    ops.axpy(-state.residual_norm_, state.basis_[n - 2].data(), r.data(), dim);
  }
  // Two passes of classical Gram-Schmidt against the full basis. One pass
  // leaves O(eps * kappa) components; the second pass brings the new
  // vector to working-precision orthogonality, which the ghost-eigenvalue
  // sensitivity of the delta diagnostic requires.
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : state.basis_) {
      const double c = sp.dot(b, r);
      ops.axpy(-c, b.data(), r.data(), dim);
    }
  }

  const double w_n = std::sqrt(sp.dot(r, r));
  if (!std::isfinite(w_n)) {
    throw NumericalError("residual norm is non-finite");
  }

  if (n == 1) {
    state.tmatrix_.append(v_n);
  } else {
    state.tmatrix_.append(v_n, state.residual_norm_);
  }
  state.residual_norm_ = w_n;

  if (w_n <= kBreakdownRel * h_norm) {
    state.status_ = LanczosStatus::breakdown;
    return;
  }
  std::vector<double> phi_next(r);
  ops.scale(1.0 / w_n, phi_next.data(), dim);
  state.basis_.push_back(std::move(phi_next));
}

LanczosState init(const Spinor& start, const DiracParams& params) {
  auto space = std::make_shared<SpinorSpace>(start.grid_ptr(), params);
  if (!start.finite()) {
    throw NumericalError("start spinor has non-finite entries");
  }
  return lanczos_init(std::move(space), start.packed());
}

void step(LanczosState& state, const DiracParams& params,
          const RadialGrid& grid) {
  const auto* sp = dynamic_cast<const SpinorSpace*>(&state.space());
  if (sp == nullptr) {
    throw InvalidStateError("step with physics arguments needs a spinor state");
  }
  if (!sp->grid().same_as(grid)) {
    throw GridMismatchError("step grid differs from the state's grid");
  }
  if (sp->params().z != params.z || sp->params().kappa != params.kappa ||
      sp->params().alpha != params.alpha) {
    throw InvalidParameterError("step parameters differ from the state's");
  }
  lanczos_step(state);
}

}  // namespace diraclanczos
