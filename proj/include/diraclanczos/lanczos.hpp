#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "diraclanczos/dirac.hpp"
#include "diraclanczos/grid.hpp"
#include "diraclanczos/spinor.hpp"
#include "diraclanczos/tridiagonal.hpp"

namespace diraclanczos {

// The two things the recurrence needs from the problem: an inner product
// and the operator action. Everything else (grids, physics, dense test
// matrices) hides behind this, so one engine serves them all.
class InnerProductSpace {
 public:
  virtual ~InnerProductSpace() = default;
  virtual std::size_t dim() const = 0;
  virtual double dot(std::span<const double> a,
                     std::span<const double> b) const = 0;
  // out = H in; in and out never alias.
  virtual void apply(std::span<const double> in, std::span<double> out) const = 0;
};

// Radial Dirac problem as an inner-product space: vectors are packed
// spinors, the dot carries the rectangle-rule weight h.
class SpinorSpace final : public InnerProductSpace {
 public:
  SpinorSpace(std::shared_ptr<const RadialGrid> grid, DiracParams params);

  std::size_t dim() const override;
  double dot(std::span<const double> a, std::span<const double> b) const override;
  void apply(std::span<const double> in, std::span<double> out) const override;

  const RadialGrid& grid() const { return *grid_; }
  const std::shared_ptr<const RadialGrid>& grid_ptr() const { return grid_; }
  const DiracParams& params() const { return params_; }

 private:
  std::shared_ptr<const RadialGrid> grid_;
  DiracParams params_;
};

enum class LanczosStatus { running, converged, breakdown };

// Residuals at or below kBreakdownRel * ||H phi_n|| count as exact
// invariant-subspace breakdown (a success condition, not an error).
inline constexpr double kBreakdownRel = 1e-12;

// Krylov iteration state. Bookkeeping convention: iteration() counts the
// stored basis vectors (1 right after init), order() counts completed
// steps and equals the tridiagonal order. While running, the off-diagonal
// entry coupling step n to step n+1 is held in residual_norm() until the
// next step commits it.
class LanczosState {
 public:
  int iteration() const { return static_cast<int>(basis_.size()); }
  int order() const { return tmatrix_.order(); }
  LanczosStatus status() const { return status_; }
  const TridiagonalMatrix& tridiagonal() const { return tmatrix_; }
  std::span<const std::vector<double>> basis() const { return basis_; }
  double residual_norm() const { return residual_norm_; }
  const InnerProductSpace& space() const { return *space_; }

 private:
  friend LanczosState lanczos_init(std::shared_ptr<const InnerProductSpace>,
                                   std::span<const double>);
  friend void lanczos_step(LanczosState&);

  std::shared_ptr<const InnerProductSpace> space_;
  std::vector<std::vector<double>> basis_;
  TridiagonalMatrix tmatrix_;
  double residual_norm_ = 0.0;
  LanczosStatus status_ = LanczosStatus::running;
  std::vector<double> scratch_;  // holds H phi_n, then the residual
};

// Normalizes the start vector into phi_1. Throws ZeroVectorError when
// its norm is at or below 1e-300, InvalidParameterError on length mismatch.
LanczosState lanczos_init(std::shared_ptr<const InnerProductSpace> space,
                          std::span<const double> start);

// One step of the three-term recurrence with two-pass full
// reorthogonalization against every stored vector. Appends v_n (and the
// previous step's off-diagonal) to the tridiagonal matrix; either appends
// the normalized residual as phi_{n+1} or flags breakdown. Throws
// InvalidStateError when the state is not running, NumericalError when a
// coefficient turns non-finite.
void lanczos_step(LanczosState& state);

// Spinor-level wrappers around the generic engine.
LanczosState init(const Spinor& start, const DiracParams& params);
// Checks that params/grid agree with the state's space, then steps.
void step(LanczosState& state, const DiracParams& params,
          const RadialGrid& grid);

}  // namespace diraclanczos
