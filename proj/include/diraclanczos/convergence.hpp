#pragma once

#include <span>
#include <string>
#include <vector>

#include "diraclanczos/dirac.hpp"
#include "diraclanczos/grid.hpp"
#include "diraclanczos/lanczos.hpp"
#include "diraclanczos/tridiag_eigen.hpp"

namespace diraclanczos {

enum class Classification { bound, spurious, undetermined };

std::string_view classification_name(Classification c);

// Per-eigenvalue history across iterations. Values and deltas are gapless
// from birth_iteration; classifications[k] is the verdict as of iteration
// birth_iteration + k, so the last entry is the trace's current one.
struct EigenTrace {
  int id = 0;
  int birth_iteration = 0;
  std::vector<double> values;
  std::vector<double> deltas;
  std::vector<Classification> classifications;
  Classification classification = Classification::undetermined;

  double final_value() const { return values.back(); }
  // Negative-energy leakage: judged on the current value, since greedy
  // matching can drag a trace across zero during avoided crossings.
  bool currently_negative() const {
    return !values.empty() && values.back() < 0.0;
  }
  int last_iteration() const {
    return birth_iteration + static_cast<int>(values.size()) - 1;
  }
};

// Convergence diagnostic Delta = |e^2 - <v|H^2|v>| for v the materialized
// Ritz vector; zero for exact eigenstates, a nonzero plateau for spurious
// ones. Computed by applying the operator twice (the residual identity
// Delta = w_n^2 * c_last^2 is asserted in tests, not assumed here).
// Throws IterationMismatchError when the pair does not belong to the state.
double compute_delta(const RitzPair& pair, const LanczosState& state);
// Physics-level wrapper that also checks params/grid against the state.
double compute_delta(const RitzPair& pair, const LanczosState& state,
                     const DiracParams& params, const RadialGrid& grid);

// Extends previous traces with the current iteration's Ritz values,
// assigning values to traces greedily by ascending |previous - current|
// distance, each value used at most once; leftover values open new
// traces. `pairs` must be sorted ascending by value with `deltas`
// parallel to it. Returns the updated trace list.
std::vector<EigenTrace> match_traces(const std::vector<EigenTrace>& previous,
                                     std::span<const RitzPair> pairs,
                                     std::span<const double> deltas,
                                     int iteration);

// Robustness constants for classify. Delta values at the roundoff floor
// (below kDeltaNoiseFloorFrac * delta_tol) jitter by orders of magnitude,
// so "non-increasing" tolerates a kDeltaSlack factor per step and treats
// anything under the floor as converged. A spurious plateau must be flat
// to within kDeltaPlateauRelWidth relative spread.
inline constexpr double kDeltaSlack = 1.1;
inline constexpr double kDeltaNoiseFloorFrac = 0.01;
inline constexpr double kDeltaPlateauRelWidth = 0.1;

// Verdict over the last `window` entries of the trace:
//   bound      e-spread < plateau_tol, final delta < delta_tol, delta
//              non-increasing (with the tolerances above);
//   spurious   e-spread < plateau_tol but delta plateaus at/above
//              delta_tol; also forced for any negative Ritz value;
//   undetermined otherwise (including traces shorter than the window).
// Throws InvalidParameterError for window < 2 or non-positive tolerances.
Classification classify(const EigenTrace& trace, int window, double delta_tol,
                        double plateau_tol);

}  // namespace diraclanczos
