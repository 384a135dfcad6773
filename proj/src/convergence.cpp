#include "diraclanczos/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "diraclanczos/errors.hpp"

namespace diraclanczos {

std::string_view classification_name(Classification c) {
  switch (c) {
    case Classification::bound:
      return "bound";
    case Classification::spurious:
      return "spurious";
    case Classification::undetermined:
      return "undetermined";
  }
  return "unknown";
}

double compute_delta(const RitzPair& pair, const LanczosState& state) {
  const InnerProductSpace& sp = state.space();
  const std::vector<double> v = ritz_coords(pair, state);
  std::vector<double> hv(v.size());
  std::vector<double> hhv(v.size());
  sp.apply(v, hv);
  sp.apply(hv, hhv);
  const double h2 = sp.dot(v, hhv);
  const double delta = std::abs(pair.value * pair.value - h2);
  if (!std::isfinite(delta)) {
    throw NumericalError("delta diagnostic is non-finite");
  }
  return delta;
}

double compute_delta(const RitzPair& pair, const LanczosState& state,
                     const DiracParams& params, const RadialGrid& grid) {
  const auto* sp = dynamic_cast<const SpinorSpace*>(&state.space());
  if (sp == nullptr) {
    throw InvalidStateError("compute_delta with physics arguments needs a spinor state");
  }
  if (!sp->grid().same_as(grid)) {
    throw GridMismatchError("compute_delta grid differs from the state's grid");
  }
  if (sp->params().z != params.z || sp->params().kappa != params.kappa ||
      sp->params().alpha != params.alpha) {
    throw InvalidParameterError("compute_delta parameters differ from the state's");
  }
  return compute_delta(pair, state);
}

std::vector<EigenTrace> match_traces(const std::vector<EigenTrace>& previous,
                                     std::span<const RitzPair> pairs,
                                     std::span<const double> deltas,
                                     int iteration) {
  if (pairs.size() != deltas.size()) {
    throw IterationMismatchError("one delta per Ritz pair is required");
  }
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
    if (pairs[i].value > pairs[i + 1].value) {
      throw IterationMismatchError("Ritz pairs must be sorted ascending");
    }
  }

  std::vector<EigenTrace> out = previous;
  const std::size_t np = out.size();
  const std::size_t nc = pairs.size();

  // All candidate (trace, value) assignments ordered by distance; index
  // tie-breaks keep the outcome deterministic.
  std::vector<std::tuple<double, std::size_t, std::size_t>> cand;
  cand.reserve(np * nc);
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      cand.emplace_back(std::abs(out[i].values.back() - pairs[j].value), i, j);
    }
  }
  std::sort(cand.begin(), cand.end());

  std::vector<bool> trace_used(np, false);
  std::vector<bool> value_used(nc, false);
  for (const auto& [dist, i, j] : cand) {
    if (trace_used[i] || value_used[j]) continue;
    trace_used[i] = true;
    value_used[j] = true;
    out[i].values.push_back(pairs[j].value);
    out[i].deltas.push_back(deltas[j]);
  }

  // Interlacing makes the Ritz count non-decreasing, so every previous
  // trace found a value above; leftovers are genuinely new eigenvalues.
  int next_id = 0;
  for (const auto& t : out) next_id = std::max(next_id, t.id + 1);
  for (std::size_t j = 0; j < nc; ++j) {
    if (value_used[j]) continue;
    EigenTrace t;
    t.id = next_id++;
    t.birth_iteration = iteration;
    t.values.push_back(pairs[j].value);
    t.deltas.push_back(deltas[j]);
    out.push_back(std::move(t));
  }
  return out;
}

Classification classify(const EigenTrace& trace, int window, double delta_tol,
                        double plateau_tol) {
  if (window < 2) {
    throw InvalidParameterError("classification window must be at least 2");
  }
  if (!(delta_tol > 0.0) || !(plateau_tol > 0.0)) {
    throw InvalidParameterError("classification tolerances must be positive");
  }
  if (trace.values.empty()) return Classification::undetermined;
  if (trace.currently_negative()) {
    // Negative-energy leakage is never a bound state of this problem.
    return Classification::spurious;
  }
  const auto len = trace.values.size();
  const auto w = static_cast<std::size_t>(window);
  if (len < w) return Classification::undetermined;

  const auto e_begin = trace.values.end() - static_cast<std::ptrdiff_t>(w);
  const auto [e_min, e_max] = std::minmax_element(e_begin, trace.values.end());
  if (!(*e_max - *e_min < plateau_tol)) return Classification::undetermined;

  const auto d_begin = trace.deltas.end() - static_cast<std::ptrdiff_t>(w);
  const double noise_floor = kDeltaNoiseFloorFrac * delta_tol;
  bool non_increasing = true;
  for (auto it = d_begin; it + 1 != trace.deltas.end(); ++it) {
    const double cur = *it;
    const double next = *(it + 1);
    if (next > cur * kDeltaSlack && next > noise_floor) {
      non_increasing = false;
      break;
    }
  }
  const double d_final = trace.deltas.back();
  if (d_final < delta_tol && non_increasing) return Classification::bound;

  const auto [d_min, d_max] = std::minmax_element(d_begin, trace.deltas.end());
  if (*d_min >= delta_tol && (*d_max - *d_min) <= kDeltaPlateauRelWidth * *d_max) {
    return Classification::spurious;
  }
  return Classification::undetermined;
}

}  // namespace diraclanczos
