#include "diraclanczos/reference.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "diraclanczos/errors.hpp"

namespace diraclanczos {

Spinor bethe_start(const StartVectorSpec& spec,
                   std::shared_ptr<const RadialGrid> grid,
                   std::vector<std::string>* warnings) {
  spec.params.validate();
  if (!(spec.gamma > 0.0) || !std::isfinite(spec.gamma)) {
    throw InvalidParameterError("start vector perturbation gamma must be positive");
  }
  if (!grid) throw InvalidParameterError("bethe_start needs a grid");
  if (spec.params.kappa != -1 && warnings != nullptr) {
    warnings->push_back(
        "start vector uses the kappa = -1 ground-state shape but the operator "
        "has kappa = " +
        std::to_string(spec.params.kappa) + "; convergence may be slow");
  }

  const double za = spec.params.coupling();
  const double s = spec.params.s();
  const double exponent =
      spec.exponent_override ? *spec.exponent_override : s * spec.gamma;
  // f is proportional to g with ratio (s - 1)/(z*alpha); for z = 0 the
  // ratio degenerates to 0/0 and the lower component is simply zero.
  const double ratio = (za > 0.0) ? (s - 1.0) / za : 0.0;

  Spinor v(std::move(grid));
  const auto r = v.grid().points();
  auto g = v.g();
  auto f = v.f();
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double gi = std::pow(r[i], exponent) * std::exp(-za * r[i]);
    g[i] = gi;
    f[i] = ratio * gi;
  }
  if (!v.finite()) {
    throw NumericalError("start vector evaluation produced non-finite values");
  }
  normalize(v);  // throws ZeroVectorError if everything underflowed
  return v;
}

double exact_energy(const DiracParams& params, int principal_n) {
  params.validate();
  const int abs_kappa = std::abs(params.kappa);
  if (principal_n < abs_kappa) {
    throw InvalidParameterError(
        "principal quantum number must be at least |kappa|, got n = " +
        std::to_string(principal_n) + " with kappa = " +
        std::to_string(params.kappa));
  }
  const double za = params.coupling();
  const double s_kappa =
      std::sqrt(static_cast<double>(abs_kappa) * abs_kappa - za * za);
  const double denom = static_cast<double>(principal_n) - abs_kappa + s_kappa;
  const double ratio = za / denom;
  return 1.0 / std::sqrt(1.0 + ratio * ratio);
}

}  // namespace diraclanczos
