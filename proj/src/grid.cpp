#include "diraclanczos/grid.hpp"

#include <cmath>
#include <string>

#include "diraclanczos/errors.hpp"

namespace diraclanczos {

RadialGrid::RadialGrid(int n_points, double r_max)
    : n_points_(n_points), r_max_(r_max) {
  if (n_points < 1) {
    throw InvalidParameterError("grid needs at least one interior point, got " +
                                std::to_string(n_points));
  }
  if (!(r_max > 0.0) || !std::isfinite(r_max)) {
    throw InvalidParameterError("grid outer radius must be positive and finite");
  }
  spacing_ = r_max / static_cast<double>(n_points + 1);
  points_.resize(static_cast<std::size_t>(n_points));
  inv_points_.resize(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    points_[i] = static_cast<double>(i + 1) * spacing_;
    inv_points_[i] = 1.0 / points_[i];
  }
}

}  // namespace diraclanczos
