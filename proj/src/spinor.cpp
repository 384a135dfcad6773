#include "diraclanczos/spinor.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "diraclanczos/errors.hpp"
#include "diraclanczos/kernels/kernels.hpp"

namespace diraclanczos {

namespace {

std::shared_ptr<const RadialGrid> require_grid(
    std::shared_ptr<const RadialGrid> grid) {
  if (!grid) throw InvalidParameterError("spinor needs a grid");
  return grid;
}

}  // namespace

Spinor::Spinor(std::shared_ptr<const RadialGrid> grid)
    : grid_(require_grid(std::move(grid))),
      data_(2 * static_cast<std::size_t>(grid_->n_points()), 0.0) {}

Spinor::Spinor(std::shared_ptr<const RadialGrid> grid,
               std::vector<double> packed)
    : grid_(require_grid(std::move(grid))), data_(std::move(packed)) {
  const auto expected = 2 * static_cast<std::size_t>(grid_->n_points());
  if (data_.size() != expected) {
    throw InvalidParameterError(
        "packed spinor data has length " + std::to_string(data_.size()) +
        ", grid expects " + std::to_string(expected));
  }
}

bool Spinor::finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

double inner_product(const Spinor& a, const Spinor& b) {
  if (!a.grid().same_as(b.grid())) {
    throw GridMismatchError("inner product between spinors on different grids");
  }
  const auto pa = a.packed();
  const auto pb = b.packed();
  return a.grid().spacing() *
         kernels::active_ops().dot(pa.data(), pb.data(), pa.size());
}

double norm(const Spinor& a) { return std::sqrt(inner_product(a, a)); }

void normalize(Spinor& a) {
  const double n = norm(a);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw ZeroVectorError("cannot normalize a spinor with zero or non-finite norm");
  }
  auto p = a.packed();
  kernels::active_ops().scale(1.0 / n, p.data(), p.size());
}

}  // namespace diraclanczos
