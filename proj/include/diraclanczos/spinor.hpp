#pragma once

#include <memory>
#include <span>
#include <vector>

#include "diraclanczos/grid.hpp"

namespace diraclanczos {

// Two-component radial function (g, f) sampled on a shared RadialGrid.
// Storage is one contiguous array of length 2n with g first, so the
// whole spinor can be handed to the flat vector kernels at once.
class Spinor {
 public:
  explicit Spinor(std::shared_ptr<const RadialGrid> grid);
  Spinor(std::shared_ptr<const RadialGrid> grid, std::vector<double> packed);

  const RadialGrid& grid() const { return *grid_; }
  const std::shared_ptr<const RadialGrid>& grid_ptr() const { return grid_; }

  std::size_t size() const { return data_.size() / 2; }

  std::span<const double> g() const { return {data_.data(), size()}; }
  std::span<double> g() { return {data_.data(), size()}; }
  std::span<const double> f() const { return {data_.data() + size(), size()}; }
  std::span<double> f() { return {data_.data() + size(), size()}; }

  std::span<const double> packed() const { return data_; }
  std::span<double> packed() { return data_; }

  bool finite() const;

 private:
  std::shared_ptr<const RadialGrid> grid_;
  std::vector<double> data_;
};

// Rectangle-rule inner product h * sum_i (g_a g_b + f_a f_b).
// Throws GridMismatchError when the grids differ.
double inner_product(const Spinor& a, const Spinor& b);
double norm(const Spinor& a);

// Scales a to unit norm in place. Throws ZeroVectorError when the norm
// is zero or not finite.
void normalize(Spinor& a);

}  // namespace diraclanczos
