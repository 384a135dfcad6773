#pragma once

#include <span>
#include <vector>

namespace diraclanczos {

// Uniform radial grid r_i = i*h for i = 1..n with h = r_max/(n+1).
// Both endpoints r = 0 and r = r_max are excluded; functions on the grid
// are implicitly zero there (Dirichlet boundary).
class RadialGrid {
 public:
  RadialGrid(int n_points, double r_max);

  int n_points() const { return n_points_; }
  double r_max() const { return r_max_; }
  double spacing() const { return spacing_; }

  std::span<const double> points() const { return points_; }
  // 1/r_i, precomputed once because the operator kernel needs it per apply.
  std::span<const double> inv_points() const { return inv_points_; }

  // Logical identity: two grids are the same discretization if they have
  // the same point count and outer radius.
  bool same_as(const RadialGrid& other) const {
    return n_points_ == other.n_points_ && r_max_ == other.r_max_;
  }

 private:
  int n_points_;
  double r_max_;
  double spacing_;
  std::vector<double> points_;
  std::vector<double> inv_points_;
};

}  // namespace diraclanczos
