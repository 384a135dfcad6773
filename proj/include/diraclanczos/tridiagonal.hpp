#pragma once

#include <span>
#include <vector>

namespace diraclanczos {

// Symmetric tridiagonal matrix built up one diagonal entry at a time:
// diag holds v_1..v_n, offdiag holds w_1..w_{n-1}. Off-diagonal entries
// are residual norms by construction, so they are strictly positive; a
// vanishing residual ends the iteration instead of being stored.
class TridiagonalMatrix {
 public:
  TridiagonalMatrix() = default;

  int order() const { return static_cast<int>(diag_.size()); }
  std::span<const double> diag() const { return diag_; }
  std::span<const double> offdiag() const { return offdiag_; }

  // Grows the matrix from order 0 to order 1.
  void append(double v);
  // Grows the matrix by one order, committing the off-diagonal entry
  // that couples the new row to the previous one.
  void append(double v, double w_prev);

 private:
  std::vector<double> diag_;
  std::vector<double> offdiag_;
};

}  // namespace diraclanczos
