#include "diraclanczos/tridiag_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "diraclanczos/errors.hpp"
#include "diraclanczos/kernels/kernels.hpp"

namespace diraclanczos {

namespace {

// Implicit-shift QL sweeps on (d, e) with plane rotations accumulated
// into z (n x n, column j = eigenvector j). Classic tql2 scheme.
void ql_implicit(std::vector<double>& d, std::vector<double>& e,
                 std::vector<double>& z, int n) {
  constexpr int kMaxSweeps = 50;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int sweeps = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (sweeps++ == kMaxSweeps) {
          throw NumericalError("tridiagonal QL failed to converge");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            // Deflate and restart the sweep for this l.
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = z[k * n + i + 1];
            z[k * n + i + 1] = s * z[k * n + i] + c * f;
            z[k * n + i] = c * z[k * n + i] - s * f;
          }
        }
        if (r == 0.0 && m - 1 >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

std::vector<RitzPair> eigen_tridiag(const TridiagonalMatrix& t) {
  const int n = t.order();
  std::vector<RitzPair> out;
  if (n == 0) return out;

  std::vector<double> d(t.diag().begin(), t.diag().end());
  std::vector<double> e(t.offdiag().begin(), t.offdiag().end());
  e.resize(static_cast<std::size_t>(n), 0.0);
  std::vector<double> z(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i) * n + i] = 1.0;

  ql_implicit(d, e, z, n);

  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });

  out.reserve(static_cast<std::size_t>(n));
  for (int j : idx) {
    RitzPair pair;
    pair.value = d[j];
    pair.iteration = n;
    pair.coeffs.resize(static_cast<std::size_t>(n));
    double nrm2 = 0.0;
    int peak = 0;
    for (int k = 0; k < n; ++k) {
      const double c = z[static_cast<std::size_t>(k) * n + j];
      pair.coeffs[static_cast<std::size_t>(k)] = c;
      nrm2 += c * c;
      if (std::abs(c) > std::abs(pair.coeffs[static_cast<std::size_t>(peak)]))
        peak = k;
    }
    if (!(nrm2 > 0.0) || !std::isfinite(nrm2)) {
      throw NumericalError("QL produced a degenerate eigenvector");
    }
    // Unit norm, and a fixed sign convention (largest component positive)
    // so repeated runs serialize identically.
    double scale = 1.0 / std::sqrt(nrm2);
    if (pair.coeffs[static_cast<std::size_t>(peak)] < 0.0) scale = -scale;
    for (auto& c : pair.coeffs) c *= scale;
    out.push_back(std::move(pair));
  }
  return out;
}

std::vector<double> ritz_coords(const RitzPair& pair,
                                const LanczosState& state) {
  const int n = state.order();
  if (pair.iteration != n ||
      pair.coeffs.size() != static_cast<std::size_t>(n)) {
    throw IterationMismatchError(
        "Ritz pair belongs to a different iteration than the state");
  }
  if (n < 1) throw IterationMismatchError("state has no completed steps");
  const auto basis = state.basis();
  std::vector<double> v(basis[0].size(), 0.0);
  const auto& ops = kernels::active_ops();
  for (int m = 0; m < n; ++m) {
    ops.axpy(pair.coeffs[static_cast<std::size_t>(m)], basis[m].data(),
             v.data(), v.size());
  }
  return v;
}

Spinor ritz_vector(const RitzPair& pair, const LanczosState& state) {
  const auto* sp = dynamic_cast<const SpinorSpace*>(&state.space());
  if (sp == nullptr) {
    throw InvalidStateError("ritz_vector needs a spinor-space state");
  }
  return Spinor(sp->grid_ptr(), ritz_coords(pair, state));
}

}  // namespace diraclanczos
