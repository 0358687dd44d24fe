// SPDX-License-Identifier: MIT
//
// Shared grid helpers: the uniform circle grid used by every periodic
// quadrature in the library, and a deterministic uniform RNG wrapper.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace bext {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Grid angles u_k = 2*pi*k/Q, k = 0..Q-1.
inline std::vector<double> circle_angles(int Q) {
  if (Q < 4) throw std::invalid_argument("circle_angles: need Q >= 4");
  std::vector<double> u(Q);
  for (int k = 0; k < Q; ++k) u[k] = two_pi * k / Q;
  return u;
}

/// Unit-circle nodes e^{i u_k} on the uniform grid.
inline std::vector<cplx> circle_nodes(int Q) {
  if (Q < 4) throw std::invalid_argument("circle_nodes: need Q >= 4");
  std::vector<cplx> e(Q);
  for (int k = 0; k < Q; ++k) {
    double u = two_pi * k / Q;
    e[k] = cplx(std::cos(u), std::sin(u));
  }
  return e;
}

/// Deterministic uniform variates.  std::uniform_real_distribution is
/// implementation-defined, so outputs would not be reproducible across
/// standard libraries; this maps mt19937_64 words to [0,1) doubles directly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return (gen_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace bext
