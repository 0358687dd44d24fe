// SPDX-License-Identifier: MIT
//
// Normalized circle homeomorphisms h(e^{iu}) = e^{i phi(u)} represented by
// lift samples on the uniform grid, the exponential-flow construction
// h_t = exp(i phi_t) with phi_t'(u) proportional to e^{t b(u)}, and the
// sampled boundary maps consumed by the extension solver.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bext/grid.hpp"
#include "bext/trig_poly.hpp"

namespace bext {

/// Geometric mean normalizer c(t) = (1/t) log (1/2pi) int_0^{2pi} e^{t b(u)} du,
/// continuously extended by c(0) = mean(b).  Evaluated with a log-sum-exp
/// rectangle rule (spectrally accurate for trigonometric polynomials).
inline double normalizer_c(const TrigPolynomial& b, double t,
                           int quad_points = 4096) {
  if (t == 0.0) return b.b0();
  if (std::abs(t) * b.sup_bound() > 500.0)
    throw std::invalid_argument(
        "normalizer_c: |t|*sup|b| exceeds exp overflow guard (500)");
  double m = -1e300;
  std::vector<double> tb(quad_points);
  for (int k = 0; k < quad_points; ++k) {
    tb[k] = t * b(two_pi * k / quad_points);
    if (tb[k] > m) m = tb[k];
  }
  double s = 0.0;
  for (int k = 0; k < quad_points; ++k) s += std::exp(tb[k] - m);
  return (m + std::log(s / quad_points)) / t;
}

/// Increasing lift phi: [0,2pi] -> [0,2pi] with phi(0)=0, phi(2pi)=2pi,
/// sampled uniformly and evaluated off-grid with a monotone (PCHIP) cubic.
/// The periodic extension phi(u + 2pi m) = phi(u) + 2pi m is built in.
class CircleHomeo {
 public:
  /// phi holds M+1 samples phi(u_k), k=0..M.  Validates the normalization
  /// (phi(0)=0 within 1e-12, phi(2pi)=2pi within 1e-8, strictly increasing),
  /// then pins the endpoints exactly so serialization round-trips.
  explicit CircleHomeo(std::vector<double> phi) : phi_(std::move(phi)) {
    if (phi_.size() < 5)
      throw std::invalid_argument("CircleHomeo: need at least 4 cells");
    M_ = static_cast<int>(phi_.size()) - 1;
    if (std::abs(phi_.front()) > 1e-12)
      throw std::invalid_argument("CircleHomeo: phi(0) must be 0");
    if (std::abs(phi_.back() - two_pi) > 1e-8)
      throw std::invalid_argument("CircleHomeo: phi(2pi) must be 2*pi");
    for (int k = 0; k < M_; ++k)
      if (!(phi_[k + 1] > phi_[k]))
        throw std::invalid_argument("CircleHomeo: lift must strictly increase");
    phi_.front() = 0.0;
    phi_.back() = two_pi;
    build_slopes();
  }

  static CircleHomeo identity(int M = 4096) {
    std::vector<double> phi(M + 1);
    for (int k = 0; k <= M; ++k) phi[k] = two_pi * k / M;
    return CircleHomeo(std::move(phi));
  }

  int grid_size() const { return M_; }
  const std::vector<double>& samples() const { return phi_; }
  double phi_node(int k) const { return phi_[k]; }

  /// Lift value at arbitrary u (monotone cubic between grid samples).
  double phi(double u) const {
    double cycles = std::floor(u / two_pi);
    double t = u - two_pi * cycles;
    if (t >= two_pi) { t -= two_pi; cycles += 1.0; }  // guard rounding at 2pi
    const double h = two_pi / M_;
    int k = static_cast<int>(t / h);
    if (k >= M_) k = M_ - 1;
    const double x = t - k * h;
    // cubic Hermite on [0, h]
    const double p0 = phi_[k], p1 = phi_[k + 1];
    const double m0 = slope_[k], m1 = slope_[k + 1];
    const double s = x / h;
    const double s2 = s * s, s3 = s2 * s;
    const double val = (2 * s3 - 3 * s2 + 1) * p0 + (s3 - 2 * s2 + s) * h * m0 +
                       (-2 * s3 + 3 * s2) * p1 + (s3 - s2) * h * m1;
    return val + two_pi * cycles;
  }

  /// Boundary value h(e^{iu}) = e^{i phi(u)}.
  cplx operator()(double u) const {
    double p = phi(u);
    return cplx(std::cos(p), std::sin(p));
  }

 private:
  void build_slopes() {
    const double h = two_pi / M_;
    std::vector<double> d(M_);
    for (int k = 0; k < M_; ++k) d[k] = (phi_[k + 1] - phi_[k]) / h;
    slope_.assign(M_ + 1, 0.0);
    auto hm = [](double a, double b) {
      // Fritsch-Butland harmonic mean; secants are positive by monotonicity,
      // the guard keeps the interpolant monotone even for degenerate input.
      if (a * b <= 0.0) return 0.0;
      return 2.0 * a * b / (a + b);
    };
    for (int k = 1; k < M_; ++k) slope_[k] = hm(d[k - 1], d[k]);
    slope_[0] = hm(d[M_ - 1], d[0]);  // periodic wrap
    slope_[M_] = slope_[0];
  }

  int M_ = 0;
  std::vector<double> phi_;    // size M+1
  std::vector<double> slope_;  // size M+1, PCHIP slopes
};

/// Flow map h_t: lift phi_t(u) = int_0^u e^{t b(v) - t c(t)} dv with c(t)
/// chosen so that phi_t(2pi) = 2pi.  Integration is cumulative per-cell
/// 5-point Gauss-Legendre, which is exact to machine precision for these
/// integrands and preserves strict monotonicity (positive integrand).
/// t = 0 returns the exact identity grid, no tolerance involved.
inline CircleHomeo flow_homeo(const TrigPolynomial& b, double t,
                              int grid_size = 4096) {
  if (t == 0.0) return CircleHomeo::identity(grid_size);
  if (std::abs(t) * b.sup_bound() > 500.0)
    throw std::invalid_argument(
        "flow_homeo: |t|*sup|b| exceeds exp overflow guard (500)");
  const double c = normalizer_c(b, t, grid_size);
  // 5-point Gauss-Legendre nodes/weights on [-1, 1]
  static const double gx[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                               0.5384693101056831, 0.9061798459386640};
  static const double gw[5] = {0.2369268850561891, 0.4786286704993665,
                               0.5688888888888889, 0.4786286704993665,
                               0.2369268850561891};
  const int M = grid_size;
  const double h = two_pi / M;
  std::vector<double> phi(M + 1);
  phi[0] = 0.0;
  for (int k = 0; k < M; ++k) {
    const double a = h * k;
    double cell = 0.0;
    for (int g = 0; g < 5; ++g) {
      const double v = a + 0.5 * h * (gx[g] + 1.0);
      cell += gw[g] * std::exp(t * (b(v) - c));
    }
    phi[k + 1] = phi[k] + 0.5 * h * cell;
  }
  if (std::abs(phi[M] - two_pi) > 1e-8)
    throw std::invalid_argument(
        "flow_homeo: normalized flow failed to close the circle");
  return CircleHomeo(std::move(phi));
}

/// Boundary data for the extension solver: unit-circle values h(e^{iu_k})
/// together with the grid nodes e^{iu_k}.  This is the common currency for
/// normalized homeomorphisms, Mobius boundary restrictions, and their
/// compositions (which in general fix no point and so admit no normalized
/// lift representation).
struct BoundaryMap {
  std::vector<cplx> h;  ///< boundary values
  std::vector<cplx> e;  ///< grid nodes e^{iu_k}

  int size() const { return static_cast<int>(h.size()); }

  static BoundaryMap identity(int Q = 4096) {
    BoundaryMap bm;
    bm.e = circle_nodes(Q);
    bm.h = bm.e;
    return bm;
  }

  static BoundaryMap from_values(std::vector<cplx> values) {
    BoundaryMap bm;
    bm.e = circle_nodes(static_cast<int>(values.size()));
    bm.h = std::move(values);
    return bm;
  }
};

/// Sample a normalized homeomorphism on the Q-point grid.  When Q matches
/// the lift's own grid the boundary values come straight from the samples;
/// otherwise the monotone cubic is evaluated.
inline BoundaryMap boundary_map(const CircleHomeo& hom, int Q = 0) {
  if (Q == 0) Q = hom.grid_size();
  BoundaryMap bm;
  bm.e = circle_nodes(Q);
  bm.h.resize(Q);
  if (Q == hom.grid_size()) {
    for (int k = 0; k < Q; ++k) {
      double p = hom.phi_node(k);
      bm.h[k] = cplx(std::cos(p), std::sin(p));
    }
  } else {
    for (int k = 0; k < Q; ++k) bm.h[k] = hom(two_pi * k / Q);
  }
  return bm;
}

}  // namespace bext
