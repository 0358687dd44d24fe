// SPDX-License-Identifier: MIT
//
// Schwarzian derivative of finite Laurent series, hyperbolic sup norms of
// coefficient fields on the disk or its exterior, the Carleson-flavored
// quadratic norm on the exterior, and the reflected Beltrami coefficient
// mu(z) = -(1/2)(1-|z|^2)^2 phi(1/conj(z)) conj(z)^{-4}.

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bext/carleson.hpp"
#include "bext/errors.hpp"
#include "bext/grid.hpp"
#include "bext/laurent.hpp"

namespace bext {

/// S_f(z) = f'''/f' - (3/2)(f''/f')^2, termwise-differentiated series.
/// Throws CriticalPoint where f' is numerically zero relative to the
/// higher derivatives.
inline cplx schwarzian(const LaurentSeries& f, cplx z) {
  const LaurentSeries f1 = f.derivative();
  const LaurentSeries f2 = f1.derivative();
  const LaurentSeries f3 = f2.derivative();
  const cplx v1 = f1(z), v2 = f2(z), v3 = f3(z);
  const double scale = 1.0 + std::abs(v2) + std::abs(v3);
  if (std::abs(v1) <= 1e-14 * scale)
    throw CriticalPoint("schwarzian: f'(z) vanishes", z);
  const cplx q = v2 / v1;
  return v3 / v1 - 1.5 * q * q;
}

namespace detail {

/// Max of |phi|^2 over a sampled circle of radius r (512 angles).  Squared
/// values are used throughout the norm estimators so that doubling phi
/// scales every intermediate by exactly 4 and the final sqrt by exactly 2.
inline double ring_max_norm(const LaurentSeries& phi, double r,
                            int angles = 512) {
  double best = 0.0;
  for (int k = 0; k < angles; ++k) {
    const double n = std::norm(phi(std::polar(r, two_pi * k / angles)));
    if (n > best) best = n;
  }
  return best;
}

}  // namespace detail

/// Hyperbolic sup norm sup |phi(z)| rho(z)^{-2} with rho the hyperbolic
/// density: rho = (1-|z|^2)^{-1} on the disk, (|z|^2-1)^{-1} outside.
/// Finite Laurent data admits an exact divergence rule in place of a
/// growth heuristic: on the disk any surviving negative power blows up at
/// the origin faster than the weight vanishes; on the exterior the weight
/// grows like |z|^4, so any surviving power above z^{-4} diverges at
/// infinity, z^{-4} itself contributes its coefficient modulus as the limit
/// value, and lower powers fade.  The interior sup is sampled on rings
/// refined geometrically toward the boundary.
inline double hyp_sup_norm(const LaurentSeries& phi) {
  if (phi.is_zero()) return 0.0;
  double best2 = 0.0;  // running max of weight^2 * |phi|^2
  if (phi.domain() == Domain::disk) {
    if (phi.lowest_degree() < 0)
      return std::numeric_limits<double>::infinity();
    // rings r = 0 and r = 1 - 2^{-k/4}: polynomial * (1-r^2)^2 peaks
    // strictly inside, the refinement toward r = 1 is cheap insurance
    for (int k = 0; k <= 80; ++k) {
      const double delta = std::pow(2.0, -0.25 * k);
      const double r = (k == 0) ? 0.0 : 1.0 - delta;
      const double w = 1.0 - r * r;
      const double v2 = (w * w) * (w * w) * detail::ring_max_norm(phi, r);
      if (v2 > best2) best2 = v2;
    }
  } else {
    const int top = phi.highest_degree(std::numeric_limits<int>::min());
    if (top > -4) return std::numeric_limits<double>::infinity();
    if (top == -4) {
      const double a = std::norm(phi.coeff(-4));
      if (a > best2) best2 = a;  // exact limit value at infinity
    }
    // rings s = 1 + delta, delta geometric from 1e-6 to ~1e3
    for (int k = 0; k <= 120; ++k) {
      const double delta = 1e-6 * std::pow(2.0, 0.25 * k);
      const double s = 1.0 + delta;
      const double w = s * s - 1.0;
      const double v2 = (w * w) * (w * w) * detail::ring_max_norm(phi, s);
      if (v2 > best2) best2 = v2;
    }
  }
  return std::sqrt(best2);
}

/// Carleson norm of the quadratic density |phi|^2 * weight^3, the weight
/// being (|z|^2-1)^3 outside the circle and (1-|z|^2)^3 inside.  This gauge
/// is 2-homogeneous in phi by construction.  Exterior grids are truncated
/// at r_hi (the density's far tail is excluded; values are comparable only
/// at fixed extent, and refinement means more cells at the same extent).
inline double curly_b_norm(const LaurentSeries& phi, int nr = 64,
                           int ntheta = 128, double r_hi = 0.0,
                           int centers = 256) {
  const bool ext = (phi.domain() == Domain::exterior);
  const double lo = ext ? 1.0 : 0.0;
  const double hi = (r_hi > 0.0) ? r_hi : (ext ? 4.0 : 1.0);
  RadialGridMeasure m(phi.domain(), nr, ntheta, lo, hi);
  for (int j = 0; j < nr; ++j) {
    const double r = m.radius(j);
    const double w = ext ? (r * r - 1.0) : (1.0 - r * r);
    const double w3 = w * w * w;
    for (int k = 0; k < ntheta; ++k)
      m.at(j, k) = std::norm(phi(std::polar(r, m.angle(k)))) * w3;
  }
  return carleson_norm(m, centers);
}

/// Reflected Beltrami coefficient on the disk,
///   mu(z) = -(1/2) (1-|z|^2)^2 phi(1/conj(z)) conj(z)^{-4},
/// for phi given on the exterior.  At z = 0 the limit exists iff phi decays
/// at least like z^{-4}; the z^{-4} coefficient survives with factor -1/2,
/// anything slower is a pole (OriginSingularity).
inline cplx ahlfors_weill_mu(const LaurentSeries& phi, cplx z) {
  if (phi.domain() != Domain::exterior)
    throw std::invalid_argument("ahlfors_weill_mu: phi must live on the exterior");
  if (!(std::abs(z) < 1.0))
    throw std::invalid_argument("ahlfors_weill_mu: |z| must be < 1");
  if (z == cplx{}) {
    if (phi.highest_degree(std::numeric_limits<int>::min()) > -4)
      throw OriginSingularity(
          "ahlfors_weill_mu: phi decays slower than z^-4, pole at z = 0");
    return -0.5 * phi.coeff(-4);
  }
  const cplx zb = std::conj(z);
  const cplx zb2 = zb * zb;
  const double w = 1.0 - std::norm(z);
  return -0.5 * (w * w) * phi(1.0 / zb) / (zb2 * zb2);
}

}  // namespace bext
