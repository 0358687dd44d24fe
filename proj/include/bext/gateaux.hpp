// SPDX-License-Identifier: MIT
//
// Directional derivative of the barycentric extension at the identity,
// in the direction of the exponential flow generated by a mean-zero
// trigonometric polynomial b.  Two independent evaluations:
//
//  * direct: quadrature of the boundary-integral formula
//      de(z) = -(1-|z|^2)^2/(2 pi i) int 3 e^{2iu} B(u) / (1 - conj(z) e^{iu})^4 du
//    with B the exact antiderivative of b;
//
//  * fourier: the same integral collapsed by power-series algebra to
//      de(z) = (i/2) (1-|z|^2)^2 conj(G(z)),   G = (z F)''' ,
//    where F is the analytic primitive of b.  This route is exact up to
//    coefficient arithmetic, so it doubles as the reference for the
//    finite-difference checks.
//
// For b = cos(n u) both reduce to -(1-|z|^2)^2 (n^2-1) conj(z)^{n-2} / 4.

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bext/barycentric.hpp"
#include "bext/carleson.hpp"
#include "bext/circle_homeo.hpp"
#include "bext/grid.hpp"
#include "bext/laurent.hpp"
#include "bext/trig_poly.hpp"

namespace bext {

/// Boundary-integral route.
inline cplx gateaux_direct(const TrigPolynomial& b, cplx z,
                           int quad_points = 4096) {
  if (!b.mean_zero())
    throw std::invalid_argument("gateaux_direct: b must be mean-zero");
  if (!(std::abs(z) < 1.0))
    throw std::invalid_argument("gateaux_direct: |z| must be < 1");
  const Antiderivative B(b, 4);  // grid cache unused here; evaluator is exact
  const cplx zb = std::conj(z);
  cplx s{};
  for (int k = 0; k < quad_points; ++k) {
    const double u = two_pi * k / quad_points;
    const cplx e(std::cos(u), std::sin(u));
    const cplx d = 1.0 - zb * e;
    const cplx d2 = d * d;
    const cplx e2 = e * e;
    s += e2 * B(u) / (d2 * d2);
  }
  s *= 3.0 / static_cast<double>(quad_points);
  const double w = 1.0 - std::norm(z);
  return cplx(0.0, 1.0) * (w * w) * s;  // -1/i = i
}

/// Power-series route: G = (z F)''' evaluated termwise.
inline cplx gateaux_fourier(const TrigPolynomial& b, cplx z) {
  if (!(std::abs(z) < 1.0))
    throw std::invalid_argument("gateaux_fourier: |z| must be < 1");
  const LaurentSeries F = cauchy_primitive(b);  // validates mean-zero
  const LaurentSeries G =
      F.shifted(1).derivative().derivative().derivative();
  const double w = 1.0 - std::norm(z);
  return cplx(0.0, 0.5) * (w * w) * std::conj(G(z));
}

/// Closed form for cosine directions b = cos(n u); n = 1 gives identically 0.
inline cplx gateaux_cosine_closed_form(int n, cplx z) {
  if (n < 1) throw std::invalid_argument("gateaux_cosine_closed_form: n >= 1");
  if (n == 1) return {};
  cplx zp = 1.0;
  for (int p = 0; p < n - 2; ++p) zp *= std::conj(z);
  const double w = 1.0 - std::norm(z);
  return -0.25 * (w * w) * static_cast<double>(n * n - 1) * zp;
}

/// Report of the finite-difference consistency check at one point z:
/// slopes mu_t/t for a decreasing t-ladder, two-point Richardson
/// extrapolation in t, the exact differential, and the observed convergence
/// order of the slopes measured against the exact value.
struct FiniteDiffReport {
  cplx z{};
  std::vector<double> t;
  std::vector<cplx> mu_over_t;
  cplx extrapolated{};
  cplx closed_form{};
  double abs_error = 0.0;
  double observed_order = 0.0;
};

inline FiniteDiffReport finite_diff_check(const TrigPolynomial& b, cplx z,
                                          std::vector<double> ts,
                                          const ExtendOptions& opt = {},
                                          int quad_points = 4096) {
  if (ts.size() < 2)
    throw std::invalid_argument("finite_diff_check: need at least two t values");
  for (double t : ts)
    if (!(t > 0.0))
      throw std::invalid_argument("finite_diff_check: t values must be > 0");
  FiniteDiffReport rep;
  rep.z = z;
  rep.t = std::move(ts);
  for (double t : rep.t) {
    const CircleHomeo h = flow_homeo(b, t, quad_points);
    const cplx mu = dilatation(boundary_map(h), z, opt);
    rep.mu_over_t.push_back(mu / t);
  }
  const std::size_t k = rep.t.size() - 1;
  const double t1 = rep.t[k - 1], t2 = rep.t[k];
  const cplx s1 = rep.mu_over_t[k - 1], s2 = rep.mu_over_t[k];
  rep.extrapolated = (t1 * s2 - t2 * s1) / (t1 - t2);
  rep.closed_form = gateaux_fourier(b, z);
  rep.abs_error = std::abs(rep.extrapolated - rep.closed_form);
  const double e1 = std::abs(s1 - rep.closed_form);
  const double e2 = std::abs(s2 - rep.closed_form);
  rep.observed_order =
      (e1 > 0 && e2 > 0) ? std::log(e1 / e2) / std::log(t1 / t2)
                         : std::numeric_limits<double>::quiet_NaN();
  return rep;
}

/// Square-modulus density |de(z)|^2 / (1 - |z|^2) sampled on a polar grid.
/// The differential's closed structure makes this equal to
/// (1/4) |G(z)|^2 (1 - |z|^2)^3; both expressions are evaluated and must
/// agree to roundoff, which guards the series algebra.
inline RadialGridMeasure fefferman_stein_density(const TrigPolynomial& b,
                                                 int nr = 64, int ntheta = 128,
                                                 double r_hi = 1.0) {
  const LaurentSeries F = cauchy_primitive(b);
  const LaurentSeries G =
      F.shifted(1).derivative().derivative().derivative();
  RadialGridMeasure m(Domain::disk, nr, ntheta, 0.0, r_hi);
  for (int j = 0; j < nr; ++j) {
    const double r = m.radius(j);
    const double w = 1.0 - r * r;
    for (int k = 0; k < ntheta; ++k) {
      const cplx z = std::polar(r, m.angle(k));
      const cplx g = G(z);
      const cplx de = cplx(0.0, 0.5) * (w * w) * std::conj(g);
      const double d1 = std::norm(de) / w;
      const double d2 = 0.25 * std::norm(g) * (w * w * w);
      if (std::abs(d1 - d2) > 1e-10 * std::max(1.0, d1))
        throw std::logic_error(
            "fefferman_stein_density: square-modulus identity violated");
      m.at(j, k) = d1;
    }
  }
  return m;
}

}  // namespace bext
