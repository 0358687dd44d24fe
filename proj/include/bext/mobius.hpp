// SPDX-License-Identifier: MIT
//
// Disk automorphisms alpha(z) = e^{i theta} (z - a)/(1 - conj(a) z) and the
// boundary compositions used by the conformal-naturality identities.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "bext/circle_homeo.hpp"
#include "bext/grid.hpp"

namespace bext {

struct MobiusDisk {
  cplx a{};          ///< preimage of 0, |a| < 1
  double theta = 0;  ///< boundary rotation

  MobiusDisk() = default;
  MobiusDisk(cplx a_, double theta_) : a(a_), theta(theta_) {
    if (std::abs(a) >= 1.0)
      throw std::invalid_argument("MobiusDisk: |a| must be < 1");
  }

  cplx operator()(cplx z) const {
    return std::polar(1.0, theta) * (z - a) / (1.0 - std::conj(a) * z);
  }

  /// alpha^{-1}(w) = (e^{-i theta} w + a) / (1 + conj(a) e^{-i theta} w).
  MobiusDisk inverse() const {
    // alpha^{-1} in the same normal form: rotation by -theta then the
    // automorphism with parameter -a e^{-i theta}:
    //   alpha^{-1}(w) = e^{-i theta}(w - (-a e^{i theta}...))
    // easier to verify directly via operator() of the returned map.
    MobiusDisk inv;
    inv.a = -a * std::polar(1.0, theta);
    inv.theta = -theta;
    return inv;
  }

  static MobiusDisk identity() { return MobiusDisk(); }

  /// Area-uniform random parameter with |a| <= a_max, uniform rotation.
  static MobiusDisk random(Rng& rng, double a_max = 0.6) {
    double r = a_max * std::sqrt(rng.uniform());
    double psi = rng.uniform(0.0, two_pi);
    double th = rng.uniform(0.0, two_pi);
    return MobiusDisk(std::polar(r, psi), th);
  }
};

/// Boundary samples of tau ∘ h ∘ alpha on the uniform Q-grid.  alpha and tau
/// are evaluated exactly; the lift of h is evaluated with its monotone cubic
/// at the pulled-back angles.
inline BoundaryMap compose_boundary(const MobiusDisk& tau, const CircleHomeo& h,
                                    const MobiusDisk& alpha, int Q = 4096) {
  BoundaryMap bm;
  bm.e = circle_nodes(Q);
  bm.h.resize(Q);
  for (int k = 0; k < Q; ++k) {
    const cplx zeta = alpha(bm.e[k]);      // unit modulus up to roundoff
    double beta = std::atan2(zeta.imag(), zeta.real());
    if (beta < 0) beta += two_pi;
    const double p = h.phi(beta);
    bm.h[k] = tau(cplx(std::cos(p), std::sin(p)));
  }
  return bm;
}

/// Rotation-normalized lift of a Mobius boundary restriction:
/// phi(u) = arg alpha(e^{iu}) - arg alpha(1), unwrapped to a strictly
/// increasing function with phi(0) = 0, phi(2pi) = 2pi.  (The rotation
/// renormalization keeps the result inside the normalized-homeomorphism
/// type; the map is still exactly Mobius up to rotation.)
inline CircleHomeo mobius_homeo(const MobiusDisk& alpha, int M = 4096) {
  std::vector<double> phi(M + 1);
  double prev = 0.0, lift = 0.0;
  const cplx w0 = alpha(cplx(1.0, 0.0));
  const double a0 = std::atan2(w0.imag(), w0.real());
  for (int k = 0; k <= M; ++k) {
    const double u = two_pi * k / M;
    const cplx w = alpha(cplx(std::cos(u), std::sin(u)));
    double ang = std::atan2(w.imag(), w.real()) - a0;
    // unwrap: increments of a homeomorphism lift stay well inside (+-pi)
    // for any reasonable M
    while (ang < prev - pi) ang += two_pi;
    while (ang > prev + pi) ang -= two_pi;
    lift = ang;
    phi[k] = lift;
    prev = ang;
  }
  return CircleHomeo(std::move(phi));
}

}  // namespace bext
