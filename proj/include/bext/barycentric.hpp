// SPDX-License-Identifier: MIT
//
// Conformal barycenter machinery.  For boundary data h and z in the disk,
// the extension w = E(h)(z) is the unique root of the vector field
//
//   F(z, w) = (1/2pi) int_0^{2pi} (h - w)/(1 - conj(w) h) * P_z(u) du,
//
// with P_z the Poisson kernel.  One fused quadrature pass evaluates F and
// the four Wirtinger partials; the root is found by a damped 2x2 Newton
// iteration seeded with the harmonic (Poisson) average of h, and the
// complex dilatation of the extension is the quotient of two determinant
// combinations of those partials.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "bext/circle_homeo.hpp"
#include "bext/errors.hpp"
#include "bext/grid.hpp"

namespace bext {

struct ExtendOptions {
  double newton_tol = 1e-12;  ///< stop when |F| drops below this
  int max_iter = 50;
  double r_max = 0.95;        ///< admissible evaluation radius
};

/// F and its Wirtinger partials at (z, w).
struct BarycenterDerivatives {
  cplx F{}, F_z{}, F_zbar{}, F_w{}, F_wbar{};
};

namespace detail {

inline void check_zw(const cplx& z, const cplx& w, double r_max) {
  if (!(std::abs(z) < r_max))
    throw std::invalid_argument("barycentric: |z| must be < r_max (" +
                                std::to_string(r_max) + ")");
  if (!(std::abs(w) < 1.0 - 1e-9))
    throw std::invalid_argument("barycentric: |w| must be < 1 - 1e-9");
}

/// Poisson kernel samples P_z(u_k) = (1 - |z|^2)/|z - e^{iu_k}|^2.
/// Cached per z and reused across Newton iterations.
inline void poisson_weights(const BoundaryMap& bm, cplx z,
                            std::vector<double>& P) {
  const int Q = bm.size();
  P.resize(Q);
  const double num = 1.0 - std::norm(z);
  for (int k = 0; k < Q; ++k) P[k] = num / std::norm(z - bm.e[k]);
}

inline cplx residual_cached(const BoundaryMap& bm, cplx w,
                            const std::vector<double>& P) {
  const int Q = bm.size();
  const cplx wb = std::conj(w);
  cplx acc{};
  for (int k = 0; k < Q; ++k) {
    const cplx h = bm.h[k];
    acc += P[k] * (h - w) / (1.0 - wb * h);
  }
  return acc / static_cast<double>(Q);
}

struct NewtonPass {
  cplx F{}, F_w{}, F_wbar{};
};

/// Fused pass: F, F_w = -(1/2pi) int P/(1 - conj(w) h),
/// F_wbar = (1/2pi) int h (h - w)/(1 - conj(w) h)^2 * P.
inline NewtonPass newton_pass(const BoundaryMap& bm, cplx w,
                              const std::vector<double>& P) {
  const int Q = bm.size();
  const cplx wb = std::conj(w);
  cplx F{}, Fw{}, Fwb{};
  for (int k = 0; k < Q; ++k) {
    const cplx h = bm.h[k];
    const cplx inv_d = 1.0 / (1.0 - wb * h);
    const cplx Pd = P[k] * inv_d;
    const cplx gP = (h - w) * Pd;
    F += gP;
    Fw -= Pd;
    Fwb += h * gP * inv_d;
  }
  const double q = static_cast<double>(Q);
  return {F / q, Fw / q, Fwb / q};
}

}  // namespace detail

/// Barycenter residual F(z, w).
inline cplx residual(const BoundaryMap& bm, cplx z, cplx w,
                     double r_max = 0.95) {
  detail::check_zw(z, w, r_max);
  std::vector<double> P;
  detail::poisson_weights(bm, z, P);
  return detail::residual_cached(bm, w, P);
}

/// F and all four Wirtinger partials in one quadrature sweep.
/// The z-kernels pair up by conjugation: with K = e^{iu}/(z - e^{iu})^2,
/// F_z integrates g*K and F_zbar integrates g*conj(K), where
/// g = (h - w)/(1 - conj(w) h).
inline BarycenterDerivatives derivatives_at(const BoundaryMap& bm, cplx z,
                                            cplx w, double r_max = 0.95) {
  detail::check_zw(z, w, r_max);
  const int Q = bm.size();
  const double num = 1.0 - std::norm(z);
  const cplx wb = std::conj(w);
  cplx F{}, Fz{}, Fzb{}, Fw{}, Fwb{};
  for (int k = 0; k < Q; ++k) {
    const cplx e = bm.e[k];
    const cplx h = bm.h[k];
    const cplx dz = z - e;
    const double P = num / std::norm(dz);
    const cplx inv_d = 1.0 / (1.0 - wb * h);
    const cplx g = (h - w) * inv_d;
    const cplx K = e / (dz * dz);
    F += g * P;
    Fz += g * K;
    Fzb += g * std::conj(K);
    Fw -= P * inv_d;
    Fwb += h * g * inv_d * P;
  }
  const double q = static_cast<double>(Q);
  return {F / q, Fz / q, Fzb / q, Fw / q, Fwb / q};
}

/// Barycentric extension E(h)(z): damped Newton on w.  The harmonic average
/// seed is already the exact root for Mobius boundary data (up to spectral
/// quadrature error), so the iteration typically confirms convergence
/// immediately; general smooth data takes a handful of steps.
inline cplx extend(const BoundaryMap& bm, cplx z,
                   const ExtendOptions& opt = {}) {
  if (!(std::abs(z) < opt.r_max))
    throw std::invalid_argument("extend: |z| must be < r_max");
  std::vector<double> P;
  detail::poisson_weights(bm, z, P);
  const int Q = bm.size();
  cplx w{};
  for (int k = 0; k < Q; ++k) w += bm.h[k] * P[k];
  w /= static_cast<double>(Q);
  if (std::abs(w) > 1.0 - 1e-9) w *= (1.0 - 1e-9) / std::abs(w);

  double Fn = 0.0;
  for (int it = 0; it < opt.max_iter; ++it) {
    const auto p = detail::newton_pass(bm, w, P);
    Fn = std::abs(p.F);
    if (Fn < opt.newton_tol) return w;
    // solve F_w d + F_wbar conj(d) = -F for the Newton step d
    const double det = std::norm(p.F_w) - std::norm(p.F_wbar);
    const cplx step = (p.F_wbar * std::conj(p.F) - p.F * std::conj(p.F_w)) / det;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag()))
      throw NonConvergence("extend: singular Newton system", z, Fn, it);
    double lam = 1.0;
    cplx w_next = w + step;
    for (;;) {
      if (std::abs(w_next) < 1.0 - 1e-9 &&
          std::abs(detail::residual_cached(bm, w_next, P)) < Fn)
        break;
      lam *= 0.5;
      if (lam < 0x1p-20)
        throw NonConvergence("extend: damping failed to reduce |F|", z, Fn, it);
      w_next = w + lam * step;
    }
    w = w_next;
  }
  // final residual check after the last update
  const double fin = std::abs(detail::residual_cached(bm, w, P));
  if (fin < opt.newton_tol) return w;
  throw NonConvergence("extend: iteration limit reached", z, fin, opt.max_iter);
}

/// Beltrami quotient mu = N/D from the four partials:
///   N = conj(F_z) F_wbar - F_zbar conj(F_w)
///   D = conj(F_zbar) F_wbar - F_z conj(F_w).
/// D ~ 1/(1-|z|^2)^2 for near-conformal data, so |D| < 1e-12 signals a
/// genuinely degenerate Jacobian rather than roundoff.
inline cplx mu_from_derivatives(const BarycenterDerivatives& d, cplx z) {
  const cplx N = std::conj(d.F_z) * d.F_wbar - d.F_zbar * std::conj(d.F_w);
  const cplx D = std::conj(d.F_zbar) * d.F_wbar - d.F_z * std::conj(d.F_w);
  if (std::abs(D) < 1e-12)
    throw DegenerateJacobian("dilatation: |D| below 1e-12", z);
  return N / D;
}

/// Complex dilatation of the extension at z.
inline cplx dilatation(const BoundaryMap& bm, cplx z,
                       const ExtendOptions& opt = {}) {
  const cplx w = extend(bm, z, opt);
  return mu_from_derivatives(derivatives_at(bm, z, w, opt.r_max), z);
}

/// Cell-centered polar evaluation grid: r_j = r_max (j + 1/2)/nr,
/// theta_k = 2 pi k / ntheta, values stored row-major by radius.
struct DiskGrid {
  double r_max = 0.95;
  int nr = 0, ntheta = 0;
  std::vector<cplx> value;

  DiskGrid() = default;
  DiskGrid(double r_max_, int nr_, int ntheta_)
      : r_max(r_max_), nr(nr_), ntheta(ntheta_),
        value(static_cast<std::size_t>(nr_) * ntheta_) {
    if (!(r_max > 0.0) || !(r_max < 1.0))
      throw std::invalid_argument("DiskGrid: need 0 < r_max < 1");
    if (nr < 1 || ntheta < 4)
      throw std::invalid_argument("DiskGrid: need nr >= 1, ntheta >= 4");
  }

  double radius(int j) const { return r_max * (j + 0.5) / nr; }
  double angle(int k) const { return two_pi * k / ntheta; }
  cplx node(int j, int k) const { return std::polar(radius(j), angle(k)); }
  cplx& at(int j, int k) { return value[static_cast<std::size_t>(j) * ntheta + k]; }
  const cplx& at(int j, int k) const {
    return value[static_cast<std::size_t>(j) * ntheta + k];
  }
};

/// Extension sampled over a polar grid.
inline DiskGrid extension_field(const BoundaryMap& bm, double r_max, int nr,
                                int ntheta, const ExtendOptions& opt = {}) {
  ExtendOptions o = opt;
  o.r_max = std::max(o.r_max, r_max);  // an explicit grid defines its own reach
  DiskGrid g(r_max, nr, ntheta);
  for (int j = 0; j < nr; ++j)
    for (int k = 0; k < ntheta; ++k) g.at(j, k) = extend(bm, g.node(j, k), o);
  return g;
}

/// Dilatation sampled over a polar grid.  Per-node failures are collected;
/// if any node fails the whole field throws, reporting the count and the
/// first failing node.
inline DiskGrid dilatation_field(const BoundaryMap& bm, double r_max, int nr,
                                 int ntheta, const ExtendOptions& opt = {}) {
  ExtendOptions o = opt;
  o.r_max = std::max(o.r_max, r_max);
  DiskGrid g(r_max, nr, ntheta);
  int failures = 0;
  cplx first_bad{};
  double first_res = 0.0;
  for (int j = 0; j < nr; ++j)
    for (int k = 0; k < ntheta; ++k) {
      try {
        g.at(j, k) = dilatation(bm, g.node(j, k), o);
      } catch (const NonConvergence& e) {
        if (failures++ == 0) { first_bad = e.z; first_res = e.residual_norm; }
      } catch (const DegenerateJacobian& e) {
        if (failures++ == 0) first_bad = e.z;
      }
    }
  if (failures > 0)
    throw NonConvergence(
        "dilatation_field: " + std::to_string(failures) +
            " node(s) failed; first at z = (" + std::to_string(first_bad.real()) +
            ", " + std::to_string(first_bad.imag()) + ")",
        first_bad, first_res, opt.max_iter);
  return g;
}

// Convenience overloads taking a lift directly; the boundary grid is the
// lift's own.  Composed boundary data (Mobius conjugations etc.) should go
// through BoundaryMap instead.
inline cplx residual(const CircleHomeo& h, cplx z, cplx w,
                     double r_max = 0.95) {
  return residual(boundary_map(h), z, w, r_max);
}
inline BarycenterDerivatives derivatives_at(const CircleHomeo& h, cplx z,
                                            cplx w, double r_max = 0.95) {
  return derivatives_at(boundary_map(h), z, w, r_max);
}
inline cplx extend(const CircleHomeo& h, cplx z,
                   const ExtendOptions& opt = {}) {
  return extend(boundary_map(h), z, opt);
}
inline cplx dilatation(const CircleHomeo& h, cplx z,
                       const ExtendOptions& opt = {}) {
  return dilatation(boundary_map(h), z, opt);
}
inline DiskGrid extension_field(const CircleHomeo& h, double r_max, int nr,
                                int ntheta, const ExtendOptions& opt = {}) {
  return extension_field(boundary_map(h), r_max, nr, ntheta, opt);
}
inline DiskGrid dilatation_field(const CircleHomeo& h, double r_max, int nr,
                                 int ntheta, const ExtendOptions& opt = {}) {
  return dilatation_field(boundary_map(h), r_max, nr, ntheta, opt);
}

}  // namespace bext
