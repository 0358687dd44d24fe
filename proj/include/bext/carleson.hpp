// SPDX-License-Identifier: MIT
//
// Carleson box geometry over polar grid measures.  The norm estimator is
// sup over boundary centers and a geometric radius ladder of
// (measure of the box) / radius; the ladder tops out at the closed diameter
// so finite measures report their exact total/2 there.  Exterior-domain
// measures are transported to the disk by the inversion z -> 1/conj(z)
// (cell masses carried to the inverted node positions, which is the same
// thing as applying the |w|^-4 density Jacobian).

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bext/barycentric.hpp"
#include "bext/grid.hpp"
#include "bext/laurent.hpp"

namespace bext {

/// Nonnegative density sampled on a cell-centered polar grid
/// r_j = r_lo + (j+1/2) dr, theta_k = 2 pi k / ntheta.  The measure of a
/// cell is density * r_j dr dtheta.  domain == exterior means the radii
/// live outside the unit circle (r_lo >= 1).
struct RadialGridMeasure {
  Domain domain = Domain::disk;
  int nr = 0, ntheta = 0;
  double r_lo = 0.0, r_hi = 1.0;
  std::vector<double> density;  // nr * ntheta, row-major by radius

  RadialGridMeasure() = default;
  RadialGridMeasure(Domain dom, int nr_, int ntheta_, double r_lo_, double r_hi_)
      : domain(dom), nr(nr_), ntheta(ntheta_), r_lo(r_lo_), r_hi(r_hi_),
        density(static_cast<std::size_t>(nr_) * ntheta_, 0.0) {
    validate();
  }

  void validate() const {
    if (nr < 1 || ntheta < 4)
      throw std::invalid_argument("RadialGridMeasure: need nr >= 1, ntheta >= 4");
    if (!(r_lo >= 0.0) || !(r_hi > r_lo))
      throw std::invalid_argument("RadialGridMeasure: need 0 <= r_lo < r_hi");
    if (domain == Domain::disk && r_hi > 1.0 + 1e-12)
      throw std::invalid_argument("RadialGridMeasure: disk grid must end at r <= 1");
    if (domain == Domain::exterior && r_lo < 1.0 - 1e-12)
      throw std::invalid_argument("RadialGridMeasure: exterior grid must start at r >= 1");
    if (density.size() != static_cast<std::size_t>(nr) * ntheta)
      throw std::invalid_argument("RadialGridMeasure: density size mismatch");
  }

  double dr() const { return (r_hi - r_lo) / nr; }
  double dtheta() const { return two_pi / ntheta; }
  double radius(int j) const { return r_lo + (j + 0.5) * dr(); }
  double angle(int k) const { return two_pi * k / ntheta; }
  double& at(int j, int k) { return density[static_cast<std::size_t>(j) * ntheta + k]; }
  double at(int j, int k) const { return density[static_cast<std::size_t>(j) * ntheta + k]; }
  double cell_area(int j) const { return radius(j) * dr() * dtheta(); }

  double total_mass() const {
    double m = 0.0;
    for (int j = 0; j < nr; ++j) {
      double row = 0.0;
      for (int k = 0; k < ntheta; ++k) row += at(j, k);
      m += row * cell_area(j);
    }
    return m;
  }

  static RadialGridMeasure from_density(Domain dom,
                                        const std::function<double(cplx)>& f,
                                        int nr, int ntheta, double r_lo,
                                        double r_hi) {
    RadialGridMeasure m(dom, nr, ntheta, r_lo, r_hi);
    for (int j = 0; j < nr; ++j)
      for (int k = 0; k < ntheta; ++k)
        m.at(j, k) = f(std::polar(m.radius(j), m.angle(k)));
    return m;
  }

  RadialGridMeasure scaled(double a) const {
    RadialGridMeasure m = *this;
    for (auto& v : m.density) v *= a;
    return m;
  }
};

namespace detail {

struct DiskNodes {
  std::vector<double> x, y, mass;
  double r_hi_node = 0.0;
};

/// Node positions and cell masses in the disk picture (inverting exterior
/// grids).  Node order is fixed (radius-major), which keeps every
/// accumulation below deterministic.
inline DiskNodes disk_nodes(const RadialGridMeasure& m) {
  m.validate();
  DiskNodes out;
  const int n = m.nr * m.ntheta;
  out.x.reserve(n); out.y.reserve(n); out.mass.reserve(n);
  for (int j = 0; j < m.nr; ++j) {
    const double rj = m.radius(j);
    const double r = (m.domain == Domain::exterior) ? 1.0 / rj : rj;
    const double area = m.cell_area(j);
    for (int k = 0; k < m.ntheta; ++k) {
      const double th = m.angle(k);
      out.x.push_back(r * std::cos(th));
      out.y.push_back(r * std::sin(th));
      out.mass.push_back(m.at(j, k) * area);
    }
    out.r_hi_node = std::max(out.r_hi_node, r);
  }
  return out;
}

/// Geometric radius ladder descending from the closed diameter by 1/sqrt(2)
/// down to twice the boundary gap of the grid, returned ascending.  Built
/// multiplicatively with a small slack so the bottom rung is deterministic.
inline std::vector<double> radius_ladder(double r_hi_node) {
  const double r_min = 2.0 * std::max(1.0 - r_hi_node, 1e-6);
  std::vector<double> rungs;
  double r = 2.0;
  while (r >= r_min * (1.0 - 1e-12)) {
    rungs.push_back(r);
    r /= std::sqrt(2.0);
  }
  if (rungs.empty()) rungs.push_back(2.0);
  std::reverse(rungs.begin(), rungs.end());
  return rungs;
}

}  // namespace detail

/// Per-radius boundary-box suprema: profile[i] = sup over centers of
/// lambda(box(center, r_i)) / r_i.  256 uniform boundary centers by default.
inline std::vector<std::pair<double, double>> vanishing_profile(
    const RadialGridMeasure& m, int centers = 256) {
  const auto nodes = detail::disk_nodes(m);
  const auto rungs = detail::radius_ladder(nodes.r_hi_node);
  const int R = static_cast<int>(rungs.size());
  const int n = static_cast<int>(nodes.mass.size());
  std::vector<double> sup(R, 0.0), bucket(R);
  std::vector<double> r2(R);
  for (int i = 0; i < R; ++i) r2[i] = rungs[i] * rungs[i];
  for (int c = 0; c < centers; ++c) {
    const double a = two_pi * c / centers;
    const double cx = std::cos(a), cy = std::sin(a);
    std::fill(bucket.begin(), bucket.end(), 0.0);
    for (int i = 0; i < n; ++i) {
      const double dx = nodes.x[i] - cx, dy = nodes.y[i] - cy;
      const double d2 = dx * dx + dy * dy;
      // smallest rung whose box contains the node
      const int idx = static_cast<int>(
          std::lower_bound(r2.begin(), r2.end(), d2) - r2.begin());
      if (idx < R) bucket[idx] += nodes.mass[i];
    }
    double cum = 0.0;
    for (int i = 0; i < R; ++i) {
      cum += bucket[i];
      const double q = cum / rungs[i];
      if (q > sup[i]) sup[i] = q;
    }
  }
  std::vector<std::pair<double, double>> profile(R);
  for (int i = 0; i < R; ++i) profile[i] = {rungs[i], sup[i]};
  return profile;
}

/// Carleson norm estimate: sup of the vanishing profile.
inline double carleson_norm(const RadialGridMeasure& m, int centers = 256) {
  double best = 0.0;
  for (const auto& [r, s] : vanishing_profile(m, centers))
    if (s > best) best = s;
  return best;
}

/// Measure |mu|^2/(1-|z|^2) dA attached to a dilatation field.
inline RadialGridMeasure dilatation_measure(const DiskGrid& field) {
  RadialGridMeasure m(Domain::disk, field.nr, field.ntheta, 0.0, field.r_max);
  for (int j = 0; j < field.nr; ++j) {
    const double r = field.radius(j);
    const double w = 1.0 / (1.0 - r * r);
    for (int k = 0; k < field.ntheta; ++k)
      m.at(j, k) = std::norm(field.at(j, k)) * w;
  }
  return m;
}

/// Weighted kernel transform on the disk:
///   (T lambda)(z) = int (1-|z|^2)^alpha (1-|w|^2)^beta / |1 - conj(z) w|^(alpha+beta+2)
///                   dlambda(w),
/// sampled on the measure's own grid.  Integer-exponent kernels avoid pow in
/// the inner loop (the alpha = beta = 1 case is the workhorse).
inline RadialGridMeasure kernel_transform(const RadialGridMeasure& m,
                                          double alpha = 1.0,
                                          double beta = 1.0) {
  m.validate();
  if (m.domain != Domain::disk)
    throw std::invalid_argument("kernel_transform: disk-domain measures only");
  const int n = m.nr * m.ntheta;
  std::vector<cplx> node(n);
  std::vector<double> mass(n), wfac(n);
  {
    int i = 0;
    for (int j = 0; j < m.nr; ++j) {
      const double area = m.cell_area(j);
      for (int k = 0; k < m.ntheta; ++k, ++i) {
        node[i] = std::polar(m.radius(j), m.angle(k));
        mass[i] = m.at(j, k) * area;
        wfac[i] = std::pow(1.0 - std::norm(node[i]), beta);
      }
    }
  }
  const double expo = 0.5 * (alpha + beta + 2.0);  // exponent on |1-zw|^2
  const int iexpo = static_cast<int>(expo);
  const bool int_expo = (expo == iexpo && iexpo >= 1 && iexpo <= 16);
  RadialGridMeasure out(m.domain, m.nr, m.ntheta, m.r_lo, m.r_hi);
  int i = 0;
  for (int j = 0; j < m.nr; ++j) {
    for (int k = 0; k < m.ntheta; ++k, ++i) {
      const cplx zb = std::conj(node[i]);
      double acc = 0.0;
      for (int l = 0; l < n; ++l) {
        const double q = std::norm(1.0 - zb * node[l]);
        double denom;
        if (int_expo) {
          denom = q;
          for (int p = 1; p < iexpo; ++p) denom *= q;
        } else {
          denom = std::pow(q, expo);
        }
        acc += wfac[l] * mass[l] / denom;
      }
      out.at(j, k) = std::pow(1.0 - std::norm(node[i]), alpha) * acc;
    }
  }
  return out;
}

}  // namespace bext
