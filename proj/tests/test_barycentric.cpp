// SPDX-License-Identifier: MIT
//
// Barycenter residual, its Wirtinger derivatives, the Newton extension, and
// the complex dilatation field.

#include <doctest.h>

#include <cmath>
#include <complex>

#include "bext/barycentric.hpp"
#include "bext/circle_homeo.hpp"
#include "bext/grid.hpp"
#include "bext/mobius.hpp"
#include "bext/trig_poly.hpp"

using namespace bext;

namespace {

double dist(cplx a, cplx b) { return std::abs(a - b); }

}  // namespace

TEST_CASE("residual closed form for identity boundary data") {
  // With h = id the integrand is a disk-holomorphic Mobius map of e^{iu},
  // so the Poisson average collapses to (z - w)/(1 - conj(w) z).
  BoundaryMap bm = BoundaryMap::identity(1024);
  const cplx z(0.3, 0.2), w(0.0, -0.4);
  const cplx expected = (z - w) / (1.0 - std::conj(w) * z);
  CHECK(dist(residual(bm, z, w), expected) < 1e-13);
  CHECK(dist(residual(bm, z, z), 0.0) < 1e-13);
}

TEST_CASE("derivatives at identity data reproduce the closed forms") {
  BoundaryMap bm = BoundaryMap::identity(2048);
  for (cplx z : {cplx(0.0, 0.0), cplx(0.5, 0.0), cplx(-0.3, 0.6)}) {
    const auto d = derivatives_at(bm, z, z);
    const double s = 1.0 / (1.0 - std::norm(z));
    CHECK(dist(d.F, 0.0) < 1e-12);
    CHECK(dist(d.F_z, s) < 1e-11 * s);
    CHECK(dist(d.F_w, -s) < 1e-11 * s);
    CHECK(dist(d.F_zbar, 0.0) < 1e-12);
    CHECK(dist(d.F_wbar, 0.0) < 1e-12);
  }
}

TEST_CASE("derivatives match central finite differences at order two") {
  // Wirtinger pairs against x / y central differences of the residual on
  // non-symmetric data: Dx = F_z + F_zbar, Dy = i (F_z - F_zbar), and the
  // same in w.  Errors must shrink quadratically down the step ladder.
  TrigPolynomial b = TrigPolynomial::cosine(2, 0.8) +
                     TrigPolynomial::sine(1, 0.5);
  BoundaryMap bm = boundary_map(flow_homeo(b, 0.3, 2048));
  const cplx z(0.35, -0.2), w(0.1, 0.4);
  const auto d = derivatives_at(bm, z, w);

  auto F = [&](cplx zz, cplx ww) { return residual(bm, zz, ww); };
  const cplx i(0, 1);
  double prev[4] = {0, 0, 0, 0};
  double order_min = 100.0;
  int rung = 0;
  for (double eps : {8e-4, 4e-4, 2e-4}) {
    const double cur[4] = {
        dist((F(z + eps, w) - F(z - eps, w)) / (2 * eps), d.F_z + d.F_zbar),
        dist((F(z + i * eps, w) - F(z - i * eps, w)) / (2 * eps),
             i * (d.F_z - d.F_zbar)),
        dist((F(z, w + eps) - F(z, w - eps)) / (2 * eps), d.F_w + d.F_wbar),
        dist((F(z, w + i * eps) - F(z, w - i * eps)) / (2 * eps),
             i * (d.F_w - d.F_wbar))};
    if (rung > 0)
      for (int q = 0; q < 4; ++q)
        order_min = std::min(order_min, std::log2(prev[q] / cur[q]));
    for (int q = 0; q < 4; ++q) prev[q] = cur[q];
    ++rung;
  }
  CHECK(order_min >= 1.9);
}

TEST_CASE("extension of the identity is the identity") {
  BoundaryMap bm = BoundaryMap::identity(1024);
  for (cplx z : {cplx(0.0, 0.0), cplx(0.7, 0.1), cplx(-0.2, -0.85)}) {
    CHECK(dist(extend(bm, z), z) < 1e-12);
  }
}

TEST_CASE("extension of Mobius boundary values is the Mobius map") {
  Rng rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    const MobiusDisk alpha = MobiusDisk::random(rng);
    BoundaryMap bm = BoundaryMap::identity(2048);
    for (std::size_t k = 0; k < bm.h.size(); ++k) bm.h[k] = alpha(bm.h[k]);
    for (cplx z : {cplx(0.1, 0.0), cplx(-0.5, 0.3), cplx(0.0, 0.9)}) {
      CHECK(dist(extend(bm, z), alpha(z)) < 1e-10);
      // conformal data: dilatation must vanish
      CHECK(std::abs(dilatation(bm, z)) < 1e-9);
    }
  }
}

TEST_CASE("newton reports non-convergence when starved of iterations") {
  TrigPolynomial b = TrigPolynomial::cosine(1, 1.2);
  BoundaryMap bm = boundary_map(flow_homeo(b, 0.8, 1024));
  ExtendOptions opt;
  opt.max_iter = 0;
  CHECK_THROWS_AS(extend(bm, cplx(0.4, 0.1), opt), NonConvergence);
  try {
    extend(bm, cplx(0.4, 0.1), opt);
  } catch (const NonConvergence& e) {
    CHECK(e.iterations == 0);
    CHECK(e.residual_norm > 0.0);
  }
}

TEST_CASE("evaluation domain is enforced") {
  BoundaryMap bm = BoundaryMap::identity(256);
  ExtendOptions opt;  // default reach r_max = 0.95
  CHECK_THROWS_AS(extend(bm, cplx(0.96, 0.0), opt), std::invalid_argument);
  CHECK_THROWS_AS(residual(bm, cplx(0.0, 0.0), cplx(1.0, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("degenerate jacobian is detected") {
  BarycenterDerivatives d{};  // all partials zero
  CHECK_THROWS_AS(mu_from_derivatives(d, cplx(0.1, 0.1)), DegenerateJacobian);
}

TEST_CASE("dilatation of a short flow is first-order small") {
  TrigPolynomial b = TrigPolynomial::cosine(2);
  const cplx z(0.5, 0.0);
  double prev = 0.0;
  for (double t : {1e-2, 1e-3}) {
    BoundaryMap bm = boundary_map(flow_homeo(b, t, 2048));
    const double m = std::abs(dilatation(bm, z));
    CHECK(m < 0.6 * t);  // |de(z)| ~ 0.42 here, so mu ~ 0.42 t
    CHECK(m > 0.3 * t);
    prev = m;
  }
  (void)prev;
}

TEST_CASE("extension and dilatation fields cover the grid") {
  TrigPolynomial b = TrigPolynomial::sine(2, 0.6);
  BoundaryMap bm = boundary_map(flow_homeo(b, 0.1, 1024));
  const DiskGrid ext = extension_field(bm, 0.8, 4, 8);
  const DiskGrid mu = dilatation_field(bm, 0.8, 4, 8);
  REQUIRE(ext.nr == 4);
  REQUIRE(ext.ntheta == 8);
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 8; ++k) {
      CHECK(std::abs(ext.at(j, k)) < 1.0);
      CHECK(std::abs(mu.at(j, k)) < 0.2);
      // spot-check against the pointwise entry points
      if (j == 2 && k == 3) {
        CHECK(dist(ext.at(j, k), extend(bm, ext.node(j, k))) < 1e-14);
        CHECK(dist(mu.at(j, k), dilatation(bm, mu.node(j, k))) < 1e-14);
      }
    }
}

TEST_CASE("field computation surfaces aggregate failures") {
  TrigPolynomial b = TrigPolynomial::cosine(1, 1.5);
  BoundaryMap bm = boundary_map(flow_homeo(b, 0.9, 512));
  ExtendOptions opt;
  opt.max_iter = 0;
  CHECK_THROWS_AS(dilatation_field(bm, 0.6, 2, 4, opt), NonConvergence);
}

TEST_CASE("lift-level overloads match the boundary-map entry points") {
  TrigPolynomial b = TrigPolynomial::cosine(2, 0.5);
  CircleHomeo h = flow_homeo(b, 0.2, 1024);
  BoundaryMap bm = boundary_map(h);
  const cplx z(0.4, -0.1), w(0.3, 0.2);
  CHECK(residual(h, z, w) == residual(bm, z, w));
  CHECK(extend(h, z) == extend(bm, z));
  CHECK(dilatation(h, z) == dilatation(bm, z));
  const auto d1 = derivatives_at(h, z, w);
  const auto d2 = derivatives_at(bm, z, w);
  CHECK(d1.F == d2.F);
  CHECK(d1.F_z == d2.F_z);
  CHECK(d1.F_wbar == d2.F_wbar);
  const DiskGrid f1 = extension_field(h, 0.7, 2, 4);
  const DiskGrid f2 = extension_field(bm, 0.7, 2, 4);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 4; ++k) CHECK(f1.at(j, k) == f2.at(j, k));
  const DiskGrid m1 = dilatation_field(h, 0.7, 2, 4);
  const DiskGrid m2 = dilatation_field(bm, 0.7, 2, 4);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 4; ++k) CHECK(m1.at(j, k) == m2.at(j, k));
}

TEST_CASE("conformal naturality of the extension") {
  // E(tau o h o alpha) = tau o E(h) o alpha
  TrigPolynomial b = TrigPolynomial::cosine(2) + TrigPolynomial::sine(3, 0.5);
  CircleHomeo h = flow_homeo(b, 1e-2, 2048);
  BoundaryMap bm = boundary_map(h);
  Rng rng(4242);
  const MobiusDisk alpha = MobiusDisk::random(rng, 0.4);
  const MobiusDisk tau = MobiusDisk::random(rng, 0.4);
  const BoundaryMap comp = compose_boundary(tau, h, alpha, 2048);
  for (cplx z : {cplx(0.0, 0.0), cplx(0.5, -0.3), cplx(-0.6, 0.2)}) {
    CHECK(dist(extend(comp, z), tau(extend(bm, alpha(z)))) < 1e-7);
  }
}
