// SPDX-License-Identifier: MIT
//
// The differential of the extension operator at the identity: quadrature
// route vs series route vs monomial closed forms, finite-difference
// consistency, and the induced boundary density.

#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "bext/carleson.hpp"
#include "bext/gateaux.hpp"
#include "bext/grid.hpp"
#include "bext/trig_poly.hpp"

using namespace bext;

TEST_CASE("cosine directions hit the closed form via both routes") {
  // b = cos(nu):  de(z) = -(1 - |z|^2)^2 (n^2 - 1) conj(z)^{n-2} / 4,
  // identically zero for n = 1.
  const std::vector<cplx> zs = {cplx(0, 0), cplx(0.5, 0), cplx(-0.3, 0.6),
                                cplx(0.1, -0.85)};
  for (int n = 1; n <= 5; ++n) {
    TrigPolynomial b = TrigPolynomial::cosine(n);
    for (cplx z : zs) {
      const cplx exact = gateaux_cosine_closed_form(n, z);
      CHECK(std::abs(gateaux_direct(b, z) - exact) < 1e-10);
      CHECK(std::abs(gateaux_fourier(b, z) - exact) < 1e-13);
      if (n == 1) CHECK(exact == cplx(0.0, 0.0));
    }
  }
}

TEST_CASE("frozen reference values for cos 2u") {
  TrigPolynomial b = TrigPolynomial::cosine(2);
  CHECK(std::abs(gateaux_direct(b, cplx(0, 0)) - cplx(-0.75, 0)) < 1e-12);
  CHECK(std::abs(gateaux_direct(b, cplx(0.5, 0)) - cplx(-0.421875, 0)) <
        1e-12);
}

TEST_CASE("sine directions are the cosine values rotated by i") {
  for (int n = 2; n <= 4; ++n) {
    TrigPolynomial b = TrigPolynomial::sine(n);
    for (cplx z : {cplx(0, 0), cplx(0.5, 0), cplx(0.3, -0.4)}) {
      const cplx expected = cplx(0, 1) * gateaux_cosine_closed_form(n, z);
      CHECK(std::abs(gateaux_direct(b, z, 2048) - expected) < 1e-10);
      CHECK(std::abs(gateaux_fourier(b, z) - expected) < 1e-13);
    }
  }
}

TEST_CASE("routes agree on a mixed direction over a z sweep") {
  TrigPolynomial b = TrigPolynomial::sine(2) +
                     TrigPolynomial::cosine(4, 0.5) +
                     TrigPolynomial::sine(5, -0.25);
  double worst = 0.0;
  for (int j = 0; j < 6; ++j)
    for (int k = 0; k < 8; ++k) {
      const cplx z = std::polar(0.15 * j, two_pi * k / 8);
      worst = std::max(worst,
                       std::abs(gateaux_direct(b, z) - gateaux_fourier(b, z)));
    }
  CHECK(worst < 1e-10);
}

TEST_CASE("mean-zero requirement is enforced") {
  CHECK_THROWS_AS(gateaux_direct(TrigPolynomial(0.3, {}), cplx(0, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(gateaux_fourier(TrigPolynomial(0.3, {}), cplx(0, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(gateaux_direct(TrigPolynomial::cosine(2), cplx(1.0, 0)),
                  std::invalid_argument);
}

TEST_CASE("finite-difference slopes converge to the differential") {
  TrigPolynomial b = TrigPolynomial::cosine(2);
  const cplx z(0.5, 0.0);
  const std::vector<double> ts = {1e-2, 1e-3};
  const auto rep = finite_diff_check(b, z, ts, {}, 2048);
  REQUIRE(rep.mu_over_t.size() == 2);
  // slope errors against the closed form shrink with t
  const cplx exact(-0.421875, 0.0);
  const double e1 = std::abs(rep.mu_over_t[0] - exact);
  const double e2 = std::abs(rep.mu_over_t[1] - exact);
  CHECK(e1 < 3e-4);
  CHECK(e2 < 3e-5);
  CHECK(e2 < e1 / 5);
  // Richardson extrapolation lands much closer than either slope
  CHECK(rep.abs_error < 1e-6);
  CHECK(rep.abs_error < e2 / 10);
  // the slope error is first order in t
  CHECK(rep.observed_order == doctest::Approx(1.0).epsilon(0.05));
  CHECK(std::abs(rep.closed_form - exact) < 1e-12);
}

TEST_CASE("finite-difference harness validates its input") {
  TrigPolynomial b = TrigPolynomial::cosine(2);
  CHECK_THROWS_AS(finite_diff_check(b, cplx(0.2, 0), {1e-2}, {}, 512),
                  std::invalid_argument);
  CHECK_THROWS_AS(finite_diff_check(b, cplx(0.2, 0), {1e-2, -1e-3}, {}, 512),
                  std::invalid_argument);
}

TEST_CASE("boundary density identity and quadratic scaling") {
  // density(z) = |de(z)|^2 / (1 - |z|^2) computed two ways inside
  // fefferman_stein_density (it throws if they disagree); for b = cos 2u
  // the value is (9/16)(1 - r^2)^3.
  TrigPolynomial b = TrigPolynomial::cosine(2);
  const RadialGridMeasure m = fefferman_stein_density(b, 16, 32);
  for (int j = 0; j < 16; ++j) {
    const double r = m.radius(j);
    const double expect = (9.0 / 16.0) * std::pow(1 - r * r, 3);
    for (int k = 0; k < 32; ++k) {
      CHECK(m.at(j, k) == doctest::Approx(expect).epsilon(1e-12));
    }
  }
  // scaling b -> a b multiplies the density by a^2 exactly
  const RadialGridMeasure m3 = fefferman_stein_density(b.scaled(3.0), 16, 32);
  for (int j = 0; j < 16; ++j)
    for (int k = 0; k < 32; ++k)
      CHECK(m3.at(j, k) == doctest::Approx(9 * m.at(j, k)).epsilon(1e-12));
  // and the Carleson norm of the density measure by a^2 as well
  CHECK(carleson_norm(m3) ==
        doctest::Approx(9 * carleson_norm(m)).epsilon(1e-12));
}
