// SPDX-License-Identifier: MIT
//
// Serialization round-trips: every writer/reader pair must reproduce doubles
// bit for bit through the 17-significant-digit text path.

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "bext/barycentric.hpp"
#include "bext/circle_homeo.hpp"
#include "bext/io.hpp"
#include "bext/trig_poly.hpp"

using namespace bext;

TEST_CASE("seventeen-digit formatting round-trips doubles") {
  for (double x : {0.1, 1.0 / 3.0, pi, 2.2791709726598413, 1e-300, -0.0}) {
    CHECK(std::stod(fmt17(x)) == x);
  }
}

TEST_CASE("complex json round-trip") {
  const cplx z(0.12345678901234567, -9.87654321e-5);
  CHECK(cplx_from_json(to_json(z)) == z);
  CHECK_THROWS_AS(cplx_from_json(json::array({1.0})), std::invalid_argument);
}

TEST_CASE("trig polynomial json round-trip") {
  TrigPolynomial b = TrigPolynomial::cosine(2, 0.8) +
                     TrigPolynomial::sine(5, -1.0 / 3.0) +
                     TrigPolynomial(0.25, {});
  const TrigPolynomial r = trig_polynomial_from_json(to_json(b));
  CHECK(r.b0() == b.b0());
  REQUIRE(r.coeffs().size() == b.coeffs().size());
  for (std::size_t i = 0; i < r.coeffs().size(); ++i)
    CHECK(r.coeffs()[i] == b.coeffs()[i]);
  CHECK_THROWS_AS(trig_polynomial_from_json(json::object()),
                  std::invalid_argument);
}

TEST_CASE("laurent series json round-trip") {
  const LaurentSeries f(Domain::exterior, -4,
                        {cplx(1, 0), cplx(0, 0.5), cplx(-2, 1e-17)});
  const LaurentSeries r = laurent_from_json(to_json(f));
  CHECK(r.domain() == f.domain());
  CHECK(r.n_min() == f.n_min());
  REQUIRE(r.coeffs().size() == f.coeffs().size());
  for (std::size_t i = 0; i < r.coeffs().size(); ++i)
    CHECK(r.coeffs()[i] == f.coeffs()[i]);
  CHECK_THROWS_AS(laurent_from_json(json{{"domain", "plane"}}),
                  std::invalid_argument);
}

TEST_CASE("homeomorphism csv round-trip is bitwise") {
  const CircleHomeo h = flow_homeo(TrigPolynomial::cosine(1, 0.7), 0.4, 256);
  std::ostringstream out;
  write_homeo_csv(out, h);
  std::istringstream in(out.str());
  const CircleHomeo r = read_homeo_csv(in);
  REQUIRE(r.grid_size() == h.grid_size());
  for (int k = 0; k <= 256; ++k) CHECK(r.phi_node(k) == h.phi_node(k));
}

TEST_CASE("field csv round-trip is bitwise and carries metadata") {
  DiskGrid g(0.9, 3, 5);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 5; ++k)
      g.at(j, k) = cplx(std::sin(j + 1.0) / 3, std::cos(k + 2.0) / 7);
  std::ostringstream out;
  write_field_csv(out, g, {2048, 1e-11});
  std::istringstream in(out.str());
  FieldMeta meta;
  const DiskGrid r = read_field_csv(in, &meta);
  CHECK(meta.Q == 2048);
  CHECK(meta.newton_tol == 1e-11);
  REQUIRE(r.nr == 3);
  REQUIRE(r.ntheta == 5);
  CHECK(r.r_max == g.r_max);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 5; ++k) CHECK(r.at(j, k) == g.at(j, k));
}

TEST_CASE("measure csv round-trip is bitwise") {
  auto m = RadialGridMeasure::from_density(
      Domain::exterior, [](cplx w) { return 1.0 / std::norm(w); }, 4, 8, 1.0,
      3.0);
  std::ostringstream out;
  write_measure_csv(out, m);
  std::istringstream in(out.str());
  const RadialGridMeasure r = read_measure_csv(in);
  CHECK(r.domain == m.domain);
  CHECK(r.r_lo == m.r_lo);
  CHECK(r.r_hi == m.r_hi);
  REQUIRE(r.density.size() == m.density.size());
  for (std::size_t i = 0; i < r.density.size(); ++i)
    CHECK(r.density[i] == m.density[i]);
}

TEST_CASE("sample reader accepts one-column and labeled forms") {
  {
    std::istringstream in("f\n1.5\n2.5\n-0.25\n");
    const auto v = read_samples_csv(in);
    REQUIRE(v.size() == 3);
    CHECK(v[1] == 2.5);
  }
  {
    std::istringstream in("u,f\n0,1.5\n0.1,2.5\n");
    const auto v = read_samples_csv(in);
    REQUIRE(v.size() == 2);
    CHECK(v[1] == 2.5);
  }
  {
    std::istringstream in("a,b\n0,1\n");
    CHECK_THROWS_AS(read_samples_csv(in), std::invalid_argument);
  }
}

TEST_CASE("csv reader rejects wrong headers") {
  std::istringstream in("x,y\n0,0\n");
  CHECK_THROWS_AS(read_homeo_csv(in), std::invalid_argument);
  std::istringstream in2("r,theta,re\n0,0,0\n");
  CHECK_THROWS_AS(read_field_csv(in2), std::invalid_argument);
}
