// SPDX-License-Identifier: MIT
//
// Batch command-line front end.  Subcommands parse JSON/CSV inputs, run the
// numerical kernels, and emit grids (CSV) or reports (JSON).  Everything is
// deterministic: identical argv + input files + seed produce byte-identical
// output.  Exit codes: 0 success, 2 invalid input, 3 numerical failure.

#pragma once

#include <cmath>
#include <complex>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bext/barycentric.hpp"
#include "bext/bmo.hpp"
#include "bext/carleson.hpp"
#include "bext/circle_homeo.hpp"
#include "bext/errors.hpp"
#include "bext/gateaux.hpp"
#include "bext/grid.hpp"
#include "bext/io.hpp"
#include "bext/mobius.hpp"
#include "bext/schwarzian.hpp"
#include "bext/trig_poly.hpp"

namespace bext {
namespace cli {

struct GlobalOpts {
  int quad_points = 4096;
  double newton_tol = 1e-12;
  std::uint64_t seed = 12345;
  std::string out;  // output path; empty = stdout
};

namespace detail {

inline cplx parse_cplx(const std::string& s) {
  std::istringstream ss(s);
  double re = 0, im = 0;
  char comma = 0;
  if (!(ss >> re)) throw std::invalid_argument("expected complex as re,im: " + s);
  if (ss >> comma) {
    if (comma != ',' || !(ss >> im))
      throw std::invalid_argument("expected complex as re,im: " + s);
  }
  return {re, im};
}

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') { out.push_back(cur); cur.clear(); }
    else cur.push_back(ch);
  }
  out.push_back(cur);
  return out;
}

struct GridSpec {
  int nr = 32, ntheta = 64;
  double r_max = 0.95;
};

inline GridSpec parse_grid(const std::string& s, double default_r_max) {
  GridSpec g;
  g.r_max = default_r_max;
  if (s.empty()) return g;
  auto cells = split_commas(s);
  if (cells.size() < 2 || cells.size() > 3)
    throw std::invalid_argument("grid spec must be nr,ntheta[,r_max]: " + s);
  g.nr = std::stoi(cells[0]);
  g.ntheta = std::stoi(cells[1]);
  if (cells.size() == 3) g.r_max = std::stod(cells[2]);
  return g;
}

inline std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  for (const auto& c : split_commas(s)) out.push_back(std::stod(c));
  return out;
}

/// Load boundary data: .csv lift samples, or a JSON description
/// {"kind": "identity"|"flow"|"mobius"|"samples", ...}.
inline CircleHomeo load_homeo(const std::string& path, const GlobalOpts& g) {
  const std::string body = read_text_file(path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
    std::istringstream in(body);
    return read_homeo_csv(in);
  }
  const json j = json::parse(body);
  const std::string kind = j.value("kind", "");
  if (kind == "identity") {
    return CircleHomeo::identity(j.value("M", g.quad_points));
  } else if (kind == "flow") {
    if (!j.contains("b") || !j.contains("t"))
      throw std::invalid_argument("flow homeo needs \"b\" and \"t\"");
    return flow_homeo(trig_polynomial_from_json(j["b"]), j["t"].get<double>(),
                      j.value("M", g.quad_points));
  } else if (kind == "mobius") {
    if (!j.contains("a"))
      throw std::invalid_argument("mobius homeo needs \"a\": [re, im]");
    MobiusDisk mob(cplx_from_json(j["a"]), j.value("theta", 0.0));
    return mobius_homeo(mob, j.value("M", g.quad_points));
  } else if (kind == "samples") {
    if (!j.contains("phi"))
      throw std::invalid_argument("samples homeo needs \"phi\": [values]");
    std::vector<double> phi = j["phi"].get<std::vector<double>>();
    phi.push_back(two_pi);  // endpoint implied by normalization
    return CircleHomeo(std::move(phi));
  }
  throw std::invalid_argument(
      "homeo json needs \"kind\": identity|flow|mobius|samples");
}

inline void emit(const GlobalOpts& g, const std::string& body) {
  if (g.out.empty()) std::cout << body;
  else write_text_file(g.out, body);
}

inline void emit_report(const GlobalOpts& g, const json& rep) {
  emit(g, rep.dump(2) + "\n");
}

}  // namespace detail

/// Entry point; argv-style arguments without the program name.
inline int run(const std::vector<std::string>& args) {
  GlobalOpts g;
  CLI::App app{"barycentric extension toolkit"};
  app.require_subcommand(1);
  app.add_option("--quad-points", g.quad_points,
                 "quadrature grid size (default 4096)");
  app.add_option("--newton-tol", g.newton_tol,
                 "Newton residual tolerance (default 1e-12)");
  app.add_option("--seed", g.seed, "seed for randomized diagnostics");
  app.add_option("--out", g.out, "output file (default: stdout)");

  // ---- extend ----
  std::string ext_homeo, ext_grid;
  auto* c_ext = app.add_subcommand(
      "extend", "extension field of boundary data over a polar grid");
  c_ext->add_option("--homeo", ext_homeo, "boundary data (.json or .csv)")
      ->required();
  c_ext->add_option("--grid", ext_grid, "nr,ntheta[,r_max] (default 32,64,0.95)");

  // ---- dilatation ----
  std::string dil_b, dil_grid;
  double dil_t = 0.0;
  auto* c_dil = app.add_subcommand(
      "dilatation", "complex dilatation field of the flow-map extension");
  c_dil->add_option("--b", dil_b, "direction (trig polynomial JSON)")->required();
  c_dil->add_option("--t", dil_t, "flow time")->required();
  c_dil->add_option("--grid", dil_grid, "nr,ntheta[,r_max] (default 32,64,0.95)");

  // ---- gateaux ----
  std::string gat_b, gat_grid, gat_route = "both";
  auto* c_gat = app.add_subcommand(
      "gateaux", "differential of the extension at the identity");
  c_gat->add_option("--b", gat_b, "direction (trig polynomial JSON)")->required();
  c_gat->add_option("--route", gat_route, "direct|fourier|both (default both)");
  c_gat->add_option("--grid", gat_grid, "nr,ntheta[,r_max] (default 32,64,0.9)");

  // ---- gateaux-check ----
  std::string chk_b, chk_z = "0.5,0", chk_t = "1e-2,1e-3";
  auto* c_chk = app.add_subcommand(
      "gateaux-check",
      "finite-difference consistency of the differential at one point");
  c_chk->add_option("--b", chk_b, "direction (trig polynomial JSON)")->required();
  c_chk->add_option("--z", chk_z, "evaluation point re,im (default 0.5,0)");
  c_chk->add_option("--t", chk_t, "decreasing flow times (default 1e-2,1e-3)");

  // ---- carleson ----
  std::string car_measure;
  auto* c_car = app.add_subcommand(
      "carleson", "Carleson box norm and vanishing profile of a measure");
  c_car->add_option("--measure", car_measure, "measure CSV")->required();

  // ---- bmo ----
  std::string bmo_f;
  auto* c_bmo = app.add_subcommand(
      "bmo", "dyadic mean-oscillation estimate for uniform samples");
  c_bmo->add_option("--f", bmo_f, "sample CSV (column f, or u,f)")->required();

  // ---- schwarzian ----
  std::string sch_series, sch_z = "0,0";
  bool sch_norms = false;
  auto* c_sch = app.add_subcommand(
      "schwarzian", "Schwarzian derivative of a Laurent series at a point");
  c_sch->add_option("--series", sch_series, "Laurent series JSON")->required();
  c_sch->add_option("--z", sch_z, "evaluation point re,im");
  c_sch->add_flag("--norms", sch_norms,
                  "include hyperbolic sup norm and quadratic Carleson norm");

  // ---- naturality ----
  double nat_t = 1e-2;
  int nat_trials = 5;
  auto* c_nat = app.add_subcommand(
      "naturality",
      "randomized conformal-naturality diagnostic for the extension");
  c_nat->add_option("--t", nat_t, "flow time (default 1e-2)");
  c_nat->add_option("--trials", nat_trials, "number of random pairs (default 5)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    ExtendOptions opt;
    opt.newton_tol = g.newton_tol;

    if (*c_ext) {
      const auto gs = detail::parse_grid(ext_grid, 0.95);
      const CircleHomeo h = detail::load_homeo(ext_homeo, g);
      const BoundaryMap bm = boundary_map(h, g.quad_points);
      opt.r_max = std::max(opt.r_max, gs.r_max);
      const DiskGrid field =
          extension_field(bm, gs.r_max, gs.nr, gs.ntheta, opt);
      std::ostringstream out;
      write_field_csv(out, field, {g.quad_points, g.newton_tol});
      detail::emit(g, out.str());
    } else if (*c_dil) {
      const auto gs = detail::parse_grid(dil_grid, 0.95);
      const TrigPolynomial b =
          trig_polynomial_from_json(json::parse(read_text_file(dil_b)));
      const CircleHomeo h = flow_homeo(b, dil_t, g.quad_points);
      const DiskGrid field =
          dilatation_field(boundary_map(h), gs.r_max, gs.nr, gs.ntheta, opt);
      std::ostringstream out;
      write_field_csv(out, field, {g.quad_points, g.newton_tol});
      detail::emit(g, out.str());
    } else if (*c_gat) {
      if (gat_route != "direct" && gat_route != "fourier" && gat_route != "both")
        throw std::invalid_argument("--route must be direct|fourier|both");
      const auto gs = detail::parse_grid(gat_grid, 0.9);
      const TrigPolynomial b =
          trig_polynomial_from_json(json::parse(read_text_file(gat_b)));
      DiskGrid field(gs.r_max, gs.nr, gs.ntheta);
      double max_diff = 0.0;
      for (int j = 0; j < gs.nr; ++j)
        for (int k = 0; k < gs.ntheta; ++k) {
          const cplx z = field.node(j, k);
          cplx v;
          if (gat_route == "direct") {
            v = gateaux_direct(b, z, g.quad_points);
          } else if (gat_route == "fourier") {
            v = gateaux_fourier(b, z);
          } else {
            const cplx vd = gateaux_direct(b, z, g.quad_points);
            const cplx vf = gateaux_fourier(b, z);
            max_diff = std::max(max_diff, std::abs(vd - vf));
            v = vf;
          }
          field.at(j, k) = v;
        }
      json rep;
      rep["route"] = gat_route;
      rep["grid"] = {{"nr", gs.nr}, {"ntheta", gs.ntheta}, {"r_max", gs.r_max}};
      if (gat_route == "both") rep["max_route_diff"] = max_diff;
      if (!g.out.empty()) {
        std::ostringstream out;
        write_field_csv(out, field, {g.quad_points, g.newton_tol});
        write_text_file(g.out, out.str());
        rep["grid_csv"] = g.out;
      }
      std::cout << rep.dump(2) << "\n";
    } else if (*c_chk) {
      const TrigPolynomial b =
          trig_polynomial_from_json(json::parse(read_text_file(chk_b)));
      const cplx z = detail::parse_cplx(chk_z);
      const auto rep = finite_diff_check(b, z, detail::parse_doubles(chk_t),
                                         opt, g.quad_points);
      json j;
      j["z"] = to_json(rep.z);
      j["t"] = rep.t;
      json slopes = json::array();
      for (const auto& s : rep.mu_over_t) slopes.push_back(to_json(s));
      j["mu_over_t"] = std::move(slopes);
      j["extrapolated"] = to_json(rep.extrapolated);
      j["closed_form"] = to_json(rep.closed_form);
      j["abs_error"] = rep.abs_error;
      j["observed_order"] = rep.observed_order;
      detail::emit_report(g, j);
    } else if (*c_car) {
      std::istringstream in(read_text_file(car_measure));
      const RadialGridMeasure m = read_measure_csv(in);
      const auto profile = vanishing_profile(m);
      json rep;
      rep["domain"] = (m.domain == Domain::disk) ? "disk" : "exterior";
      double best = 0.0;
      json prof = json::array();
      for (const auto& [r, s] : profile) {
        prof.push_back(json::array({r, s}));
        best = std::max(best, s);
      }
      rep["carleson_norm"] = best;
      rep["profile"] = std::move(prof);
      detail::emit_report(g, rep);
    } else if (*c_bmo) {
      std::istringstream in(read_text_file(bmo_f));
      const std::vector<double> f = read_samples_csv(in);
      json rep;
      rep["bmo_norm"] = bmo_norm(f);
      rep["samples"] = f.size();
      detail::emit_report(g, rep);
    } else if (*c_sch) {
      const LaurentSeries f =
          laurent_from_json(json::parse(read_text_file(sch_series)));
      const cplx z = detail::parse_cplx(sch_z);
      json rep;
      rep["z"] = to_json(z);
      rep["schwarzian"] = to_json(schwarzian(f, z));
      if (sch_norms) {
        rep["hyp_sup_norm"] = hyp_sup_norm(f);
        rep["curly_b_norm"] = curly_b_norm(f);
      }
      detail::emit_report(g, rep);
    } else if (*c_nat) {
      // E(tau o h o alpha) vs tau o E(h) o alpha over a small z-sample
      const TrigPolynomial b =
          TrigPolynomial::cosine(2) + TrigPolynomial::sine(3, 0.5);
      const CircleHomeo h = flow_homeo(b, nat_t, g.quad_points);
      const BoundaryMap bm = boundary_map(h);
      Rng rng(g.seed);
      double worst = 0.0;
      for (int trial = 0; trial < nat_trials; ++trial) {
        const MobiusDisk alpha = MobiusDisk::random(rng, 0.4);
        const MobiusDisk tau = MobiusDisk::random(rng, 0.4);
        const BoundaryMap comp = compose_boundary(tau, h, alpha, g.quad_points);
        for (double r : {0.3, 0.6})
          for (int k = 0; k < 8; ++k) {
            const cplx z = std::polar(r, two_pi * k / 8);
            const cplx lhs = extend(comp, z, opt);
            const cplx rhs = tau(extend(bm, alpha(z), opt));
            worst = std::max(worst, std::abs(lhs - rhs));
          }
      }
      json rep;
      rep["t"] = nat_t;
      rep["trials"] = nat_trials;
      rep["seed"] = g.seed;
      rep["max_deviation"] = worst;
      detail::emit_report(g, rep);
    }
    return 0;
  } catch (const NonConvergence& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const DegenerateJacobian& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const CriticalPoint& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const OriginSingularity& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace cli
}  // namespace bext
