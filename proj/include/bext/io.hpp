// SPDX-License-Identifier: MIT
//
// Serialization: JSON for coefficient data (trigonometric polynomials,
// Laurent series), '#'-headed CSV for sampled objects (lifts, disk grids,
// polar measures).  All floating-point output goes through "%.17g" so
// emit/parse round-trips reproduce doubles bit-exactly, and readers accept
// exactly what writers produce.

#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bext/barycentric.hpp"
#include "bext/carleson.hpp"
#include "bext/circle_homeo.hpp"
#include "bext/grid.hpp"
#include "bext/laurent.hpp"
#include "bext/trig_poly.hpp"

namespace bext {

using json = nlohmann::ordered_json;

inline std::string fmt17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---------------------------------------------------------------- JSON ----

inline json to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

inline cplx cplx_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex values must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

/// {"b0": <real>, "coeffs": [[re, im], ...]} with coeffs starting at n = 1.
inline json to_json(const TrigPolynomial& b) {
  json j;
  j["b0"] = b.b0();
  json c = json::array();
  for (const auto& cn : b.coeffs()) c.push_back(to_json(cn));
  j["coeffs"] = std::move(c);
  return j;
}

inline TrigPolynomial trig_polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs"))
    throw std::invalid_argument("trig polynomial: expected {b0, coeffs}");
  std::vector<cplx> c;
  for (const auto& e : j["coeffs"]) c.push_back(cplx_from_json(e));
  return TrigPolynomial(j.value("b0", 0.0), std::move(c));
}

/// {"domain": "disk"|"exterior", "n_min": <int>, "coeffs": [[re, im], ...]}.
inline json to_json(const LaurentSeries& f) {
  json j;
  j["domain"] = (f.domain() == Domain::disk) ? "disk" : "exterior";
  j["n_min"] = f.n_min();
  json c = json::array();
  for (const auto& a : f.coeffs()) c.push_back(to_json(a));
  j["coeffs"] = std::move(c);
  return j;
}

inline LaurentSeries laurent_from_json(const json& j) {
  if (!j.is_object() || !j.contains("domain") || !j.contains("n_min") ||
      !j.contains("coeffs"))
    throw std::invalid_argument("laurent series: expected {domain, n_min, coeffs}");
  const std::string d = j["domain"].get<std::string>();
  Domain dom;
  if (d == "disk") dom = Domain::disk;
  else if (d == "exterior") dom = Domain::exterior;
  else throw std::invalid_argument("laurent series: domain must be disk|exterior");
  std::vector<cplx> c;
  for (const auto& e : j["coeffs"]) c.push_back(cplx_from_json(e));
  return LaurentSeries(dom, j["n_min"].get<int>(), std::move(c));
}

// ----------------------------------------------------------------- CSV ----

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') { out.push_back(cur); cur.clear(); }
    else if (ch != '\r') cur.push_back(ch);
  }
  out.push_back(cur);
  return out;
}

struct CsvDoc {
  json header;                                  // from the '#' line, if any
  std::vector<std::string> columns;             // header row
  std::vector<std::vector<double>> rows;
};

inline CsvDoc parse_csv(std::istream& in) {
  CsvDoc doc;
  std::string line;
  bool have_cols = false;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    if (line[0] == '#') {
      std::string body = line.substr(1);
      const auto pos = body.find_first_not_of(" \t");
      if (pos != std::string::npos && body[pos] == '{')
        doc.header = json::parse(body);
      continue;
    }
    auto cells = split_csv_line(line);
    if (!have_cols) {
      doc.columns = cells;
      have_cols = true;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) {
      std::size_t used = 0;
      double v = std::stod(c, &used);
      row.push_back(v);
      (void)used;
    }
    doc.rows.push_back(std::move(row));
  }
  if (!have_cols) throw std::invalid_argument("csv: missing column header row");
  return doc;
}

}  // namespace detail

/// CircleHomeo CSV: "# {json}" + "u,phi" rows for k = 0..M-1 (the 2*pi
/// endpoint is implied by normalization).
inline void write_homeo_csv(std::ostream& out, const CircleHomeo& h) {
  json hdr;
  hdr["M"] = h.grid_size();
  out << "# " << hdr.dump() << "\n" << "u,phi\n";
  for (int k = 0; k < h.grid_size(); ++k)
    out << fmt17(two_pi * k / h.grid_size()) << "," << fmt17(h.phi_node(k))
        << "\n";
}

inline CircleHomeo read_homeo_csv(std::istream& in) {
  auto doc = detail::parse_csv(in);
  if (doc.columns.size() < 2 || doc.columns[0] != "u" || doc.columns[1] != "phi")
    throw std::invalid_argument("homeo csv: expected columns u,phi");
  const int M = static_cast<int>(doc.rows.size());
  std::vector<double> phi(M + 1);
  for (int k = 0; k < M; ++k) phi[k] = doc.rows[k][1];
  phi[M] = two_pi;
  return CircleHomeo(std::move(phi));
}

/// Solver parameters recorded in grid headers.
struct FieldMeta {
  int Q = 4096;
  double newton_tol = 1e-12;
};

/// DiskGrid CSV: "# {Q, newton_tol, r_max, nr, ntheta}" + "r,theta,re,im".
inline void write_field_csv(std::ostream& out, const DiskGrid& g,
                            const FieldMeta& meta) {
  json hdr;
  hdr["Q"] = meta.Q;
  hdr["newton_tol"] = meta.newton_tol;
  hdr["r_max"] = g.r_max;
  hdr["nr"] = g.nr;
  hdr["ntheta"] = g.ntheta;
  out << "# " << hdr.dump() << "\n" << "r,theta,re,im\n";
  for (int j = 0; j < g.nr; ++j)
    for (int k = 0; k < g.ntheta; ++k)
      out << fmt17(g.radius(j)) << "," << fmt17(g.angle(k)) << ","
          << fmt17(g.at(j, k).real()) << "," << fmt17(g.at(j, k).imag()) << "\n";
}

inline DiskGrid read_field_csv(std::istream& in, FieldMeta* meta = nullptr) {
  auto doc = detail::parse_csv(in);
  if (doc.header.is_null() || !doc.header.contains("nr"))
    throw std::invalid_argument("field csv: missing '# {...}' header");
  DiskGrid g(doc.header["r_max"].get<double>(), doc.header["nr"].get<int>(),
             doc.header["ntheta"].get<int>());
  if (doc.rows.size() != g.value.size())
    throw std::invalid_argument("field csv: row count does not match nr*ntheta");
  for (std::size_t i = 0; i < doc.rows.size(); ++i)
    g.value[i] = cplx(doc.rows[i][2], doc.rows[i][3]);
  if (meta) {
    meta->Q = doc.header.value("Q", 0);
    meta->newton_tol = doc.header.value("newton_tol", 0.0);
  }
  return g;
}

/// Measure CSV: "# {domain, nr, ntheta, r_lo, r_hi}" + "r,theta,density".
inline void write_measure_csv(std::ostream& out, const RadialGridMeasure& m) {
  json hdr;
  hdr["domain"] = (m.domain == Domain::disk) ? "disk" : "exterior";
  hdr["nr"] = m.nr;
  hdr["ntheta"] = m.ntheta;
  hdr["r_lo"] = m.r_lo;
  hdr["r_hi"] = m.r_hi;
  out << "# " << hdr.dump() << "\n" << "r,theta,density\n";
  for (int j = 0; j < m.nr; ++j)
    for (int k = 0; k < m.ntheta; ++k)
      out << fmt17(m.radius(j)) << "," << fmt17(m.angle(k)) << ","
          << fmt17(m.at(j, k)) << "\n";
}

inline RadialGridMeasure read_measure_csv(std::istream& in) {
  auto doc = detail::parse_csv(in);
  if (doc.header.is_null() || !doc.header.contains("domain"))
    throw std::invalid_argument("measure csv: missing '# {...}' header");
  const std::string d = doc.header["domain"].get<std::string>();
  RadialGridMeasure m((d == "exterior") ? Domain::exterior : Domain::disk,
                      doc.header["nr"].get<int>(),
                      doc.header["ntheta"].get<int>(),
                      doc.header["r_lo"].get<double>(),
                      doc.header["r_hi"].get<double>());
  if (doc.rows.size() != m.density.size())
    throw std::invalid_argument("measure csv: row count does not match nr*ntheta");
  for (std::size_t i = 0; i < doc.rows.size(); ++i) m.density[i] = doc.rows[i][2];
  return m;
}

/// Plain sample CSV for the oscillation estimator: either a single column
/// "f" or two columns "u,f" (u is ignored; samples are taken as uniform).
inline std::vector<double> read_samples_csv(std::istream& in) {
  auto doc = detail::parse_csv(in);
  int col = -1;
  for (std::size_t i = 0; i < doc.columns.size(); ++i)
    if (doc.columns[i] == "f") col = static_cast<int>(i);
  if (col < 0) {
    if (doc.columns.size() == 1) col = 0;
    else throw std::invalid_argument("samples csv: no 'f' column");
  }
  std::vector<double> f;
  f.reserve(doc.rows.size());
  for (const auto& r : doc.rows) f.push_back(r[col]);
  return f;
}

// ------------------------------------------------------------- files ----

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << body;
}

}  // namespace bext
