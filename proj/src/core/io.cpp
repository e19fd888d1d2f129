/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"
#include "numerics.hpp"

namespace fockwig {

namespace {

using nlohmann::json;

std::string format_row(std::initializer_list<double> vals) {
  std::string out;
  bool first = true;
  char buf[40];
  for (double v : vals) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    if (!first) out += ',';
    out += buf;
    first = false;
  }
  return out;
}

struct CsvReader {
  std::ifstream in;
  std::string path;
  long line_no = 0;

  explicit CsvReader(const std::string& p) : in(p), path(p) {
    if (!in) throw IoError("cannot open '" + p + "' for reading");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw DataError(path + ":" + std::to_string(line_no) + ": " + msg);
  }

  bool next(std::vector<std::string>& fields, std::string& raw) {
    while (std::getline(in, raw)) {
      ++line_no;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (raw.empty()) continue;
      if (raw[0] == '#') return true;  // caller inspects comments
      fields.clear();
      std::stringstream ss(raw);
      std::string cell;
      while (std::getline(ss, cell, ',')) fields.push_back(cell);
      return true;
    }
    return false;
  }

  double to_double(const std::string& s) {
    try {
      std::size_t pos = 0;
      const double v = std::stod(s, &pos);
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos != s.size()) fail("trailing characters in numeric field '" + s + "'");
      return v;
    } catch (const std::exception&) {
      fail("cannot parse '" + s + "' as a number");
    }
  }

  long to_index(const std::string& s) {
    const double v = to_double(s);
    const long n = static_cast<long>(v);
    if (static_cast<double>(n) != v || n < 0) fail("field '" + s + "' is not a valid index");
    return n;
  }
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CoefficientSequence read_coefficients_csv(const std::string& path) {
  CsvReader r(path);
  std::vector<std::string> f;
  std::string raw;
  std::map<long, cplx> entries;
  bool header_seen = false;
  while (r.next(f, raw)) {
    if (raw[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      if (raw.rfind("n,", 0) == 0) continue;  // header row
    }
    if (f.size() != 3) r.fail("expected 3 fields (n,re,im)");
    const long n = r.to_index(f[0]);
    if (!entries.emplace(n, cplx(r.to_double(f[1]), r.to_double(f[2]))).second)
      r.fail("duplicate index " + std::to_string(n));
  }
  if (entries.empty()) throw DataError(path + ": no coefficient rows");
  std::vector<cplx> v(static_cast<std::size_t>(entries.rbegin()->first) + 1, cplx(0, 0));
  for (const auto& [n, z] : entries) v[n] = z;
  return CoefficientSequence(std::move(v));
}

void write_coefficients_csv(const std::string& path, const CoefficientSequence& alpha) {
  auto out = open_out(path);
  out << "n,re,im\n";
  for (int n = 0; n <= alpha.n_max(); ++n)
    out << n << ',' << format_double(alpha.values[n].real()) << ','
        << format_double(alpha.values[n].imag()) << '\n';
}

SampledFunction read_samples_csv(const std::string& path) {
  CsvReader r(path);
  std::vector<std::string> f;
  std::string raw;
  SampledFunction s;
  bool header_seen = false;
  while (r.next(f, raw)) {
    if (raw[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      if (raw.rfind("x,", 0) == 0) continue;
    }
    if (f.size() != 3) r.fail("expected 3 fields (x,re,im)");
    s.xs.push_back(r.to_double(f[0]));
    s.values.emplace_back(r.to_double(f[1]), r.to_double(f[2]));
  }
  if (s.xs.empty()) throw DataError(path + ": no sample rows");
  return s;
}

void write_samples_csv(const std::string& path, const SampledFunction& samples) {
  auto out = open_out(path);
  out << "x,re,im\n";
  for (std::size_t i = 0; i < samples.xs.size(); ++i)
    out << format_row({samples.xs[i], samples.values[i].real(), samples.values[i].imag()})
        << '\n';
}

DensityMatrix read_density_csv(const std::string& path) {
  CsvReader r(path);
  std::vector<std::string> f;
  std::string raw;
  std::map<std::pair<long, long>, cplx> entries;
  long n_max = -1;
  bool header_seen = false;
  while (r.next(f, raw)) {
    if (raw[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      if (raw.rfind("m,", 0) == 0) continue;
    }
    if (f.size() != 4) r.fail("expected 4 fields (m,n,re,im)");
    const long m = r.to_index(f[0]), n = r.to_index(f[1]);
    const cplx z(r.to_double(f[2]), r.to_double(f[3]));
    if (!entries.emplace(std::make_pair(m, n), z).second)
      r.fail("duplicate entry (" + std::to_string(m) + "," + std::to_string(n) + ")");
    n_max = std::max({n_max, m, n});
  }
  if (n_max < 0) throw DataError(path + ": no density rows");

  CMatrix mat(static_cast<std::size_t>(n_max) + 1, static_cast<std::size_t>(n_max) + 1);
  // Hermitian completion: a listed (m,n) fills (n,m) with the conjugate;
  // if both are listed they must agree.
  for (const auto& [mn, z] : entries) {
    const auto& [m, n] = mn;
    mat.at(m, n) = z;
    auto mirror = entries.find(std::make_pair(n, m));
    if (mirror != entries.end()) {
      if (std::abs(mirror->second - std::conj(z)) > 1e-12 * std::max(1.0, std::abs(z)))
        throw DataError(path + ": entries (" + std::to_string(m) + "," + std::to_string(n) +
                        ") and its mirror conflict with Hermitian symmetry");
    } else {
      mat.at(n, m) = std::conj(z);
    }
  }
  return DensityMatrix::from_entries(std::move(mat));
}

void write_density_csv(const std::string& path, const DensityMatrix& rho) {
  auto out = open_out(path);
  out << "m,n,re,im\n";
  for (int m = 0; m <= rho.n_max(); ++m)
    for (int n = 0; n <= rho.n_max(); ++n) {
      const cplx z = rho.at(m, n);
      if (z == cplx(0.0, 0.0)) continue;
      out << m << ',' << n << ',' << format_double(z.real()) << ',' << format_double(z.imag())
          << '\n';
    }
}

PhaseSpaceGrid read_phase_space_csv(const std::string& path) {
  CsvReader r(path);
  std::vector<std::string> f;
  std::string raw;
  Convention tag = Convention::plain;
  std::vector<double> qs, ps;
  std::vector<cplx> vals;
  bool header_seen = false;
  while (r.next(f, raw)) {
    if (raw[0] == '#') {
      if (raw.find("convention=tilde") != std::string::npos) tag = Convention::tilde;
      continue;
    }
    if (!header_seen) {
      header_seen = true;
      if (raw.rfind("q,", 0) == 0) continue;
    }
    if (f.size() != 4) r.fail("expected 4 fields (q,p,re,im)");
    qs.push_back(r.to_double(f[0]));
    ps.push_back(r.to_double(f[1]));
    vals.emplace_back(r.to_double(f[2]), r.to_double(f[3]));
  }
  if (vals.empty()) throw DataError(path + ": no grid rows");

  PhaseSpaceGrid grid;
  grid.tag = tag;
  // row-major: p cycles fastest
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i > 0 && ps[i] <= ps[i - 1]) break;
    grid.p_axis.push_back(ps[i]);
  }
  const std::size_t np = grid.p_axis.size();
  if (np == 0 || vals.size() % np != 0)
    throw DataError(path + ": rows do not form a rectangular row-major grid");
  const std::size_t nq = vals.size() / np;
  for (std::size_t i = 0; i < nq; ++i) grid.q_axis.push_back(qs[i * np]);
  for (std::size_t i = 0; i < nq; ++i)
    for (std::size_t j = 0; j < np; ++j) {
      if (qs[i * np + j] != grid.q_axis[i] || ps[i * np + j] != grid.p_axis[j])
        throw DataError(path + ": grid axes are not consistent row-major");
    }
  grid.values = CMatrix(nq, np);
  std::copy(vals.begin(), vals.end(), grid.values.a.begin());
  return grid;
}

void write_phase_space_csv(const std::string& path, const PhaseSpaceGrid& grid) {
  auto out = open_out(path);
  out << "# convention=" << (grid.tag == Convention::plain ? "plain" : "tilde") << '\n';
  out << "q,p,re,im\n";
  for (std::size_t i = 0; i < grid.q_axis.size(); ++i)
    for (std::size_t j = 0; j < grid.p_axis.size(); ++j) {
      const cplx z = grid.values.at(i, j);
      out << format_row({grid.q_axis[i], grid.p_axis[j], z.real(), z.imag()}) << '\n';
    }
}

WeightFunction weight_from_json(const std::string& text_or_path) {
  std::string text = text_or_path;
  if (!text.empty() && text[0] != '{') {
    std::ifstream in(text_or_path);
    if (!in) throw IoError("cannot open weight spec '" + text_or_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw DataError(std::string("weight spec is not valid JSON: ") + e.what());
  }
  const std::string family = j.value("family", "");
  if (family == "power") {
    if (!j.contains("lambda") || !j.contains("beta"))
      throw DataError("power weight spec needs 'lambda' and 'beta'");
    return WeightFunction::power(j["lambda"].get<double>(), j["beta"].get<double>());
  }
  if (family == "tabulated") {
    if (!j.contains("points") || !j["points"].is_array())
      throw DataError("tabulated weight spec needs a 'points' array");
    std::vector<std::pair<double, double>> pts;
    for (const auto& row : j["points"]) {
      if (!row.is_array() || row.size() != 2)
        throw DataError("tabulated weight points must be [t, w] pairs");
      pts.emplace_back(row[0].get<double>(), row[1].get<double>());
    }
    return WeightFunction::tabulated(std::move(pts));
  }
  throw DataError("weight spec: unknown family '" + family + "'");
}

std::string weight_to_json(const WeightFunction& w) {
  json j;
  if (w.family() == WeightFunction::Family::power) {
    j["family"] = "power";
    j["lambda"] = w.lambda();
    j["beta"] = w.beta();
  } else {
    j["family"] = "tabulated";
    json pts = json::array();
    for (const auto& [t, v] : w.table()) pts.push_back({t, w.lambda() * v});
    j["points"] = pts;
  }
  return j.dump();
}

std::vector<double> parse_grid_spec(const std::string& spec) {
  double lo = 0, hi = 0, step = 0;
  char extra = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &lo, &hi, &step, &extra) != 3)
    throw ArgumentError("grid spec must be lo:hi:step (got '" + spec + "')");
  return uniform_grid(lo, hi, step);
}

}  // namespace fockwig
