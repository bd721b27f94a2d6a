// Copyright 2026 The momrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "momrec/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace momrec {

namespace {

using nlohmann::json;

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInputFile("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw BadInputFile("cannot open '" + path + "' for writing");
  return out;
}

Real json_number(const json& v, mpfr_prec_t prec, const char* what) {
  if (v.is_string()) return Real::parse(v.get<std::string>(), prec);
  if (v.is_number()) return Real::of(v.get<double>(), prec);
  throw BadInputFile(std::string(what) + " must be a number or decimal string");
}

json load_json(const std::string& path) {
  std::ifstream in = open_in(path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw BadInputFile("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out = open_out(path);
  out << content;
}

void write_moments_csv(const std::string& path, const MomentMatrix& M,
                       int digits) {
  std::ofstream out = open_out(path);
  out << "k,j,re,im\n";
  for (int k = 0; k <= M.degree(); ++k)
    for (int j = k; j <= M.degree(); ++j)
      out << k << ',' << j << ',' << M.at(k, j).re.str(digits) << ','
          << M.at(k, j).im.str(digits) << '\n';
}

MomentMatrix read_moments_csv(const std::string& path,
                              const PrecisionContext& ctx) {
  std::ifstream in = open_in(path);
  std::string line;
  struct Row {
    int k, j;
    std::string re, im;
  };
  std::vector<Row> rows;
  int degree = -1;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto f = split_csv_line(line);
    if (!header_seen) {
      header_seen = true;
      if (f.size() >= 1 && f[0] == "k") continue;  // header row
    }
    if (f.size() != 4) throw BadInputFile("moment CSV row needs 4 fields");
    Row r{std::stoi(f[0]), std::stoi(f[1]), f[2], f[3]};
    degree = std::max(degree, std::max(r.k, r.j));
    rows.push_back(std::move(r));
  }
  if (degree < 0) throw BadInputFile("moment CSV '" + path + "' is empty");
  MomentMatrix M(degree, ctx.bits);
  std::vector<char> seen(static_cast<size_t>(degree + 1) * (degree + 1), 0);
  for (const Row& r : rows) {
    Complex c(Real::parse(r.re, ctx.bits), Real::parse(r.im, ctx.bits));
    M.at_mut(r.k, r.j) = c;
    seen[static_cast<size_t>(r.k) * (degree + 1) + r.j] = 1;
  }
  // Hermitian completion for entries only given on one side.
  for (int k = 0; k <= degree; ++k) {
    for (int j = 0; j <= degree; ++j) {
      size_t a = static_cast<size_t>(k) * (degree + 1) + j;
      size_t b = static_cast<size_t>(j) * (degree + 1) + k;
      if (!seen[a] && seen[b]) {
        M.at_mut(k, j) = M.at(j, k).conj();
        seen[a] = 1;
      }
    }
  }
  for (int k = 0; k <= degree; ++k)
    for (int j = 0; j <= degree; ++j)
      if (!seen[static_cast<size_t>(k) * (degree + 1) + j])
        throw BadInputFile("moment CSV misses entry (" + std::to_string(k) +
                           "," + std::to_string(j) + ")");
  return M;
}

void write_hessenberg_csv(const std::string& path, const HessenbergMatrix& H,
                          int digits) {
  std::ofstream out = open_out(path);
  out << "# order=" << H.order() << "\n";
  out << "# precision_bits=" << H.prec() << "\n";
  out << "k,j,re,im\n";
  for (int j = 0; j <= H.order(); ++j)
    for (int k = 0; k <= j + 1; ++k)
      out << k << ',' << j << ',' << H.at(k, j).re.str(digits) << ','
          << H.at(k, j).im.str(digits) << '\n';
}

HessenbergMatrix read_hessenberg_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  long order = -1, bits = 53;
  struct Row {
    int k, j;
    std::string re, im;
  };
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    if (line.rfind("# order=", 0) == 0) {
      order = std::stol(line.substr(8));
      continue;
    }
    if (line.rfind("# precision_bits=", 0) == 0) {
      bits = std::stol(line.substr(17));
      continue;
    }
    if (line.empty() || line[0] == '#' || line.rfind("k,", 0) == 0) continue;
    auto f = split_csv_line(line);
    if (f.size() != 4) throw BadInputFile("hessenberg CSV row needs 4 fields");
    rows.push_back(Row{std::stoi(f[0]), std::stoi(f[1]), f[2], f[3]});
  }
  if (order < 0) throw BadInputFile("hessenberg CSV misses '# order=' header");
  HessenbergMatrix H(static_cast<int>(order), bits);
  for (const Row& r : rows)
    H.at_mut(r.k, r.j) =
        Complex(Real::parse(r.re, bits), Real::parse(r.im, bits));
  return H;
}

void write_spectrum_csv(const std::string& path, const Spectrum& spec,
                        int digits) {
  std::ofstream out = open_out(path);
  out << "# residual=" << spec.residual.str(6) << "\n";
  out << "index,re,im\n";
  for (size_t i = 0; i < spec.values.size(); ++i)
    out << i << ',' << spec.values[i].re.str(digits) << ','
        << spec.values[i].im.str(digits) << '\n';
}

void write_curve_csv(const std::string& path,
                     const std::vector<CurveSample>& curve, int digits) {
  std::ofstream out = open_out(path);
  out << "theta,re,im\n";
  for (const CurveSample& s : curve)
    out << s.theta.str(digits) << ',' << s.point.re.str(digits) << ','
        << s.point.im.str(digits) << '\n';
}

namespace {

std::string fixed_decimals(const Real& x, int places) {
  std::vector<char> buf(places + 32);
  int n = mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", places, x.raw());
  if (n < 0 || n >= static_cast<int>(buf.size())) {
    buf.resize(n > 0 ? n + 1 : 4096);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", places, x.raw());
  }
  return std::string(buf.data());
}

}  // namespace

void write_rate_table_csv(const std::string& path,
                          const std::vector<RateRow>& rows) {
  std::ofstream out = open_out(path);
  out << "n,b,t,s,b_k,t_k,s_k\n";
  for (const RateRow& r : rows) {
    out << r.n << ',' << fixed_decimals(r.b_est, 9) << ',' << r.t.str(3) << ','
        << (r.s_defined ? fixed_decimals(r.s, 4) : std::string()) << ','
        << fixed_decimals(r.bk_est.re, 9) << ',' << r.tk.str(3) << ','
        << (r.sk_defined ? fixed_decimals(r.sk, 4) : std::string()) << '\n';
  }
}

void write_laurent_json(const std::string& path, const LaurentMap& map,
                        int digits) {
  json j;
  j["b"] = map.b.str(digits);
  j["order"] = map.order();
  json cs = json::array();
  for (const Complex& c : map.coeffs)
    cs.push_back({c.re.str(digits), c.im.str(digits)});
  j["coeffs"] = std::move(cs);
  std::ofstream out = open_out(path);
  out << j.dump(2) << "\n";
}

LaurentMap read_laurent_json(const std::string& path,
                             const PrecisionContext& ctx) {
  json j = load_json(path);
  if (!j.contains("b")) throw BadInputFile("laurent JSON needs field 'b'");
  Real b = json_number(j["b"], ctx.bits, "b");
  std::vector<Complex> coeffs;
  if (j.contains("coeffs")) {
    for (const auto& c : j["coeffs"]) {
      if (!c.is_array() || c.size() != 2)
        throw BadInputFile("laurent coeffs must be [re, im] pairs");
      coeffs.emplace_back(json_number(c[0], ctx.bits, "coeff re"),
                          json_number(c[1], ctx.bits, "coeff im"));
    }
  }
  if (b.sign() <= 0) throw BadInputFile("capacity b must be positive");
  return LaurentMap(std::move(b), std::move(coeffs));
}

DomainSpec read_domain_json(const std::string& path,
                            const PrecisionContext& ctx) {
  json j = load_json(path);
  std::string type = j.value("type", "");
  if (type == "polygon") {
    std::vector<Complex> vs;
    if (!j.contains("vertices"))
      throw InvalidPolygon("polygon spec needs 'vertices'");
    for (const auto& v : j["vertices"]) {
      if (!v.is_array() || v.size() != 2)
        throw InvalidPolygon("vertices must be [re, im] pairs");
      vs.emplace_back(json_number(v[0], ctx.bits, "vertex re"),
                      json_number(v[1], ctx.bits, "vertex im"));
    }
    return DomainSpec::polygon(std::move(vs));
  }
  if (type == "laurent") {
    if (!j.contains("b")) throw BadInputFile("laurent domain needs 'b'");
    Real b = json_number(j["b"], ctx.bits, "b");
    std::vector<Complex> coeffs;
    for (const auto& c : j.value("coeffs", json::array())) {
      if (!c.is_array() || c.size() != 2)
        throw BadInputFile("laurent coeffs must be [re, im] pairs");
      coeffs.emplace_back(json_number(c[0], ctx.bits, "coeff re"),
                          json_number(c[1], ctx.bits, "coeff im"));
    }
    return DomainSpec::laurent_boundary(LaurentMap(std::move(b), std::move(coeffs)));
  }
  if (type == "named") {
    std::string name = j.value("name", "");
    if (name == "unit-disk")
      return DomainSpec::named(NamedShape(NamedShape::Kind::UnitDisk, ctx.bits));
    if (name == "equilateral-triangle")
      return DomainSpec::named(
          NamedShape(NamedShape::Kind::EquilateralTriangle, ctx.bits));
    if (name == "hypocycloid-3")
      return DomainSpec::named(
          NamedShape(NamedShape::Kind::Hypocycloid3, ctx.bits));
    if (name == "ellipse") {
      NamedShape sh(NamedShape::Kind::Ellipse, ctx.bits);
      if (!j.contains("a") || !j.contains("b"))
        throw BadInputFile("named ellipse needs semiaxes 'a' and 'b'");
      sh.a = json_number(j["a"], ctx.bits, "a");
      sh.c = json_number(j["b"], ctx.bits, "b");
      return DomainSpec::named(std::move(sh));
    }
    throw BadInputFile("unknown named shape '" + name + "'");
  }
  throw BadInputFile("domain 'type' must be polygon, laurent, or named");
}

void write_report_json(const std::string& path,
                       const ReconstructionReport& report, int digits) {
  json j;
  j["n"] = report.n;
  j["m"] = report.m;
  j["laurent"]["b"] = report.laurent.b.str(digits);
  j["laurent"]["order"] = report.laurent.order();
  json cs = json::array();
  for (const Complex& c : report.laurent.coeffs)
    cs.push_back({c.re.str(digits), c.im.str(digits)});
  j["laurent"]["coeffs"] = std::move(cs);
  json curve = json::array();
  for (const CurveSample& s : report.curve)
    curve.push_back({s.theta.str(digits), s.point.re.str(digits),
                     s.point.im.str(digits)});
  j["curve"] = std::move(curve);
  if (report.sup_error) j["sup_error"] = report.sup_error->str(digits);
  if (!report.rate_rows.empty()) {
    json rows = json::array();
    for (const RateRow& r : report.rate_rows) {
      json row;
      row["n"] = r.n;
      row["b"] = fixed_decimals(r.b_est, 9);
      row["t"] = r.t.str(3);
      if (r.s_defined) row["s"] = fixed_decimals(r.s, 4);
      row["b_k"] = fixed_decimals(r.bk_est.re, 9);
      row["t_k"] = r.tk.str(3);
      if (r.sk_defined) row["s_k"] = fixed_decimals(r.sk, 4);
      rows.push_back(std::move(row));
    }
    j["rate_rows"] = std::move(rows);
  }
  std::ofstream out = open_out(path);
  out << j.dump(2) << "\n";
}

}  // namespace momrec
