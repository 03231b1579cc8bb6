#include "fl/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace fl {

namespace {

std::string num(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

double parse_double(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) throw Error("malformed number '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  for (size_t i = 0; i <= line.size(); ++i)
    if (i == line.size() || line[i] == sep) {
      out.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void dump(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("cannot write " + path);
}

// Rows of a CSV with the given header, as numbers.
std::vector<std::vector<double>> parse_csv(const std::string& text, const std::string& header) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw Error("empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) throw Error("expected header '" + header + "'");
  const size_t cols = split(header, ',').size();
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto f = split(line, ',');
    if (f.size() != cols) throw Error("wrong column count in row " + std::to_string(rows.size() + 1));
    std::vector<double> r;
    for (auto s : f) r.push_back(parse_double(s));
    rows.push_back(std::move(r));
  }
  return rows;
}

Grid grid_from_nodes(const std::vector<double>& x) {
  const int n = (int)x.size();
  if (n < 9) throw Error("insufficient grid");
  const double h = (x.back() - x.front()) / (n - 1);
  if (!(h > 0)) throw Error("nodes must be ascending");
  for (int i = 1; i < n; ++i)
    if (std::abs((x[i] - x[i - 1]) - h) > 1e-9 * h) throw Error("non-uniform grid spacing");
  const double L = 0.5 * (x.back() - x.front());
  if (std::abs(x.front() + x.back()) > 1e-9 * L) throw Error("grid not symmetric about 0");
  return Grid(L, n);
}

} // namespace

std::string format_grid_function(const GridFunction& f) {
  std::string s = "x,re,im\n";
  for (int i = 0; i < f.size(); ++i)
    s += num(f.grid.x(i)) + "," + num(f[i].real()) + "," + num(f[i].imag()) + "\n";
  return s;
}

GridFunction parse_grid_function(const std::string& text) {
  auto rows = parse_csv(text, "x,re,im");
  std::vector<double> x;
  std::vector<cplx> v;
  for (auto& r : rows) {
    x.push_back(r[0]);
    v.emplace_back(r[1], r[2]);
  }
  return GridFunction(grid_from_nodes(x), v);
}

GridFunction read_grid_function(const std::string& path) { return parse_grid_function(slurp(path)); }
void write_grid_function(const std::string& path, const GridFunction& f) { dump(path, format_grid_function(f)); }

void write_jost(const std::string& path, const JostVector& j) {
  std::string s = "x,re1,im1,re2,im2\n";
  for (int i = 0; i < j.psi1.size(); ++i)
    s += num(j.psi1.grid.x(i)) + "," + num(j.psi1[i].real()) + "," + num(j.psi1[i].imag()) + "," +
         num(j.psi2[i].real()) + "," + num(j.psi2[i].imag()) + "\n";
  dump(path, s);
}

std::pair<GridFunction, GridFunction> read_jost(const std::string& path) {
  auto rows = parse_csv(slurp(path), "x,re1,im1,re2,im2");
  std::vector<double> x;
  std::vector<cplx> a, b;
  for (auto& r : rows) {
    x.push_back(r[0]);
    a.emplace_back(r[1], r[2]);
    b.emplace_back(r[3], r[4]);
  }
  Grid g = grid_from_nodes(x);
  return {GridFunction(g, a), GridFunction(g, b)};
}

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx json_cplx(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error("expected [re, im], got " + j.dump());
  return {j[0].get<double>(), j[1].get<double>()};
}

cplx parse_cplx(const std::string& s) {
  auto f = split(s, ',');
  if (f.size() == 1) return parse_double(f[0]);
  if (f.size() != 2) throw Error("expected RE,IM, got '" + s + "'");
  return {parse_double(f[0]), parse_double(f[1])};
}

json to_json(const ScatteringData& d) {
  json j;
  j["samples"] = json::array();
  for (auto& s : d.samples) {
    json e{{"k", cplx_json(s.k.k)}, {"a", cplx_json(s.a)}};
    if (s.b) e["b"] = cplx_json(*s.b);
    j["samples"].push_back(e);
  }
  j["eigenvalues"] = json::array();
  for (auto& e : d.spectrum.eigenvalues) j["eigenvalues"].push_back({{"k", cplx_json(e.k.k)}, {"gamma", cplx_json(e.gamma)}});
  return j;
}

ScatteringData scattering_from_json(const json& j) {
  ScatteringData d;
  try {
    for (auto& e : j.at("samples")) {
      ScatteringSample s{SpectralPoint(json_cplx(e.at("k"))), json_cplx(e.at("a")), std::nullopt, std::nullopt, 0.0, {}};
      if (e.contains("b")) {
        s.b = json_cplx(e["b"]);
        if (s.a != 0.0) s.r = *s.b / s.a;
      }
      d.samples.push_back(s);
    }
    if (j.contains("eigenvalues"))
      for (auto& e : j["eigenvalues"])
        d.spectrum.eigenvalues.push_back({SpectralPoint(json_cplx(e.at("k"))), json_cplx(e.at("gamma"))});
  } catch (const json::exception& e) {
    throw Error(std::string("malformed scattering data: ") + e.what());
  }
  return d;
}

void write_patch(const std::string& path, const SpaceTimePatch& p) {
  std::string s = "t,x,re,im\n";
  for (size_t n = 0; n < p.t.size(); ++n)
    for (int i = 0; i < p.grid.N; ++i)
      s += num(p.t[n]) + "," + num(p.grid.x(i)) + "," + num(p.u[n][i].real()) + "," + num(p.u[n][i].imag()) + "\n";
  dump(path, s);
}

SpaceTimePatch read_patch(const std::string& path) {
  auto rows = parse_csv(slurp(path), "t,x,re,im");
  SpaceTimePatch p;
  std::vector<double> x;
  for (size_t r = 0; r < rows.size(); ++r) {
    double t = rows[r][0];
    if (p.t.empty() || t != p.t.back()) {
      if (!p.t.empty() && !(t > p.t.back())) throw Error("time levels must be ascending");
      p.t.push_back(t);
      p.u.emplace_back();
    }
    if (p.t.size() == 1) x.push_back(rows[r][1]);
    p.u.back().emplace_back(rows[r][2], rows[r][3]);
  }
  if (p.t.empty()) throw Error("empty patch");
  p.grid = grid_from_nodes(x);
  for (auto& row : p.u)
    if ((int)row.size() != p.grid.N) throw Error("patch dimensions inconsistent");
  return p;
}

void write_json(const std::string& path, const json& j) { dump(path, j.dump(2) + "\n"); }

json read_json(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::parse_error& e) {
    throw Error("cannot parse " + path + ": " + e.what());
  }
}

void write_sidecar(const std::string& path, const std::string& command, const json& parameters, const json& invariants) {
  write_json(path + ".json", {{"file", path},
                              {"command", command},
                              {"parameters", parameters},
                              {"invariants", invariants},
                              {"metadata", {{"tool", "flds"}, {"format_version", 1}}}});
}

} // namespace fl
