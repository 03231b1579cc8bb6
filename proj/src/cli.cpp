#include "fl/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <ostream>

namespace fl {

namespace {

double number(const json& j, const char* what) {
  if (!j.is_number()) throw Error(std::string("config: ") + what + " must be a number");
  return j.get<double>();
}

template <class F> void each_key(const json& j, const char* section, F f) {
  if (!j.is_object()) throw Error(std::string("config: ") + section + " must be an object");
  for (auto& [k, v] : j.items()) f(k, v);
}

void set_tolerance(RunConfig& c, const std::string& name, double v) {
  if (!(v > 0) || !std::isfinite(v)) throw Error("tolerance " + name + " must be positive");
  if (c.tol.set(name, v)) return;
  for (auto& id : check_ids())
    if (id == name) {
      c.thresholds[name] = v;
      return;
    }
  throw Error("unknown tolerance '" + name + "'");
}

void unknown(const std::string& section, const std::string& key) {
  throw Error("config: unknown key '" + key + "' in " + section);
}

} // namespace

void apply_config(RunConfig& c, const json& j) {
  each_key(j, "config", [&](const std::string& key, const json& v) {
    if (key == "grid") {
      double L = c.grid.L;
      int N = c.grid.N;
      each_key(v, "grid", [&](const std::string& k, const json& x) {
        if (k == "L") L = number(x, "grid.L");
        else if (k == "N") N = (int)number(x, "grid.N");
        else unknown("grid", k);
      });
      c.grid = Grid(L, N);
    } else if (key == "region") {
      each_key(v, "region", [&](const std::string& k, const json& x) {
        double d = number(x, "region bound");
        if (k == "re0") c.region.re0 = d;
        else if (k == "re1") c.region.re1 = d;
        else if (k == "im0") c.region.im0 = d;
        else if (k == "im1") c.region.im1 = d;
        else unknown("region", k);
      });
    } else if (key == "tolerances") {
      each_key(v, "tolerances", [&](const std::string& k, const json& x) {
        set_tolerance(c, k, number(x, "tolerance"));
      });
    } else if (key == "samples") {
      each_key(v, "samples", [&](const std::string& k, const json& x) {
        if (k == "count") c.sample_count = (int)number(x, "samples.count");
        else if (k == "kmax") c.sample_kmax = number(x, "samples.kmax");
        else if (k == "asymptote_k") c.asymptote_k = number(x, "samples.asymptote_k");
        else unknown("samples", k);
      });
    } else if (key == "patch") {
      each_key(v, "patch", [&](const std::string& k, const json& x) {
        if (k == "steps") c.patch_steps = (int)number(x, "patch.steps");
        else unknown("patch", k);
      });
    } else if (key == "verify") {
      each_key(v, "verify", [&](const std::string& k, const json& x) {
        if (k != "select") unknown("verify", k);
        if (!x.is_array()) throw Error("config: verify.select must be a list");
        c.select = x.get<std::vector<std::string>>();
      });
    } else if (key == "solitons") {
      if (!v.is_array()) throw Error("config: solitons must be a list");
      c.solitons.clear();
      for (auto& s : v) c.solitons.push_back({json_cplx(s.at("k1")), json_cplx(s.at("gamma"))});
    } else if (key == "input") {
      c.input = v.get<std::string>();
    } else if (key == "output") {
      c.output = v.get<std::string>();
    } else if (key == "k1") {
      c.k1 = json_cplx(v);
    } else if (key == "gamma") {
      c.gamma = json_cplx(v);
    } else if (key == "time") {
      c.time = number(v, "time");
    } else {
      unknown("config", key);
    }
  });
  if (c.sample_count < 2 || c.sample_count % 2) throw Error("config: samples.count must be even and >= 2");
  if (c.patch_steps < 5) throw Error("config: patch.steps must be at least 5");
}

void apply_tolerance(RunConfig& c, const std::string& a) {
  auto eq = a.find('=');
  if (eq == std::string::npos) throw Error("expected NAME=VALUE, got '" + a + "'");
  cplx v = parse_cplx(a.substr(eq + 1));
  if (v.imag() != 0.0) throw Error("tolerance must be real");
  set_tolerance(c, a.substr(0, eq), v.real());
}

namespace {

json params_json(const RunConfig& c) {
  json p{{"grid", {{"L", c.grid.L}, {"N", c.grid.N}}}};
  if (!c.input.empty()) p["input"] = c.input;
  if (c.k1) p["k1"] = cplx_json(*c.k1);
  if (c.gamma) p["gamma"] = cplx_json(*c.gamma);
  p["time"] = c.time;
  json t = json::object();
  for (auto& [n, v] : c.tol.list()) t[n] = v;
  p["tolerances"] = t;
  return p;
}

std::string cstr(cplx z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

const std::string& need(const std::string& s, const char* what) {
  if (s.empty()) throw Error(std::string("missing ") + what);
  return s;
}

cplx need(const std::optional<cplx>& z, const char* what) {
  if (!z) throw Error(std::string("missing ") + what);
  return *z;
}

GridFunction input_or_vacuum(const RunConfig& c) {
  return c.input.empty() ? GridFunction(c.grid) : read_grid_function(c.input);
}

json norms_json(const GridFunction& u, const Tolerances& tol) {
  auto s = sobolev_report(u);
  auto cc = c_constant(u, tol.decay);
  return {{"H3", s.H3},
          {"H21", s.H21},
          {"smallness", s.smallness},
          {"ux_L2", l2_norm(derivative(u, 1))},
          {"c", cc.value},
          {"decay_warning", cc.decay_warning}};
}

std::vector<SolitonParameters> soliton_list(const RunConfig& c, double t) {
  std::vector<SolitonParameters> ps;
  if (!c.solitons.empty()) {
    for (auto& s : c.solitons) ps.emplace_back(s.k1, s.gamma, t, c.tol);
  } else if (c.k1) {
    ps.emplace_back(*c.k1, c.gamma.value_or(1.0), t, c.tol);
  }
  return ps;
}

int cmd_scatter(RunConfig& c, std::ostream& out, std::ostream& err) {
  auto u = read_grid_function(need(c.input, "--input"));
  JostSolver s(u);
  if (s.decay_warning()) err << "warning: potential does not decay at the grid ends\n";
  ScatteringData d;
  double dets = 0, sym = 0;
  const int half = c.sample_count / 2;
  for (int j = 0; j < half; ++j) {
    double k = half == 1 ? 0.1 : 0.1 + (c.sample_kmax - 0.1) * j / (half - 1);
    auto at = [&](double kk) {
      try {
        return coefficients(s, SpectralPoint(kk), c.tol);
      } catch (const Error& e) {
        throw Error(std::string(e.what()) + " at k = " + std::to_string(kk));
      }
    };
    auto p = at(k), m = at(-k);
    for (auto* x : {&p, &m}) {
      dets = std::max(dets, std::abs(std::norm(x->a) + std::norm(*x->b) - 1.0));
      for (auto& w : x->warnings) err << "warning: " << w << " at k = " << x->k.k.real() << "\n";
      d.samples.push_back(*x);
    }
    sym = std::max({sym, std::abs(p.a - m.a), std::abs(*p.b + *m.b)});
  }
  double cc = c_constant(u, c.tol.decay).value;
  double casym = std::abs(a_sweep(s, c.asymptote_k) - std::exp(-I * cc));
  int w = winding(s, c.region, c.tol);
  d.spectrum = discrete_spectrum(s, c.region, c.tol);
  out << "samples: " << d.samples.size() << "\n"
      << "det S deviation: " << dets << "\n"
      << "symmetry deviation: " << sym << "\n"
      << "c = " << cc << ", |a(" << c.asymptote_k << ") - e^{-ic}| = " << casym << "\n"
      << "winding: " << w << "\n";
  for (auto& e : d.spectrum.eigenvalues) out << "eigenvalue " << cstr(e.k.k) << " gamma " << cstr(e.gamma) << "\n";
  if (!c.output.empty()) {
    write_json(c.output, to_json(d));
    write_sidecar(c.output, "scatter", params_json(c),
                  {{"det_s_deviation", dets},
                   {"symmetry_deviation", sym},
                   {"c", cc},
                   {"c_asymptote_deviation", casym},
                   {"winding", w}});
  }
  return 0;
}

int cmd_zeros(RunConfig& c, std::ostream& out, std::ostream&) {
  JostSolver s(read_grid_function(need(c.input, "--input")));
  int w = winding(s, c.region, c.tol);
  ScatteringData d;
  d.spectrum = discrete_spectrum(s, c.region, c.tol);
  out << "winding: " << w << "\n";
  for (auto& e : d.spectrum.eigenvalues)
    out << "eigenvalue " << cstr(e.k.k) << " gamma " << cstr(e.gamma) << " |a| " << std::abs(a_sweep(s, e.k.k)) << "\n";
  if (!c.output.empty()) {
    write_json(c.output, to_json(d));
    write_sidecar(c.output, "zeros", params_json(c), {{"winding", w}, {"count", d.spectrum.eigenvalues.size()}});
  }
  return 0;
}

int cmd_add(RunConfig& c, std::ostream& out, std::ostream&) {
  auto u = input_or_vacuum(c);
  SpectralPoint k1(need(c.k1, "--k1"));
  cplx g = need(c.gamma, "--gamma");
  auto u1 = add_soliton(u, k1, g, c.tol);
  JostSolver s(u1);
  double a1 = std::abs(a_sweep(s, k1.k));
  json inv{{"a_at_k1", a1}, {"input_norms", norms_json(u, c.tol)}, {"output_norms", norms_json(u1, c.tol)}};
  try {
    auto nm = norming_constant(s, k1, c.tol);
    inv["norming_constant"] = cplx_json(nm.gamma);
    out << "norming constant of output: " << cstr(nm.gamma) << "\n";
  } catch (const Error& e) {
    inv["norming_constant_error"] = e.what();
  }
  out << "|a(k1)| of output: " << a1 << "\n";
  write_grid_function(need(c.output, "--output"), u1);
  write_sidecar(c.output, "add", params_json(c), inv);
  return 0;
}

int cmd_remove(RunConfig& c, std::ostream& out, std::ostream& err) {
  auto u = read_grid_function(need(c.input, "--input"));
  JostSolver s(u);
  if (!c.k1) {
    auto z = locate_zeros(s, c.region, c.tol);
    if (z.empty()) throw Error("missing --k1 and no eigenvalue found in the region");
    c.k1 = z.front().k;
    out << "removing located eigenvalue " << cstr(*c.k1) << "\n";
  }
  SpectralPoint k1(*c.k1);
  auto r = remove_soliton(s, k1, c.tol);
  for (auto& w : r.warnings) err << "warning: " << w << "\n";
  out << "max |u1|: " << r.u.sup() << "\n";
  write_grid_function(need(c.output, "--output"), r.u);
  write_sidecar(c.output, "remove", params_json(c),
                {{"a_at_k1_input", std::abs(a_sweep(s, k1.k))},
                 {"max_modulus", r.u.sup()},
                 {"warnings", r.warnings},
                 {"input_norms", norms_json(u, c.tol)},
                 {"output_norms", norms_json(r.u, c.tol)}});
  return 0;
}

int cmd_nsoliton(RunConfig& c, std::ostream& out, std::ostream&) {
  auto ps = soliton_list(c, c.time);
  auto u = n_soliton(ps, c.grid, c.tol);
  out << ps.size() << "-soliton at t = " << c.time << ", max |u| = " << u.sup() << "\n";
  write_grid_function(need(c.output, "--output"), u);
  json p = params_json(c);
  p["solitons"] = json::array();
  for (auto& s : ps) p["solitons"].push_back({{"k1", cplx_json(s.k1.k)}, {"gamma0", cplx_json(s.gamma0)}});
  write_sidecar(c.output, "nsoliton", p, {{"count", ps.size()}, {"norms", norms_json(u, c.tol)}});
  return 0;
}

int cmd_evolve(RunConfig& c, std::ostream& out, std::ostream&) {
  const std::string& dst = need(c.output, "--output");
  if (!c.input.empty()) {
    auto d = scattering_from_json(read_json(c.input));
    for (auto& s : d.samples) {
      if (!s.b) continue;
      s.b = evolve_reflection(*s.b, s.k, c.time);
    }
    for (auto& e : d.spectrum.eigenvalues) e.gamma = evolve_norming(e.gamma, e.k, c.time);
    write_json(dst, to_json(d));
    write_sidecar(dst, "evolve", params_json(c), {{"samples", d.samples.size()}, {"eigenvalues", d.spectrum.eigenvalues.size()}});
    out << "evolved " << d.samples.size() << " samples and " << d.spectrum.eigenvalues.size() << " eigenvalues to t = "
        << c.time << "\n";
    return 0;
  }
  auto ps = soliton_list(c, 0.0);
  std::vector<double> ts;
  for (int n = 0; n < c.patch_steps; ++n) ts.push_back(c.time * n / (c.patch_steps - 1));
  auto patch = soliton_patch(ps, c.grid, ts, c.tol);
  double res = c.time > 0 ? pde_residual(patch) : NAN;
  write_patch(dst, patch);
  write_sidecar(dst, "evolve", params_json(c),
                {{"time_levels", ts.size()}, {"pde_residual", std::isfinite(res) ? json(res) : json(nullptr)}});
  out << "patch " << ts.size() << " x " << c.grid.N << ", pde residual " << res << "\n";
  return 0;
}

int cmd_verify(RunConfig& c, std::ostream& out, std::ostream&) {
  SuiteOptions o{c.grid, c.tol, c.thresholds};
  auto ids = c.select.value_or(check_ids());
  auto r = run_suite(ids, o);
  out << r.table();
  if (!c.output.empty()) write_json(c.output, r.to_json());
  return r.pass() ? 0 : 1;
}

int cmd_norms(RunConfig& c, std::ostream& out, std::ostream& err) {
  auto u = read_grid_function(need(c.input, "--input"));
  json n = norms_json(u, c.tol);
  if (n["decay_warning"].get<bool>()) err << "warning: potential does not decay at the grid ends\n";
  out << "H3 = " << n["H3"].get<double>() << "\nH21 = " << n["H21"].get<double>()
      << "\nsmallness = " << n["smallness"].get<double>() << "\n||u_x||_2 = " << n["ux_L2"].get<double>()
      << "\nc = " << n["c"].get<double>() << "\n";
  if (!c.output.empty()) write_json(c.output, n);
  return 0;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= s.size() && !s.empty()) {
    size_t e = s.find(',', start);
    if (e == std::string::npos) e = s.size();
    if (e > start) out.push_back(s.substr(start, e - start));
    start = e + 1;
  }
  return out;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fokas-Lenells direct scattering and Darboux toolkit", "flds"};
  app.require_subcommand(1);
  std::string config, input, output, k1, gamma, grid, select;
  double time = 0;
  std::vector<std::string> tolerances;
  struct Opts {
    CLI::Option *time, *select;
  };
  std::map<std::string, Opts> opts;
  const std::pair<const char*, const char*> subs[] = {
      {"scatter", "scattering coefficients, winding and eigenvalues of a potential"},
      {"zeros", "locate eigenvalues and norming constants"},
      {"add", "add a soliton at k1 with norming constant gamma"},
      {"remove", "remove the soliton at k1"},
      {"nsoliton", "N-soliton potential from the vacuum"},
      {"evolve", "evolve scattering data, or write an N-soliton space-time patch"},
      {"verify", "run the invariant suite"},
      {"norms", "Sobolev norms, smallness functional and c"},
  };
  for (auto [name, desc] : subs) {
    auto* sc = app.add_subcommand(name, desc);
    sc->add_option("--config", config, "JSON config file");
    sc->add_option("--input", input, "input file");
    sc->add_option("--output", output, "output file");
    sc->add_option("--k1", k1, "eigenvalue RE,IM");
    sc->add_option("--gamma", gamma, "norming constant RE,IM");
    auto* t = sc->add_option("--time", time, "time T");
    sc->add_option("--grid", grid, "grid L,N");
    sc->add_option("--tolerance", tolerances, "NAME=VALUE (repeatable)");
    auto* s = sc->add_option("--select", select, "comma-separated check ids (verify)");
    opts[name] = {t, s};
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    RunConfig c;
    if (!config.empty()) apply_config(c, read_json(config));
    if (!input.empty()) c.input = input;
    if (!output.empty()) c.output = output;
    if (!k1.empty()) c.k1 = parse_cplx(k1);
    if (!gamma.empty()) c.gamma = parse_cplx(gamma);
    if (opts[cmd].time->count()) c.time = time;
    if (!grid.empty()) {
      cplx g = parse_cplx(grid);
      if (g.imag() != std::floor(g.imag())) throw Error("grid N must be an integer");
      c.grid = Grid(g.real(), (int)g.imag());
    }
    for (auto& t : tolerances) apply_tolerance(c, t);
    if (opts[cmd].select->count()) c.select = split_list(select);
    if (c.select)
      for (auto& id : *c.select) default_threshold(id);

    if (cmd == "scatter") return cmd_scatter(c, out, err);
    if (cmd == "zeros") return cmd_zeros(c, out, err);
    if (cmd == "add") return cmd_add(c, out, err);
    if (cmd == "remove") return cmd_remove(c, out, err);
    if (cmd == "nsoliton") return cmd_nsoliton(c, out, err);
    if (cmd == "evolve") return cmd_evolve(c, out, err);
    if (cmd == "verify") return cmd_verify(c, out, err);
    return cmd_norms(c, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace fl
