#include "fl/verify.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>

namespace fl {

namespace {

std::string fmt(const char* f, ...) {
  char buf[1024];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

struct CheckDef {
  const char* id;
  const char* title;
  double threshold;
  bool at_least;
};

const CheckDef kChecks[] = {
    {"vacuum", "vacuum baseline a=1, b=0", 1e-12, false},
    {"unimodularity", "det S = 1 on the real axis", 1e-8, false},
    {"symmetry", "a(-k) = a(k), b(-k) = -b(k)", 1e-8, false},
    {"asymptote", "|a(k) - e^{-ic}| decay per doubling of k", 1.8, true},
    {"soliton_free", "smallness 0.9 gives winding 0", 0.5, false},
    {"zero_creation", "add_soliton creates the zero (k1, gamma)", 1e-6, false},
    {"multiplier_law", "a1 k^2 = (k^2 - conj k1^2) a and b1 = -b", 1e-6, false},
    {"invertibility", "remove/add round trips", 1e-8, false},
    {"pde_convergence", "PDE residual order under (h, tau) halving", 1.8, true},
    {"evolution_commutes", "evolve/transform commute on r(k)", 1e-8, false},
    {"norm_preservation", "||u1_x|| = ||u_x|| under add/remove", 1e-6, false},
    {"representation", "four eigenfunction seeds agree", 1e-7, false},
};

const CheckDef& def_of(const std::string& id) {
  for (auto& s : kChecks)
    if (id == s.id) return s;
  throw Error("unknown check '" + id + "'");
}

const cplx kK1{0.8, 0.6};
const cplx kGamma{1.0, 0.5};

GridFunction gaussian(const Grid& g, double amp) {
  return GridFunction::sample(g, [amp](double x) { return cplx(amp * std::exp(-x * x)); });
}

// 2n real samples: +-(0.1 .. 4).
std::vector<double> real_samples(int n) {
  std::vector<double> k;
  for (int j = 0; j < n; ++j) {
    double v = 0.1 + 3.9 * j / (n - 1);
    k.push_back(v);
    k.push_back(-v);
  }
  return k;
}

double threshold_for(const std::string& id, const SuiteOptions& opt) {
  auto it = opt.thresholds.find(id);
  return it == opt.thresholds.end() ? def_of(id).threshold : it->second;
}

void finish(Check& c, double measured, bool extra_ok = true) {
  c.measured = measured;
  bool ok = c.at_least ? measured >= c.threshold : measured < c.threshold;
  c.pass = ok && extra_ok && std::isfinite(measured);
}

void vacuum(Check& c, const SuiteOptions& o) {
  JostSolver s(GridFunction(o.grid));
  double dev = 0;
  for (double k : real_samples(32)) {
    auto r = coefficients(s, SpectralPoint(k), o.tol);
    dev = std::max({dev, std::abs(r.a - 1.0), std::abs(*r.b)});
  }
  c.detail = "64 real samples";
  finish(c, dev);
}

void unimodularity(Check& c, const SuiteOptions& o) {
  JostSolver s(gaussian(o.grid, 0.5), SolverOptions{});
  double dev = 0;
  for (double k : real_samples(32)) {
    auto r = coefficients(s, SpectralPoint(k), o.tol);
    dev = std::max(dev, std::abs(std::norm(r.a) + std::norm(*r.b) - 1.0));
  }
  c.detail = "u0 = 0.5 exp(-x^2), 64 real samples";
  finish(c, dev);
}

void symmetry(Check& c, const SuiteOptions& o) {
  JostSolver s(gaussian(o.grid, 0.5));
  double da = 0, db = 0;
  auto ks = real_samples(32);
  for (size_t j = 0; j < ks.size(); j += 2) {
    auto p = coefficients(s, SpectralPoint(ks[j]), o.tol);
    auto m = coefficients(s, SpectralPoint(ks[j + 1]), o.tol);
    da = std::max(da, std::abs(m.a - p.a));
    db = std::max(db, std::abs(*m.b + *p.b));
  }
  c.detail = fmt("max |a(-k)-a(k)| = %.2e, max |b(-k)+b(k)| = %.2e", da, db);
  finish(c, std::max(da, db));
}

void asymptote(Check& c, const SuiteOptions& o) {
  auto u = gaussian(o.grid, 0.5);
  JostSolver s(u);
  double cc = c_constant(u, o.tol.decay).value;
  cplx target = std::exp(-I * cc);
  double d[3];
  const double ks[3] = {10, 20, 40};
  for (int j = 0; j < 3; ++j) d[j] = std::abs(coefficients(s, SpectralPoint(ks[j]), o.tol).a - target);
  double r1 = d[0] / d[1], r2 = d[1] / d[2];
  c.detail = fmt("c = %.10f; |a-e^{-ic}| = %.3e, %.3e, %.3e at k = 10, 20, 40; ratios %.2f, %.2f", cc, d[0], d[1],
                 d[2], r1, r2);
  finish(c, std::min(r1, r2));
}

void soliton_free(Check& c, const SuiteOptions& o) {
  auto small = [&](double amp) { return sobolev_report(gaussian(o.grid, amp)).smallness; };
  double lo = 0, hi = 0.5;
  while (small(hi) < 0.9) hi *= 2;
  for (int it = 0; it < 60; ++it) {
    double mid = 0.5 * (lo + hi);
    (small(mid) < 0.9 ? lo : hi) = mid;
  }
  double amp = 0.5 * (lo + hi);
  int w = winding(JostSolver(gaussian(o.grid, amp)), Rect{}, o.tol);
  c.detail = fmt("amplitude %.6f (smallness %.12f), winding over [0.05,3]^2 = %d", amp, small(amp), w);
  finish(c, std::abs(w));
}

void zero_creation(Check& c, const SuiteOptions& o) {
  SpectralPoint k1(kK1);
  auto u = add_soliton(GridFunction(o.grid), k1, kGamma, o.tol);
  JostSolver s(u);
  int w = winding(s, Rect{}, o.tol);
  auto z = locate_zeros(s, Rect{}, o.tol);
  if (z.size() != 1) {
    c.detail = fmt("winding %d, %zu zeros located", w, z.size());
    finish(c, INFINITY, false);
    return;
  }
  cplx g = norming_constant(s, z[0], o.tol).gamma;
  double ek = std::abs(z[0].k - kK1), eg = std::abs(g - kGamma);
  c.detail = fmt("winding %d; k1 error %.2e; gamma error %.2e", w, ek, eg);
  finish(c, std::max(ek, eg), w == 1);
}

void multiplier_law(Check& c, const SuiteOptions& o) {
  SpectralPoint k1(kK1);
  auto u = add_soliton(gaussian(o.grid, 0.5), k1, kGamma, o.tol);
  JostSolver s(u);
  auto rem = remove_soliton(s, k1, o.tol);
  JostSolver s1(rem.u);
  double stated = 0, bdev = 0, law = 0;
  for (double k : real_samples(16)) {
    SpectralPoint sp(k);
    auto r = coefficients(s, sp, o.tol), r1 = coefficients(s1, sp, o.tol);
    double k2 = k * k;
    stated = std::max(stated, std::abs(r1.a * k2 - (k2 - std::conj(kK1 * kK1)) * r.a) / (std::abs(r.a) * k2));
    bdev = std::max(bdev, std::abs(*r1.b + *r.b));
    law = std::max(law, std::abs(r1.a - removal_factor(k, kK1) * r.a) / std::abs(r.a));
  }
  c.detail = fmt("stated law residual %.3e; |b1 + b| = %.2e; a1 = (k1/conj k1)^2 (k^2-conj k1^2)/(k^2-k1^2) a "
                 "holds to %.2e",
                 stated, bdev, law);
  finish(c, stated, bdev < 1e-8);
}

void invertibility(Check& c, const SuiteOptions& o) {
  SpectralPoint k1(kK1);
  double worst = 0;
  std::string d;
  for (auto [name, bg] : {std::pair{"vacuum", GridFunction(o.grid)}, {"gaussian", gaussian(o.grid, 0.5)}}) {
    auto u = add_soliton(bg, k1, kGamma, o.tol);
    auto back = remove_soliton(u, k1, o.tol).u;
    double e1 = sup_distance(back, bg);
    double e2 = sup_distance(add_soliton(back, k1, kGamma, o.tol), u);
    worst = std::max({worst, e1, e2});
    d += fmt("%s: remove(add) %.2e, add(remove) %.2e; ", name, e1, e2);
  }
  c.detail = d;
  finish(c, worst);
}

void pde_convergence(Check& c, const SuiteOptions& o) {
  std::vector<SolitonParameters> one = {SolitonParameters(kK1, kGamma, 0.0, o.tol)};
  std::vector<SolitonParameters> two = {one[0], SolitonParameters({1.2, 0.4}, {0.7, -0.2}, 0.0, o.tol)};
  double worst = INFINITY;
  std::string d;
  for (auto* ps : {&one, &two}) {
    std::vector<double> R;
    for (int lev = 0; lev < 4; ++lev) {
      Grid g(15.0, 1200 * (1 << lev) + 1);
      std::vector<double> ts;
      for (int n = -2; n <= 2; ++n) ts.push_back(0.3 + n * g.h);
      R.push_back(pde_residual(soliton_patch(*ps, g, ts, o.tol)));
    }
    d += fmt("%zu-soliton R =", ps->size());
    for (double r : R) d += fmt(" %.3e", r);
    d += " orders";
    for (int j = 0; j < 3; ++j) {
      double ord = std::log2(R[j] / R[j + 1]);
      worst = std::min(worst, ord);
      d += fmt(" %.3f", ord);
    }
    d += "; ";
  }
  c.detail = d + "h = 0.025 .. 0.003125 on [-15,15], tau = h";
  finish(c, worst);
}

void evolution_commutes(Check& c, const SuiteOptions& o) {
  SpectralPoint k1(kK1);
  auto u = gaussian(o.grid, 0.5);
  JostSolver s(u), s1(add_soliton(u, k1, kGamma, o.tol));
  double worst = 0;
  int pairs = 0;
  for (double k : real_samples(8)) {
    SpectralPoint sp(k);
    cplx r = reflection(s, sp, o.tol), r1 = reflection(s1, sp, o.tol);
    cplx factor = -(kK1 * kK1 / std::conj(kK1 * kK1)) * (k * k - std::conj(kK1 * kK1)) / (k * k - kK1 * kK1);
    for (double t : {0.5, 2.0}) {
      cplx a = factor * evolve_reflection(r, sp, t);
      cplx b = evolve_reflection(r1, sp, t);
      worst = std::max(worst, std::abs(a - b));
      ++pairs;
    }
  }
  c.detail = fmt("%d (k, t) pairs; transform = add_soliton(k1 = 0.8+0.6i)", pairs);
  finish(c, worst);
}

void norm_preservation(Check& c, const SuiteOptions& o) {
  SpectralPoint k1(kK1);
  double worst = 0;
  std::string d;
  for (auto [name, bg] : {std::pair{"vacuum", GridFunction(o.grid)}, {"gaussian", gaussian(o.grid, 0.5)}}) {
    auto u = add_soliton(bg, k1, kGamma, o.tol);
    auto back = remove_soliton(u, k1, o.tol).u;
    double n0 = l2_norm(derivative(bg, 1)), n1 = l2_norm(derivative(u, 1)), n2 = l2_norm(derivative(back, 1));
    worst = std::max({worst, std::abs(n1 - n0), std::abs(n2 - n1)});
    auto s0 = sobolev_report(bg), s1 = sobolev_report(u);
    double dc = c_constant(u, o.tol.decay).value - c_constant(bg, o.tol.decay).value;
    d += fmt("%s: ||u_x|| %.6f -> add %.6f -> remove %.6f, c shift %.8f (4 arg k1 = %.8f), H3 %.4f -> %.4f, "
             "H21 %.4f -> %.4f; ",
             name, n0, n1, n2, dc, 4 * std::arg(kK1), s0.H3, s1.H3, s0.H21, s1.H21);
  }
  c.detail = d;
  finish(c, worst);
}

void representation(Check& c, const SuiteOptions& o) {
  SpectralPoint k1(kK1);
  auto u = add_soliton(GridFunction(o.grid), k1, kGamma, o.tol);
  JostSolver s(u);
  auto z = locate_zeros(s, Rect{}, o.tol);
  if (z.size() != 1) {
    c.detail = "eigenvalue not isolated";
    finish(c, INFINITY, false);
    return;
  }
  const SeedForm forms[4] = {SeedForm::PhiMinusK1, SeedForm::PhiPlusK1, SeedForm::PhiPlusConjK1, SeedForm::PhiMinusConjK1};
  GridFunction r[4];
  for (int j = 0; j < 4; ++j) r[j] = apply_darboux(u, eigen_seed(s, z[0], forms[j]), o.tol);
  auto [lo, hi] = reference_window(o.grid);
  double win = 0, full = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int i = 0; i < o.grid.N; ++i) {
        double e = std::abs(r[a][i] - r[b][i]);
        full = std::max(full, e);
        if (i >= lo && i <= hi) win = std::max(win, e);
      }
  c.detail = fmt("located k1 = %.12f%+.12fi, |a(k1)| = %.1e; window [%.1f, %.1f]; full-grid spread %.2e", z[0].k.real(),
                 z[0].k.imag(), std::abs(a_sweep(s, z[0].k)), o.grid.x(lo), o.grid.x(hi), full);
  finish(c, win);
}

} // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (auto& s : kChecks) v.push_back(s.id);
    return v;
  }();
  return ids;
}

double default_threshold(const std::string& id) { return def_of(id).threshold; }

Check run_check(const std::string& id, const SuiteOptions& opt) {
  const CheckDef& sp = def_of(id);
  Check c{id, sp.title, 0.0, threshold_for(id, opt), sp.at_least, false, ""};
  static const std::map<std::string, void (*)(Check&, const SuiteOptions&)> fns = {
      {"vacuum", vacuum},
      {"unimodularity", unimodularity},
      {"symmetry", symmetry},
      {"asymptote", asymptote},
      {"soliton_free", soliton_free},
      {"zero_creation", zero_creation},
      {"multiplier_law", multiplier_law},
      {"invertibility", invertibility},
      {"pde_convergence", pde_convergence},
      {"evolution_commutes", evolution_commutes},
      {"norm_preservation", norm_preservation},
      {"representation", representation},
  };
  try {
    fns.at(id)(c, opt);
  } catch (const Error& e) {
    c.pass = false;
    c.measured = NAN;
    c.detail = std::string("error: ") + e.what();
  }
  return c;
}

VerifyReport run_suite(const std::vector<std::string>& ids, const SuiteOptions& opt) {
  VerifyReport r;
  for (auto& id : ids) r.checks.push_back(run_check(id, opt));
  return r;
}

bool VerifyReport::pass() const {
  for (auto& c : checks)
    if (!c.pass) return false;
  return true;
}

json VerifyReport::to_json() const {
  json j;
  j["pass"] = pass();
  j["checks"] = json::array();
  for (auto& c : checks)
    j["checks"].push_back({{"id", c.id},
                           {"title", c.title},
                           {"measured", std::isfinite(c.measured) ? json(c.measured) : json(nullptr)},
                           {"threshold", c.threshold},
                           {"relation", c.at_least ? ">=" : "<"},
                           {"pass", c.pass},
                           {"detail", c.detail}});
  return j;
}

std::string VerifyReport::table() const {
  std::string s = fmt("%-20s %-6s %12s %4s %-10s\n", "check", "result", "measured", "", "threshold");
  for (auto& c : checks)
    s += fmt("%-20s %-6s %12.4e %4s %-10.3g %s\n", c.id.c_str(), c.pass ? "PASS" : "FAIL", c.measured,
             c.at_least ? ">=" : "<", c.threshold, c.detail.c_str());
  s += pass() ? "all checks passed\n" : "some checks failed\n";
  return s;
}

} // namespace fl
