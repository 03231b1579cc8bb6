#include "fl/scattering.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace fl {

std::pair<int, int> reference_window(const Grid& g) {
  int lo = (int)std::floor(0.4 * (g.N - 1));
  int hi = (int)std::ceil(0.6 * (g.N - 1));
  return {lo, hi};
}

static cplx det2(cplx a1, cplx a2, cplx b1, cplx b2) { return a1 * b2 - a2 * b1; }

// Mean of f over the window and the largest deviation from it.
template <class F> static std::pair<cplx, double> window_average(const Grid& g, F f) {
  auto [lo, hi] = reference_window(g);
  std::vector<cplx> vals;
  cplx mean = 0;
  for (int i = lo; i <= hi; ++i) {
    vals.push_back(f(i));
    mean += vals.back();
  }
  mean /= double(vals.size());
  double spread = 0;
  for (auto v : vals) spread = std::max(spread, std::abs(v - mean));
  return {mean, spread};
}

ScatteringSample coefficients(const JostSolver& s, const SpectralPoint& k, const Tolerances& tol) {
  const Grid& g = s.u().grid;
  ScatteringSample out{k, 0.0, std::nullopt, std::nullopt, 0.0, {}};
  auto phim = s.solve(k, Side::Minus, Column::First);
  auto phip2 = s.solve(k, Side::Plus, Column::Second);
  auto [a, sa] = window_average(g, [&](int i) { return det2(phim.psi1[i], phim.psi2[i], phip2.psi1[i], phip2.psi2[i]); });
  out.a = a;
  out.spread = sa;
  if (k.on_continuous_spectrum()) {
    auto phip1 = s.solve(k, Side::Plus, Column::First);
    const cplx k2 = k.k2();
    auto [b, sb] = window_average(g, [&](int i) {
      return std::exp(-2.0 * I * k2 * g.x(i)) * det2(phip1.psi1[i], phip1.psi2[i], phim.psi1[i], phim.psi2[i]);
    });
    out.b = b;
    out.spread = std::max(sa, sb);
    if (std::abs(a) < tol.zero) throw Error("resonance encountered");
    out.r = b / a;
  }
  if (out.spread > tol.spread) out.warnings.push_back("ill-conditioned Wronskian");
  if (s.decay_warning()) out.warnings.push_back("potential does not decay at the grid ends");
  return out;
}

ScatteringSample coefficients(const GridFunction& u, const SpectralPoint& k, const Tolerances& tol) {
  return coefficients(JostSolver(u), k, tol);
}

cplx a_sweep(const JostSolver& s, cplx k) { return s.sweep_minus_first(SpectralPoint(k)).first; }

cplx reflection(const JostSolver& s, const SpectralPoint& k, const Tolerances& tol) {
  if (!k.on_continuous_spectrum()) throw Error("reflection requires k on the real or imaginary axis");
  Tolerances t = tol;
  t.zero = 1e-12;
  try {
    return *coefficients(s, k, t).r;
  } catch (const Error& e) {
    if (std::string(e.what()) == "resonance encountered") throw Error("division by vanishing a");
    throw;
  }
}

cplx reflection(const GridFunction& u, const SpectralPoint& k, const Tolerances& tol) {
  return reflection(JostSolver(u), k, tol);
}

namespace {

cplx boundary_point(const Rect& r, double t) {
  int side = std::min(3, (int)std::floor(t));
  double f = t - side;
  switch (side) {
  case 0: return {r.re0 + f * (r.re1 - r.re0), r.im0};
  case 1: return {r.re1, r.im0 + f * (r.im1 - r.im0)};
  case 2: return {r.re1 - f * (r.re1 - r.re0), r.im1};
  default: return {r.re0, r.im1 - f * (r.im1 - r.im0)};
  }
}

void check_rect(const Rect& r, const Tolerances& tol) {
  if (!(r.re1 > r.re0 && r.im1 > r.im0)) throw Error("empty rectangle");
  if (r.re0 < tol.contour_margin - 1e-15 || r.im0 < tol.contour_margin - 1e-15)
    throw Error("contour too close to the axes");
}

} // namespace

int winding(const JostSolver& s, const Rect& rect, const Tolerances& tol) {
  check_rect(rect, tol);
  auto eval = [&](double t) {
    cplx a = a_sweep(s, boundary_point(rect, t));
    if (!(std::abs(a) > tol.contour_zero)) throw Error("zero on contour");
    return a;
  };
  std::function<double(double, cplx, double, cplx, int)> seg = [&](double t0, cplx a0, double t1, cplx a1, int depth) {
    double d = std::arg(a1 / a0);
    if (std::abs(d) < std::numbers::pi / 2) return d;
    if (depth > 40) throw Error("refinement failure");
    double tm = 0.5 * (t0 + t1);
    cplx am = eval(tm);
    return seg(t0, a0, tm, am, depth + 1) + seg(tm, am, t1, a1, depth + 1);
  };
  const int per_side = 64;
  const int n = 4 * per_side;
  double total = 0;
  cplx a0 = eval(0.0), prev = a0;
  for (int j = 1; j <= n; ++j) {
    double t0 = double(j - 1) / per_side, t1 = double(j) / per_side;
    cplx a1 = j == n ? a0 : eval(t1);
    total += seg(t0, prev, t1, a1, 0);
    prev = a1;
  }
  double w = total / (2 * std::numbers::pi);
  long r = std::lround(w);
  if (std::abs(w - r) > 0.1) throw Error("refinement failure");
  return (int)r;
}

namespace {

// Newton on a(k); returns nothing if the iteration leaves the region where
// a is computable or does not converge.
std::optional<std::pair<cplx, cplx>> newton(const JostSolver& s, cplx k, const Tolerances& tol) {
  const double d = 1e-5;
  try {
    cplx a = a_sweep(s, k);
    int polish = -1;
    cplx best = k, best_a = a, best_da = 0;
    for (int it = 0; it < 60; ++it) {
      cplx da = (a_sweep(s, k + d) - a_sweep(s, k - d)) / (2 * d);
      if (std::abs(a) <= std::abs(best_a) || it == 0) {
        best = k;
        best_a = a;
        best_da = da;
      }
      if (std::abs(best_a) < tol.newton && polish < 0) polish = 0;
      if (polish >= 0 && ++polish > 3) break;
      if (da == 0.0) return std::nullopt;
      k -= a / da;
      if (!(k.real() > 0 && k.imag() > 0)) return std::nullopt;
      a = a_sweep(s, k);
      if (polish >= 0 && !(std::abs(a) < std::abs(best_a))) break;
    }
    if (!(std::abs(best_a) < tol.newton)) return std::nullopt;
    return std::make_pair(best, best_da);
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool inside(const Rect& r, cplx k, double slack) {
  return k.real() >= r.re0 - slack && k.real() <= r.re1 + slack && k.imag() >= r.im0 - slack &&
         k.imag() <= r.im1 + slack;
}

void isolate(const JostSolver& s, const Rect& r, int n, const Tolerances& tol, std::vector<SpectralPoint>& out) {
  if (n == 0) return;
  const double w = std::max(r.re1 - r.re0, r.im1 - r.im0);
  if (n == 1) {
    cplx c{0.5 * (r.re0 + r.re1), 0.5 * (r.im0 + r.im1)};
    if (auto z = newton(s, c, tol); z && inside(r, z->first, 1e-9)) {
      if (std::abs(z->second) <= tol.simple_zero) throw Error("clustered or multiple zeros");
      out.emplace_back(z->first);
      return;
    }
    if (w < 1e-6) throw Error("refinement failed");
  } else if (w < 1e-6) {
    throw Error("clustered or multiple zeros");
  }
  Tolerances t = tol;
  t.contour_margin = 0.0;
  static const double fractions[] = {0.5, 0.537, 0.463, 0.571, 0.429, 0.611};
  for (double f : fractions) {
    double xm = r.re0 + f * (r.re1 - r.re0), ym = r.im0 + f * (r.im1 - r.im0);
    Rect kids[4] = {{r.re0, xm, r.im0, ym}, {xm, r.re1, r.im0, ym}, {r.re0, xm, ym, r.im1}, {xm, r.re1, ym, r.im1}};
    int counts[4];
    try {
      int sum = 0;
      for (int j = 0; j < 4; ++j) sum += counts[j] = winding(s, kids[j], t);
      if (sum != n) continue;
    } catch (const Error&) {
      continue;
    }
    for (int j = 0; j < 4; ++j) isolate(s, kids[j], counts[j], tol, out);
    return;
  }
  throw Error("clustered or multiple zeros");
}

} // namespace

std::vector<SpectralPoint> locate_zeros(const JostSolver& s, const Rect& rect, const Tolerances& tol) {
  std::vector<SpectralPoint> out;
  int n = winding(s, rect, tol);
  isolate(s, rect, n, tol, out);
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j)
      if (std::abs(out[i].k - out[j].k) < 1e-8) throw Error("clustered or multiple zeros");
  return out;
}

Norming norming_constant(const JostSolver& s, const SpectralPoint& k1, const Tolerances& tol) {
  if (!(std::abs(a_sweep(s, k1.k)) < tol.zero)) throw Error("not an eigenvalue");
  auto phim = s.solve(k1, Side::Minus, Column::First);
  auto phip = s.solve(k1, Side::Plus, Column::Second);
  const Grid& g = s.u().grid;
  auto [lo, hi] = reference_window(g);
  const cplx k2 = k1.k2();
  // Weighted least squares: each node counts with the inverse of its
  // relative error, which is smallest where both columns are O(1).
  std::vector<cplx> f1, f2, g1, g2;
  std::vector<double> w;
  for (int i = lo; i <= hi; ++i) {
    cplx e = std::exp(2.0 * I * k2 * g.x(i));
    double nm = std::sqrt(std::norm(phim.psi1[i]) + std::norm(phim.psi2[i]));
    double np = std::sqrt(std::norm(phip.psi1[i]) + std::norm(phip.psi2[i]));
    f1.push_back(phim.psi1[i]);
    f2.push_back(phim.psi2[i]);
    g1.push_back(e * phip.psi1[i]);
    g2.push_back(e * phip.psi2[i]);
    double rel = 1.0 / nm + 1.0 / np;
    w.push_back(1.0 / (rel * rel * nm * nm));
  }
  cplx num = 0;
  double den = 0, ff = 0;
  for (size_t j = 0; j < w.size(); ++j) {
    num += w[j] * (std::conj(g1[j]) * f1[j] + std::conj(g2[j]) * f2[j]);
    den += w[j] * (std::norm(g1[j]) + std::norm(g2[j]));
    ff += w[j] * (std::norm(f1[j]) + std::norm(f2[j]));
  }
  cplx gamma = num / den;
  double res = 0;
  for (size_t j = 0; j < w.size(); ++j)
    res += w[j] * (std::norm(f1[j] - gamma * g1[j]) + std::norm(f2[j] - gamma * g2[j]));
  res = std::sqrt(res / ff);
  if (res > tol.proportionality) throw Error("not an eigenvalue");
  return {gamma, res};
}

DiscreteSpectrum discrete_spectrum(const JostSolver& s, const Rect& rect, const Tolerances& tol) {
  DiscreteSpectrum d;
  for (auto& k : locate_zeros(s, rect, tol)) d.eigenvalues.push_back({k, norming_constant(s, k, tol).gamma});
  return d;
}

} // namespace fl
