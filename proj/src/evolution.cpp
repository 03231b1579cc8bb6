#include "fl/evolution.hpp"

#include <algorithm>
#include <cmath>

namespace fl {

SolitonParameters::SolitonParameters(cplx k, cplx g, double t_, const Tolerances& tol) : k1(k), gamma0(g), t(t_) {
  check_anchor(k1, tol);
  if (gamma0 == 0.0 || !std::isfinite(std::abs(gamma0))) throw Error("norming constant must be nonzero");
  if (!std::isfinite(t)) throw Error("non-finite time");
}

cplx evolve_reflection(cplx r0, const SpectralPoint& k, double t) {
  if (!k.on_continuous_spectrum()) throw Error("reflection requires k on the real or imaginary axis");
  cplx e = k.eta;
  return r0 * std::exp(2.0 * I * e * e * t);
}

cplx evolve_norming(cplx gamma0, const SpectralPoint& k1, double t) {
  cplx e = k1.eta;
  return gamma0 * std::exp(2.0 * I * e * e * t);
}

std::pair<GridFunction, GridFunction> vacuum_seed(const SolitonParameters& p, const Grid& g) {
  GridFunction e1(g), e2(g);
  const cplx k2 = p.k1.k2(), eta2 = p.k1.eta * p.k1.eta;
  for (int i = 0; i < g.N; ++i) {
    cplx th = k2 * g.x(i) + eta2 * p.t;
    e1[i] = std::exp(-I * th);
    e2[i] = p.gamma0 * std::exp(I * th);
  }
  return {e1, e2};
}

namespace {

// Same direction as vacuum_seed, scaled so the larger entry has modulus 1.
Vec2 scaled_vacuum_seed(const SolitonParameters& p, double x) {
  cplx th = p.k1.k2() * x + p.k1.eta * p.k1.eta * p.t;
  // log-moduli of the two entries
  double l1 = th.imag(), l2 = std::log(std::abs(p.gamma0)) - th.imag();
  double lm = std::max(l1, l2);
  return {std::exp(-I * th.real() + (l1 - lm)),
          p.gamma0 / std::abs(p.gamma0) * std::exp(I * th.real() + (l2 - lm))};
}

} // namespace

GridFunction n_soliton(std::vector<SolitonParameters> ps, const Grid& g, const Tolerances& tol) {
  std::stable_sort(ps.begin(), ps.end(),
                   [](const SolitonParameters& a, const SolitonParameters& b) { return std::abs(a.k1.k) < std::abs(b.k1.k); });
  for (size_t i = 0; i < ps.size(); ++i) {
    for (size_t j = i + 1; j < ps.size(); ++j)
      if (std::abs(ps[i].k1.k - ps[j].k1.k) < 1e-12) throw Error("eigenvalues must be distinct");
    if (ps[i].t != ps[0].t) throw Error("solitons must share one time");
  }
  GridFunction u(g);
  std::vector<DarbouxSeed> stages;
  for (const auto& p : ps) {
    // vacuum seed dressed by sigma3 T of every earlier stage
    GridFunction e1(g), e2(g);
    for (int i = 0; i < g.N; ++i) {
      Vec2 v = scaled_vacuum_seed(p, g.x(i));
      for (const auto& s : stages) {
        v = darboux_matrix(s.k1.k, s.at(i), p.k1.k) * v;
        v[1] = -v[1];
        double n = std::max(std::abs(v[0]), std::abs(v[1]));
        v = {v[0] / n, v[1] / n};
      }
      e1[i] = v[0];
      e2[i] = v[1];
    }
    stages.emplace_back(p.k1, e1, e2);
    u = apply_darboux(u, stages.back(), tol);
  }
  if (!decays(u, tol.decay)) throw Error("truncation violated");
  return u;
}

SpaceTimePatch soliton_patch(const std::vector<SolitonParameters>& ps, const Grid& g, const std::vector<double>& times,
                             const Tolerances& tol) {
  SpaceTimePatch out{g, times, {}};
  for (double t : times) {
    auto q = ps;
    for (auto& p : q) p.t = t;
    out.u.push_back(n_soliton(q, g, tol).v);
  }
  return out;
}

double pde_residual(const SpaceTimePatch& p) {
  const int nt = (int)p.t.size(), nx = p.grid.N;
  if (nt < 5 || nx < 5) throw Error("patch must be at least 5x5");
  if ((int)p.u.size() != nt) throw Error("patch dimensions inconsistent");
  for (auto& row : p.u)
    if ((int)row.size() != nx) throw Error("patch dimensions inconsistent");
  const double tau = p.t[1] - p.t[0], h = p.grid.h;
  for (int n = 2; n < nt; ++n)
    if (std::abs(p.t[n] - p.t[n - 1] - tau) > 1e-9 * std::abs(tau)) throw Error("non-uniform time levels");
  double r = 0;
  for (int n = 1; n + 1 < nt; ++n) {
    const auto &um = p.u[n - 1], &u0 = p.u[n], &up = p.u[n + 1];
    for (int i = 1; i + 1 < nx; ++i) {
      cplx utx = (up[i + 1] - up[i - 1] - um[i + 1] + um[i - 1]) / (4 * h * tau);
      cplx ux = (u0[i + 1] - u0[i - 1]) / (2 * h);
      cplx uxx = (u0[i + 1] - 2.0 * u0[i] + u0[i - 1]) / (h * h);
      cplx res = utx + u0[i] - 2.0 * I * ux - uxx - I * std::norm(u0[i]) * ux;
      r = std::max(r, std::abs(res));
    }
  }
  return r;
}

} // namespace fl
