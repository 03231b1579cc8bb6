#include "fl/darboux.hpp"

#include <cmath>
#include <numbers>

namespace fl {

DarbouxSeed::DarbouxSeed(const SpectralPoint& k, GridFunction e1, GridFunction e2)
    : k1(k), eta1(std::move(e1)), eta2(std::move(e2)) {
  if (!(eta1.grid == eta2.grid)) throw Error("grid mismatch");
  if (k1.on_continuous_spectrum()) throw Error("seed anchor on the continuous spectrum");
  for (int i = 0; i < eta1.size(); ++i) {
    double n = std::norm(eta1[i]) + std::norm(eta2[i]);
    if (!std::isfinite(n)) throw Error("non-finite seed");
    if (n == 0.0) throw Error("degenerate seed");
  }
}

cplx bilinear_m(cplx k, const Vec2& eta, const Vec2& xi) {
  return k * eta[0] * std::conj(xi[0]) + std::conj(k) * eta[1] * std::conj(xi[1]);
}

namespace {

struct AC {
  cplx A, C, m;
};

// Evaluated on the unit-normalized direction; A and C are invariant under
// pointwise rescaling of eta.
AC ac_at(cplx k1, Vec2 eta, double degenerate) {
  double n = std::sqrt(std::norm(eta[0]) + std::norm(eta[1]));
  eta = {eta[0] / n, eta[1] / n};
  cplx m = bilinear_m(k1, eta, eta);
  if (std::abs(m) < degenerate) throw Error("degenerate seed");
  cplx mb = bilinear_m(std::conj(k1), eta, eta);
  cplx k1s = k1 * k1;
  return {mb / m, (k1s - std::conj(k1s)) * eta[0] * std::conj(eta[1]) / m, m * n * n};
}

Mat2 t_from(cplx k1, const AC& ac, cplx k) {
  cplx k2 = k * k;
  double r2 = std::norm(k1);
  cplx pre = (k1 / std::conj(k1)) / (k2 - k1 * k1);
  return {pre * (ac.A * k2 - r2), -pre * ac.C * k, pre * std::conj(ac.C) * k, pre * (std::conj(ac.A) * k2 - r2)};
}

} // namespace

DarbouxCoefficients coefficients_AC(const DarbouxSeed& seed, const Tolerances& tol) {
  const Grid& g = seed.grid();
  DarbouxCoefficients r{GridFunction(g), GridFunction(g), GridFunction(g)};
  for (int i = 0; i < g.N; ++i) {
    auto ac = ac_at(seed.k1.k, seed.at(i), tol.degenerate);
    r.A[i] = ac.A;
    r.C[i] = ac.C;
    r.m[i] = ac.m;
  }
  return r;
}

Mat2 darboux_matrix(cplx k1, const Vec2& eta, cplx k) {
  if (std::abs(k * k - k1 * k1) == 0.0) throw Error("pole of Darboux matrix");
  return t_from(k1, ac_at(k1, eta, 0.0), k);
}

std::vector<Mat2> darboux_matrix(const DarbouxSeed& seed, cplx k, const Tolerances& tol) {
  const cplx k1 = seed.k1.k;
  if (std::abs(k * k - k1 * k1) <= 1e-14 * std::norm(k1)) throw Error("pole of Darboux matrix");
  std::vector<Mat2> out;
  out.reserve(seed.grid().N);
  for (int i = 0; i < seed.grid().N; ++i) out.push_back(t_from(k1, ac_at(k1, seed.at(i), tol.degenerate), k));
  return out;
}

cplx removal_factor(cplx k, cplx k1) {
  cplx r = k1 / std::conj(k1);
  return r * r * (k * k - std::conj(k1 * k1)) / (k * k - k1 * k1);
}

GridFunction apply_darboux(const GridFunction& u, const DarbouxSeed& seed, const Tolerances& tol) {
  if (!(u.grid == seed.grid())) throw Error("grid mismatch");
  const double r2 = std::norm(seed.k1.k);
  GridFunction out(u.grid);
  for (int i = 0; i < u.size(); ++i) {
    auto ac = ac_at(seed.k1.k, seed.at(i), tol.degenerate);
    out[i] = -u[i] - ac.C / r2;
  }
  return out;
}

DarbouxSeed inverse_seed(const DarbouxSeed& seed) {
  const Grid& g = seed.grid();
  const cplx k1 = seed.k1.k;
  GridFunction e1(g), e2(g);
  for (int i = 0; i < g.N; ++i) {
    Vec2 eta = seed.at(i);
    e1[i] = std::conj(eta[1]) / bilinear_m(k1, eta, eta);
    e2[i] = std::conj(eta[0]) / bilinear_m(std::conj(k1), eta, eta);
  }
  return DarbouxSeed(seed.k1, e1, e2);
}

DarbouxSeed eigen_seed(const JostSolver& s, const SpectralPoint& k1, SeedForm form) {
  SpectralPoint kb(std::conj(k1.k));
  JostVector j = [&] {
    switch (form) {
    case SeedForm::PhiMinusK1: return s.solve(k1, Side::Minus, Column::First);
    case SeedForm::PhiPlusK1: return s.solve(k1, Side::Plus, Column::Second);
    case SeedForm::PhiPlusConjK1: return s.solve(kb, Side::Plus, Column::First);
    default: return s.solve(kb, Side::Minus, Column::Second);
    }
  }();
  // the exponential weight is a pointwise scalar and drops out
  return DarbouxSeed(j.k, j.psi1, j.psi2);
}

DarbouxSeed combined_seed(const JostSolver& s, const SpectralPoint& k1, cplx c) {
  auto m = s.solve(k1, Side::Minus, Column::First);
  auto p = s.solve(k1, Side::Plus, Column::Second);
  const Grid& g = s.u().grid;
  GridFunction e1(g), e2(g);
  for (int i = 0; i < g.N; ++i) {
    cplx w = c * std::exp(2.0 * I * k1.k2() * g.x(i));
    if (std::abs(w) <= 1.0) {
      e1[i] = m.psi1[i] + w * p.psi1[i];
      e2[i] = m.psi2[i] + w * p.psi2[i];
    } else {
      e1[i] = m.psi1[i] / w + p.psi1[i];
      e2[i] = m.psi2[i] / w + p.psi2[i];
    }
  }
  return DarbouxSeed(k1, e1, e2);
}

void check_anchor(const SpectralPoint& k1, const Tolerances& tol) {
  if (k1.domain != Domain::QuadrantI) throw Error("k1 must lie in quadrant I");
  if (std::abs(std::arg(k1.k) - std::numbers::pi / 4) < tol.pi4_margin) throw Error("k1 too close to arg k = pi/4");
}

DarbouxResult remove_soliton(const JostSolver& s, const SpectralPoint& k1, const Tolerances& tol) {
  if (k1.on_continuous_spectrum())
    return {-1.0 * s.u(), {"transformation trivializes: k1 on the continuous spectrum, returning -u"}};
  check_anchor(k1, tol);
  DarbouxResult r;
  const cplx a = a_sweep(s, k1.k);
  if (std::abs(a) < tol.zero) {
    // phi_- and phi_+ are proportional; take each where it is well resolved
    auto m = s.solve(k1, Side::Minus, Column::First);
    auto p = s.solve(k1, Side::Plus, Column::Second);
    GridFunction e1(m.psi1.grid), e2(m.psi1.grid);
    for (int i = 0; i < e1.size(); ++i) {
      bool left = std::norm(m.psi1[i]) + std::norm(m.psi2[i]) >= std::norm(p.psi1[i]) + std::norm(p.psi2[i]);
      e1[i] = left ? m.psi1[i] : p.psi1[i];
      e2[i] = left ? m.psi2[i] : p.psi2[i];
    }
    r.u = apply_darboux(s.u(), DarbouxSeed(k1, e1, e2), tol);
  } else {
    r.warnings.push_back("k1 is not an eigenvalue of u (|a(k1)| = " + std::to_string(std::abs(a)) +
                         "); the map does not remove a zero");
    r.u = apply_darboux(s.u(), eigen_seed(s, k1, SeedForm::PhiMinusK1), tol);
  }
  return r;
}

DarbouxResult remove_soliton(const GridFunction& u, const SpectralPoint& k1, const Tolerances& tol) {
  return remove_soliton(JostSolver(u), k1, tol);
}

GridFunction add_soliton(const JostSolver& s, const SpectralPoint& k1, cplx gamma, const Tolerances& tol) {
  check_anchor(k1, tol);
  if (gamma == 0.0 || !std::isfinite(std::abs(gamma))) throw Error("norming constant must be nonzero");
  if (std::abs(a_sweep(s, k1.k)) < tol.zero) throw Error("k1 is already an eigenvalue of u");
  return apply_darboux(s.u(), combined_seed(s, k1, gamma), tol);
}

GridFunction add_soliton(const GridFunction& u, const SpectralPoint& k1, cplx gamma, const Tolerances& tol) {
  return add_soliton(JostSolver(u), k1, gamma, tol);
}

JostVector transformed_jost(const DarbouxSeed& seed, const JostVector& jost, const Tolerances& tol) {
  const cplx k = jost.k.k, k1 = seed.k1.k;
  for (cplx s : {k1, -k1, std::conj(k1), -std::conj(k1)})
    if (std::abs(k - s) < 0.5 * tol.offset) throw Error("evaluate at offset");
  auto T = darboux_matrix(seed, k, tol);
  const int N = seed.grid().N;
  const int end = jost.side == Side::Minus ? 0 : N - 1;
  const int c = jost.column == Column::First ? 0 : 1;
  // sigma3 T psi, scaled to the unit column at the side's endpoint
  auto apply = [&](int i) {
    Vec2 v = T[i] * Vec2{jost.psi1[i], jost.psi2[i]};
    return Vec2{v[0], -v[1]};
  };
  cplx lambda = apply(end)[c];
  JostVector out = jost;
  for (int i = 0; i < N; ++i) {
    Vec2 v = apply(i);
    out.psi1[i] = v[0] / lambda;
    out.psi2[i] = v[1] / lambda;
  }
  return out;
}

} // namespace fl
