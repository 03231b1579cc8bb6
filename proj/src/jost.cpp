#include "fl/jost.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace fl {

SpectralPoint::SpectralPoint(cplx k_, double axis_tol) : k(k_) {
  if (k == 0.0) throw Error("spectral parameter at origin");
  if (!std::isfinite(k.real()) || !std::isfinite(k.imag())) throw Error("non-finite spectral parameter");
  const double tol = axis_tol * std::abs(k);
  const double re = k.real(), im = k.imag();
  if (std::abs(im) <= tol) domain = Domain::RealAxis;
  else if (std::abs(re) <= tol) domain = Domain::ImagAxis;
  else if (re > 0) domain = im > 0 ? Domain::QuadrantI : Domain::QuadrantIV;
  else domain = im > 0 ? Domain::QuadrantII : Domain::QuadrantIII;
  eta = k - 1.0 / (2.0 * k);
}

const char* domain_name(Domain d) {
  switch (d) {
  case Domain::RealAxis: return "real axis";
  case Domain::ImagAxis: return "imaginary axis";
  case Domain::QuadrantI: return "quadrant I";
  case Domain::QuadrantII: return "quadrant II";
  case Domain::QuadrantIII: return "quadrant III";
  case Domain::QuadrantIV: return "quadrant IV";
  }
  return "?";
}

JostSolver::JostSolver(const GridFunction& u, SolverOptions opt) : u_(u), q_(derivative(u, 1, opt.accuracy)), opt_(opt) {
  decay_warning_ = !decays(u, opt.decay_tol);
  qmax_ = q_.sup();
}

namespace {

constexpr int kStencil = 8;

// Lagrange weights of the 8-point stencil for positions pos + j/(2n),
// j = 0..2n, where pos is the interval's offset inside the stencil.
struct Interpolator {
  int n;
  std::array<std::vector<std::array<double, kStencil>>, kStencil> w;

  explicit Interpolator(int nsub) : n(nsub) {
    std::vector<double> nodes(kStencil);
    for (int j = 0; j < kStencil; ++j) nodes[j] = j;
    for (int pos = 0; pos < kStencil - 1; ++pos) {
      w[pos].resize(2 * n + 1);
      for (int j = 0; j <= 2 * n; ++j) {
        auto c = fd_weights(pos + double(j) / (2 * n), nodes, 0)[0];
        std::copy(c.begin(), c.end(), w[pos][j].begin());
      }
    }
  }

  // q at the 2n+1 fine points of interval [m, m+1].
  void fill(const std::vector<cplx>& q, int m, std::vector<cplx>& out) const {
    const int N = (int)q.size();
    int start = std::clamp(m - kStencil / 2 + 1, 0, N - kStencil);
    const auto& ww = w[m - start];
    out[0] = q[m];
    out[2 * n] = q[m + 1];
    for (int j = 1; j < 2 * n; ++j) {
      cplx s = 0;
      for (int t = 0; t < kStencil; ++t) s += ww[j][t] * q[start + t];
      out[j] = s;
    }
  }
};

} // namespace

template <class Sink>
void JostSolver::integrate(const SpectralPoint& sp, Side side, Column col, Sink&& sink) const {
  const cplx k = sp.k, k2 = sp.k2();
  const Grid& g = u_.grid;
  const int N = g.N;

  // psi' = diag(l1,l2) psi + k [[0,q],[-conj q,0]] psi
  cplx l1 = 0, l2 = 0;
  if (col == Column::First) l2 = 2.0 * I * k2;
  else l1 = -2.0 * I * k2;
  const double dir = side == Side::Minus ? 1.0 : -1.0;
  const double growth = dir * (l1 + l2).real();
  if (growth > opt_.direction_tol * std::norm(k) * 2.0) throw Error("unstable direction");

  int nsub = opt_.min_substeps;
  nsub = std::max(nsub, (int)std::ceil(2.0 * std::norm(k) * g.h / opt_.theta));
  nsub = std::max(nsub, (int)std::ceil(std::abs(k) * qmax_ * g.h / opt_.theta));
  const double H = dir * g.h / nsub;
  const cplx e1 = std::exp(l1 * H * 0.5), e2 = std::exp(l2 * H * 0.5);
  const cplx e1s = e1 * e1, e2s = e2 * e2;

  Interpolator interp(nsub);
  std::vector<cplx> qf(2 * nsub + 1);

  cplx p1 = col == Column::First ? 1.0 : 0.0;
  cplx p2 = col == Column::First ? 0.0 : 1.0;
  int i = side == Side::Minus ? 0 : N - 1;
  sink(i, p1, p2);
  for (int step = 0; step < N - 1; ++step) {
    const int m = side == Side::Minus ? i : i - 1;
    interp.fill(q_.v, m, qf);
    for (int s = 0; s < nsub; ++s) {
      int j0 = 2 * s, jh = 2 * s + 1, j1 = 2 * s + 2;
      if (side == Side::Plus) {
        j0 = 2 * nsub - j0;
        jh = 2 * nsub - jh;
        j1 = 2 * nsub - j1;
      }
      const cplx kq0 = k * qf[j0], kqh = k * qf[jh], kq1 = k * qf[j1];
      const cplx kc0 = k * std::conj(qf[j0]), kch = k * std::conj(qf[jh]), kc1 = k * std::conj(qf[j1]);

      cplx a1 = kq0 * p2, a2 = -kc0 * p1;
      cplx y1 = e1 * (p1 + 0.5 * H * a1), y2 = e2 * (p2 + 0.5 * H * a2);
      cplx b1 = kqh * y2, b2 = -kch * y1;
      y1 = e1 * p1 + 0.5 * H * b1;
      y2 = e2 * p2 + 0.5 * H * b2;
      cplx c1 = kqh * y2, c2 = -kch * y1;
      y1 = e1s * p1 + H * e1 * c1;
      y2 = e2s * p2 + H * e2 * c2;
      cplx d1 = kq1 * y2, d2 = -kc1 * y1;
      p1 = e1s * p1 + H / 6.0 * (e1s * a1 + 2.0 * e1 * (b1 + c1) + d1);
      p2 = e2s * p2 + H / 6.0 * (e2s * a2 + 2.0 * e2 * (b2 + c2) + d2);
    }
    i += side == Side::Minus ? 1 : -1;
    sink(i, p1, p2);
  }
}

JostVector JostSolver::solve(const SpectralPoint& k, Side side, Column col) const {
  JostVector r{k, side, col, GridFunction(u_.grid), GridFunction(u_.grid)};
  integrate(k, side, col, [&](int i, cplx a, cplx b) {
    r.psi1.v[i] = a;
    r.psi2.v[i] = b;
  });
  return r;
}

std::pair<cplx, cplx> JostSolver::sweep_minus_first(const SpectralPoint& k) const {
  cplx a = 0, b = 0;
  integrate(k, Side::Minus, Column::First, [&](int, cplx p1, cplx p2) {
    a = p1;
    b = p2;
  });
  return {a, b * std::exp(-2.0 * I * k.k2() * u_.grid.L)};
}

JostVector solve_jost(const GridFunction& u, const SpectralPoint& k, Side side, Column col, const SolverOptions& opt) {
  return JostSolver(u, opt).solve(k, side, col);
}

std::pair<JostVector, JostVector> jost_matrix(const GridFunction& u, const SpectralPoint& k, Side side,
                                              const SolverOptions& opt) {
  JostSolver s(u, opt);
  return {s.solve(k, side, Column::First), s.solve(k, side, Column::Second)};
}

std::pair<GridFunction, GridFunction> phi_form(const JostVector& j) {
  const double sgn = j.column == Column::First ? -1.0 : 1.0;
  const cplx k2 = j.k.k2();
  GridFunction a(j.psi1.grid), b(j.psi1.grid);
  for (int i = 0; i < a.size(); ++i) {
    cplx e = std::exp(sgn * I * k2 * a.grid.x(i));
    a.v[i] = j.psi1.v[i] * e;
    b.v[i] = j.psi2.v[i] * e;
  }
  return {a, b};
}

} // namespace fl
