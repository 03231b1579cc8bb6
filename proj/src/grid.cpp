#include "fl/grid.hpp"

#include <algorithm>
#include <cmath>

namespace fl {

bool Tolerances::set(const std::string& name, double value) {
  for (auto& [n, p] : std::initializer_list<std::pair<const char*, double*>>{
           {"decay", &decay},
           {"zero", &zero},
           {"spread", &spread},
           {"proportionality", &proportionality},
           {"degenerate", &degenerate},
           {"pi4_margin", &pi4_margin},
           {"contour_margin", &contour_margin},
           {"contour_zero", &contour_zero},
           {"newton", &newton},
           {"simple_zero", &simple_zero},
           {"offset", &offset}}) {
    if (name == n) {
      *p = value;
      return true;
    }
  }
  return false;
}

std::vector<std::pair<std::string, double>> Tolerances::list() const {
  return {{"decay", decay},
          {"zero", zero},
          {"spread", spread},
          {"proportionality", proportionality},
          {"degenerate", degenerate},
          {"pi4_margin", pi4_margin},
          {"contour_margin", contour_margin},
          {"contour_zero", contour_zero},
          {"newton", newton},
          {"simple_zero", simple_zero},
          {"offset", offset}};
}

Grid::Grid(double L_, int N_) : L(L_), N(N_) {
  if (!(L > 0) || !std::isfinite(L)) throw Error("grid half-width must be positive");
  if (N < 9) throw Error("insufficient grid");
  h = 2.0 * L / (N - 1);
}

GridFunction::GridFunction(const Grid& g, std::vector<cplx> values) : grid(g), v(std::move(values)) {
  if ((int)v.size() != g.N) throw Error("grid function length does not match grid");
  for (auto z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw Error("non-finite grid function value");
}

double GridFunction::sup() const {
  double s = 0;
  for (auto z : v) s = std::max(s, std::abs(z));
  return s;
}

static void same_grid(const GridFunction& a, const GridFunction& b) {
  if (!(a.grid == b.grid)) throw Error("grid mismatch");
}

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
  same_grid(a, b);
  GridFunction r(a.grid);
  for (int i = 0; i < a.size(); ++i) r.v[i] = a.v[i] + b.v[i];
  return r;
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
  same_grid(a, b);
  GridFunction r(a.grid);
  for (int i = 0; i < a.size(); ++i) r.v[i] = a.v[i] - b.v[i];
  return r;
}

GridFunction operator*(cplx s, const GridFunction& a) {
  GridFunction r(a.grid);
  for (int i = 0; i < a.size(); ++i) r.v[i] = s * a.v[i];
  return r;
}

GridFunction conj(const GridFunction& a) {
  GridFunction r(a.grid);
  for (int i = 0; i < a.size(); ++i) r.v[i] = std::conj(a.v[i]);
  return r;
}

double sup_distance(const GridFunction& a, const GridFunction& b) { return (a - b).sup(); }

// Fornberg's recursion.
std::vector<std::vector<double>> fd_weights(double z, const std::vector<double>& x, int m) {
  const int n = (int)x.size();
  std::vector<std::vector<double>> c(m + 1, std::vector<double>(n, 0.0));
  double c1 = 1.0, c4 = x[0] - z;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    int mn = std::min(i, m);
    double c2 = 1.0, c5 = c4;
    c4 = x[i] - z;
    for (int j = 0; j < i; ++j) {
      double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
        c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
      }
      for (int k = mn; k >= 1; --k) c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
      c[0][j] = c4 * c[0][j] / c3;
    }
    c1 = c2;
  }
  return c;
}

GridFunction derivative(const GridFunction& f, int order, int accuracy) {
  if (order < 1 || order > 3) throw Error("derivative order must be 1, 2 or 3");
  if (accuracy < 2 || accuracy % 2) throw Error("derivative accuracy must be even");
  const int N = f.size();
  const int p = (order + accuracy - 1) / 2; // centered half-width
  const int ne = order + accuracy;          // one-sided stencil size
  if (N < std::max({2 * order + 5, ne, 2 * p + 1})) throw Error("insufficient grid");
  const double scale = std::pow(f.grid.h, -order);

  std::vector<double> cnodes;
  for (int j = -p; j <= p; ++j) cnodes.push_back(j);
  auto cw = fd_weights(0.0, cnodes, order)[order];
  std::vector<double> enodes;
  for (int j = 0; j < ne; ++j) enodes.push_back(j);

  GridFunction r(f.grid);
  for (int i = 0; i < N; ++i) {
    if (i >= p && i < N - p) {
      cplx s = 0;
      for (int j = -p; j <= p; ++j) s += cw[j + p] * f.v[i + j];
      r.v[i] = s * scale;
    } else {
      int start = i < p ? 0 : N - ne;
      auto w = fd_weights(double(i - start), enodes, order)[order];
      cplx s = 0;
      for (int j = 0; j < ne; ++j) s += w[j] * f.v[start + j];
      r.v[i] = s * scale;
    }
  }
  return r;
}

cplx quadrature(const GridFunction& f) {
  cplx s = 0.5 * (f.v.front() + f.v.back());
  for (int i = 1; i + 1 < f.size(); ++i) s += f.v[i];
  return s * f.grid.h;
}

bool decays(const GridFunction& u, double tol) {
  return std::abs(u.v.front()) < tol && std::abs(u.v.back()) < tol;
}

static GridFunction pointwise(const GridFunction& f, double (*op)(cplx)) {
  GridFunction r(f.grid);
  for (int i = 0; i < f.size(); ++i) r.v[i] = op(f.v[i]);
  return r;
}

CConstant c_constant(const GridFunction& u, double decay_tol) {
  auto ux = derivative(u, 1, 8); // same stencil the Jost solver uses for q
  auto d = pointwise(ux, [](cplx z) { return std::norm(z); });
  return {0.5 * quadrature(d).real(), !decays(u, decay_tol)};
}

double l2_norm(const GridFunction& f) {
  return std::sqrt(quadrature(pointwise(f, [](cplx z) { return std::norm(z); })).real());
}

SobolevReport sobolev_report(const GridFunction& u) {
  const GridFunction d[4] = {u, derivative(u, 1), derivative(u, 2), derivative(u, 3)};
  SobolevReport r;
  double h3 = 0, h21 = 0;
  for (int j = 0; j < 4; ++j) h3 += std::pow(l2_norm(d[j]), 2);
  for (int j = 0; j < 3; ++j) {
    GridFunction w(u.grid);
    for (int i = 0; i < u.size(); ++i) w.v[i] = std::sqrt(1.0 + std::pow(u.grid.x(i), 2)) * d[j].v[i];
    h21 += std::pow(l2_norm(w), 2);
  }
  r.H3 = std::sqrt(h3);
  r.H21 = std::sqrt(h21);
  auto integral = [&](const GridFunction& f, double (*op)(cplx)) { return quadrature(pointwise(f, op)).real(); };
  double ux2 = integral(d[1], [](cplx z) { return std::norm(z); });
  double ux3 = integral(d[1], [](cplx z) { return std::pow(std::abs(z), 3); });
  double uxx1 = integral(d[2], [](cplx z) { return std::abs(z); });
  double ux1 = integral(d[1], [](cplx z) { return std::abs(z); });
  r.smallness = 2 * ux2 + ux3 + 2 * uxx1 + ux1;
  return r;
}

} // namespace fl
