#pragma once
#include "fl/common.hpp"

namespace fl {

struct Grid {
  double L = 30.0;
  int N = 4001;
  double h = 0.015;

  Grid() = default;
  Grid(double L, int N);
  double x(int i) const { return -L + i * h; }
  bool operator==(const Grid& o) const { return L == o.L && N == o.N; }
};

struct GridFunction {
  Grid grid;
  std::vector<cplx> v;

  GridFunction() = default;
  explicit GridFunction(const Grid& g) : grid(g), v(g.N, 0.0) {}
  GridFunction(const Grid& g, std::vector<cplx> values);

  template <class F> static GridFunction sample(const Grid& g, F f) {
    GridFunction r(g);
    for (int i = 0; i < g.N; ++i) r.v[i] = f(g.x(i));
    return r;
  }

  int size() const { return grid.N; }
  cplx& operator[](int i) { return v[i]; }
  const cplx& operator[](int i) const { return v[i]; }
  double sup() const;
};

GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(cplx s, const GridFunction& a);
GridFunction conj(const GridFunction& a);
double sup_distance(const GridFunction& a, const GridFunction& b);

// Finite-difference weights for derivatives 0..m at z from arbitrary nodes.
// w[d][j] multiplies f(nodes[j]) in the d-th derivative.
std::vector<std::vector<double>> fd_weights(double z, const std::vector<double>& nodes, int m);

// order in {1,2,3}; accuracy is the even formal order (4 by default).
GridFunction derivative(const GridFunction& f, int order, int accuracy = 4);

cplx quadrature(const GridFunction& f);

bool decays(const GridFunction& u, double tol);

struct CConstant {
  double value = 0.0;
  bool decay_warning = false;
};
CConstant c_constant(const GridFunction& u, double decay_tol = 1e-8);

struct SobolevReport {
  double H3 = 0.0;
  double H21 = 0.0;
  double smallness = 0.0;
};
SobolevReport sobolev_report(const GridFunction& u);

double l2_norm(const GridFunction& f);

} // namespace fl
