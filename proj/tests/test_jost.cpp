#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fl/jost.hpp"

#include <cmath>

using namespace fl;

namespace {

GridFunction gaussian(const Grid& g, cplx amp = 0.5) {
  return GridFunction::sample(g, [&](double x) { return amp * std::exp(-x * x) * std::exp(I * 0.3 * x); });
}

double max_diff(const GridFunction& a, const GridFunction& b, cplx s = 1.0) {
  double e = 0;
  for (int i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - s * b[i]));
  return e;
}

} // namespace

TEST_CASE("spectral point classification") {
  CHECK(SpectralPoint(1.0).domain == Domain::RealAxis);
  CHECK(SpectralPoint(cplx(0, 2)).domain == Domain::ImagAxis);
  CHECK(SpectralPoint(cplx(0.8, 0.6)).domain == Domain::QuadrantI);
  CHECK(SpectralPoint(cplx(-0.8, 0.6)).domain == Domain::QuadrantII);
  CHECK(SpectralPoint(cplx(-0.8, -0.6)).domain == Domain::QuadrantIII);
  CHECK(SpectralPoint(cplx(0.8, -0.6)).domain == Domain::QuadrantIV);
  CHECK(SpectralPoint(cplx(1.0, 1e-9), 1e-6).domain == Domain::RealAxis);
  CHECK(std::abs(SpectralPoint(1.0).eta - 0.5) < 1e-15);
  CHECK_THROWS_WITH(SpectralPoint(0.0), "spectral parameter at origin");
}

TEST_CASE("vacuum columns are unit vectors") {
  Grid g(10.0, 501);
  GridFunction u(g);
  for (cplx k : {cplx(1.0), cplx(0.8, 0.6), cplx(0, 3)}) {
    auto j = solve_jost(u, SpectralPoint(k), Side::Minus, Column::First);
    CHECK(max_diff(j.psi1, GridFunction::sample(g, [](double) { return cplx(1.0); })) < 1e-14);
    CHECK(j.psi2.sup() < 1e-14);
  }
  auto [c1, c2] = jost_matrix(u, SpectralPoint(2.0), Side::Plus);
  CHECK(c1.psi2.sup() < 1e-14);
  CHECK(c2.psi1.sup() < 1e-14);
  CHECK(std::abs(c2.psi2[100] - 1.0) < 1e-14);
}

TEST_CASE("unstable direction is rejected") {
  Grid g(10.0, 501);
  auto u = gaussian(g);
  SpectralPoint k(cplx(0.8, 0.6)); // Im k^2 > 0
  CHECK_NOTHROW(solve_jost(u, k, Side::Minus, Column::First));
  CHECK_THROWS_WITH(solve_jost(u, k, Side::Minus, Column::Second), "unstable direction");
  CHECK_THROWS_WITH(solve_jost(u, k, Side::Plus, Column::First), "unstable direction");
  CHECK_NOTHROW(solve_jost(u, k, Side::Plus, Column::Second));
}

TEST_CASE("boundary fidelity") {
  Grid g(15.0, 1501);
  auto u = gaussian(g);
  SpectralPoint k(1.3);
  auto m = solve_jost(u, k, Side::Minus, Column::First);
  auto p = solve_jost(u, k, Side::Plus, Column::Second);
  CHECK(std::abs(m.psi1[0] - 1.0) + std::abs(m.psi2[0]) < 1e-8);
  CHECK(std::abs(p.psi1[g.N - 1]) + std::abs(p.psi2[g.N - 1] - 1.0) < 1e-8);
}

TEST_CASE("parity in k") {
  Grid g(15.0, 1501);
  auto u = gaussian(g);
  for (double kr : {0.4, 1.7}) {
    auto a = solve_jost(u, SpectralPoint(kr), Side::Minus, Column::First);
    auto b = solve_jost(u, SpectralPoint(-kr), Side::Minus, Column::First);
    CHECK(max_diff(a.psi1, b.psi1) < 1e-10);
    CHECK(max_diff(a.psi2, b.psi2, -1.0) < 1e-10);
    auto c = solve_jost(u, SpectralPoint(kr), Side::Plus, Column::Second);
    auto d = solve_jost(u, SpectralPoint(-kr), Side::Plus, Column::Second);
    CHECK(max_diff(c.psi1, d.psi1, -1.0) < 1e-10);
    CHECK(max_diff(c.psi2, d.psi2) < 1e-10);
  }
}

TEST_CASE("conjugation symmetry") {
  // Psi(conj k) = sigma2 conj(Psi(k)) sigma2: the first column at conj k is
  // (conj d, -conj b) where (b, d) is the second column at k.
  Grid g(15.0, 1501);
  auto u = gaussian(g);
  for (cplx k : {cplx(1.1), cplx(0.7, 0.5)}) {
    auto s = solve_jost(u, SpectralPoint(k), Side::Plus, Column::Second);
    auto f = solve_jost(u, SpectralPoint(std::conj(k)), Side::Plus, Column::First);
    CHECK(max_diff(f.psi1, conj(s.psi2)) < 1e-8);
    CHECK(max_diff(f.psi2, conj(s.psi1), -1.0) < 1e-8);
  }
}

TEST_CASE("Wronskian is constant on the real axis") {
  Grid g(15.0, 1501);
  auto u = gaussian(g, 0.8);
  for (double k : {0.5, 2.0, -3.0}) {
    auto [c1, c2] = jost_matrix(u, SpectralPoint(k), Side::Minus);
    double e = 0;
    for (int i = 0; i < g.N; ++i) e = std::max(e, std::abs(c1.psi1[i] * c2.psi2[i] - c1.psi2[i] * c2.psi1[i] - 1.0));
    CHECK(e < 1e-8);
  }
}

TEST_CASE("columns stay bounded for a bounded family") {
  Grid g(15.0, 1501);
  double worst = 0;
  for (double amp : {0.2, 0.5, 1.0})
    for (double k : {0.3, 1.0, 3.0, 10.0}) {
      auto j = solve_jost(gaussian(g, amp), SpectralPoint(k), Side::Minus, Column::First);
      worst = std::max({worst, j.psi1.sup(), j.psi2.sup()});
    }
  CHECK(worst < 10.0);
}

TEST_CASE("phi form restores the oscillation") {
  Grid g(5.0, 101);
  auto j = solve_jost(GridFunction(g), SpectralPoint(1.5), Side::Minus, Column::First);
  auto [p1, p2] = phi_form(j);
  CHECK(std::abs(p1[0] - std::exp(-I * 2.25 * g.x(0))) < 1e-14);
  CHECK(p2.sup() == 0.0);
}

TEST_CASE("refinement changes the solution little") {
  auto run = [](int N) {
    Grid g(10.0, N);
    return solve_jost(gaussian(g), SpectralPoint(cplx(0.9, 0.3)), Side::Minus, Column::First);
  };
  auto a = run(1001), b = run(2001);
  double e = 0;
  for (int i = 0; i < 1001; ++i) e = std::max(e, std::abs(a.psi1[i] - b.psi1[2 * i]) + std::abs(a.psi2[i] - b.psi2[2 * i]));
  CHECK(e < 1e-7);
}
