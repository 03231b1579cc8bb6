#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fl/evolution.hpp"
#include "fl/scattering.hpp"

#include <cmath>

using namespace fl;

namespace {

const Grid G(30.0, 4001);
const cplx K1(0.8, 0.6), K2(1.2, 0.4);

GridFunction gaussian(double amp) {
  return GridFunction::sample(G, [&](double x) { return cplx(amp * std::exp(-x * x)); });
}

GridFunction one_soliton(cplx gamma) { return n_soliton({SolitonParameters(K1, gamma)}, G); }

} // namespace

TEST_CASE("reference window is the central fifth") {
  auto [lo, hi] = reference_window(Grid(10.0, 101));
  CHECK(lo == 40);
  CHECK(hi == 60);
}

TEST_CASE("vacuum coefficients") {
  GridFunction u(G);
  for (double k : {0.1, 1.0, -2.5, 4.0}) {
    auto s = coefficients(u, SpectralPoint(k));
    CHECK(std::abs(s.a - 1.0) < 1e-14);
    CHECK(std::abs(*s.b) < 1e-14);
    CHECK(std::abs(*s.r) < 1e-14);
    CHECK(s.warnings.empty());
  }
  CHECK(std::abs(reflection(u, SpectralPoint(cplx(0, 1.5)))) < 1e-14);
  auto off = coefficients(u, SpectralPoint(cplx(0.5, 0.5)));
  CHECK_FALSE(off.b.has_value());
}

TEST_CASE("small data has |r| < 1 and det S = 1") {
  auto u = gaussian(0.3);
  JostSolver s(u);
  for (int j = 0; j < 16; ++j) {
    double k = 0.1 + 0.25 * j;
    auto c = coefficients(s, SpectralPoint(k));
    CHECK(std::abs(*c.r) < 1.0);
    CHECK(std::abs(std::norm(c.a) + std::norm(*c.b) - 1.0) < 1e-8);
    CHECK(c.spread < 1e-6);
    CHECK(std::abs(a_sweep(s, k) - c.a) < 1e-8);
  }
}

TEST_CASE("winding") {
  CHECK(winding(JostSolver(GridFunction(G)), Rect{}) == 0);
  CHECK(winding(JostSolver(gaussian(0.1)), Rect{}) == 0);
  JostSolver s(one_soliton(1.0));
  CHECK(winding(s, Rect{}) == 1);
  CHECK(winding(s, Rect{0.05, 0.5, 0.05, 3.0}) == 0);
  CHECK_THROWS_WITH(winding(s, Rect{0.05, 0.8, 0.05, 3.0}), "zero on contour");
  CHECK_THROWS_WITH(winding(s, Rect{0.0, 1.0, 0.05, 3.0}), "contour too close to the axes");
}

TEST_CASE("locate zeros") {
  CHECK(locate_zeros(JostSolver(GridFunction(G)), Rect{}).empty());
  auto z1 = locate_zeros(JostSolver(one_soliton(1.0)), Rect{});
  REQUIRE(z1.size() == 1);
  CHECK(std::abs(z1[0].k - K1) < 1e-6);

  auto u2 = n_soliton({SolitonParameters(K1, 1.0), SolitonParameters(K2, 1.0)}, G);
  auto z2 = locate_zeros(JostSolver(u2), Rect{});
  REQUIRE(z2.size() == 2);
  double e1 = std::min(std::abs(z2[0].k - K1), std::abs(z2[1].k - K1));
  double e2 = std::min(std::abs(z2[0].k - K2), std::abs(z2[1].k - K2));
  CHECK(e1 < 1e-6);
  CHECK(e2 < 1e-6);
  CHECK(std::abs(z2[0].k - z2[1].k) > 0.1);
}

TEST_CASE("norming constant round trip") {
  for (cplx g : {cplx(1.0), 2.0 * std::exp(I * M_PI / 3.0)}) {
    JostSolver s(one_soliton(g));
    auto n = norming_constant(s, SpectralPoint(K1));
    CHECK(std::abs(n.gamma - g) < 1e-6);
  }
  JostSolver s(gaussian(0.5));
  CHECK_THROWS_WITH(norming_constant(s, SpectralPoint(K1)), "not an eigenvalue");
}

TEST_CASE("discrete spectrum pairs eigenvalues with norming constants") {
  cplx g = 2.0 * std::exp(I * M_PI / 3.0);
  auto d = discrete_spectrum(JostSolver(one_soliton(g)), Rect{});
  REQUIRE(d.eigenvalues.size() == 1);
  CHECK(std::abs(d.eigenvalues[0].gamma - g) < 1e-6);
}

TEST_CASE("large-k asymptote of a") {
  auto u = gaussian(0.5);
  JostSolver s(u);
  double c = c_constant(u).value;
  double e10 = std::abs(a_sweep(s, 10.0) - std::exp(-I * c));
  double e40 = std::abs(a_sweep(s, 40.0) - std::exp(-I * c));
  CHECK(e40 < e10 / 3.0);
}
