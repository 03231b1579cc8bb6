#pragma once
#include "fl/scattering.hpp"

#include <array>

namespace fl {

using Vec2 = std::array<cplx, 2>;

struct Mat2 {
  cplx a, b, c, d; // [[a, b], [c, d]]
  Vec2 operator*(const Vec2& v) const { return {a * v[0] + b * v[1], c * v[0] + d * v[1]}; }
  cplx det() const { return a * d - b * c; }
};

// Seed direction eta(x) anchored at k1. Only the direction of eta at each x
// enters the transformation, so seeds may be rescaled pointwise.
struct DarbouxSeed {
  SpectralPoint k1;
  GridFunction eta1, eta2;

  DarbouxSeed(const SpectralPoint& k1, GridFunction eta1, GridFunction eta2);
  const Grid& grid() const { return eta1.grid; }
  Vec2 at(int i) const { return {eta1[i], eta2[i]}; }
};

struct DarbouxCoefficients {
  GridFunction A, C, m;
};

cplx bilinear_m(cplx k, const Vec2& eta, const Vec2& xi);

DarbouxCoefficients coefficients_AC(const DarbouxSeed& seed, const Tolerances& tol = {});

// T(eta, k, k1) normalized so that T(e1)e1 = e1 and T(e2)e2 = e2; its kernel
// at k = k1 is spanned by eta.
std::vector<Mat2> darboux_matrix(const DarbouxSeed& seed, cplx k, const Tolerances& tol = {});
Mat2 darboux_matrix(cplx k1, const Vec2& eta, cplx k);

// a1(k)/a(k) when the zero at k1 is removed:
// (k1/conj k1)^2 (k^2 - conj k1^2) / (k^2 - k1^2).
cplx removal_factor(cplx k, cplx k1);

// u1 = -u - C(eta)/|k1|^2.
GridFunction apply_darboux(const GridFunction& u, const DarbouxSeed& seed, const Tolerances& tol = {});

// eta~ = (conj eta2 / m_k1(eta,eta), conj eta1 / m_conj(k1)(eta,eta)); the map
// with this seed undoes the map with eta.
DarbouxSeed inverse_seed(const DarbouxSeed& seed);

struct DarbouxResult {
  GridFunction u;
  std::vector<std::string> warnings;
};

// The four equivalent eigenfunction seeds at an eigenvalue.
enum class SeedForm { PhiMinusK1, PhiPlusK1, PhiPlusConjK1, PhiMinusConjK1 };
DarbouxSeed eigen_seed(const JostSolver& s, const SpectralPoint& k1, SeedForm form);

// phi_-(k1) e^{-ik1^2x} + c phi_+(k1) e^{ik1^2x}, rescaled pointwise to stay
// finite on long grids.
DarbouxSeed combined_seed(const JostSolver& s, const SpectralPoint& k1, cplx c);

DarbouxResult remove_soliton(const JostSolver& s, const SpectralPoint& k1, const Tolerances& tol = {});
DarbouxResult remove_soliton(const GridFunction& u, const SpectralPoint& k1, const Tolerances& tol = {});

// Output has a simple zero of a at k1 with norming constant gamma.
GridFunction add_soliton(const JostSolver& s, const SpectralPoint& k1, cplx gamma, const Tolerances& tol = {});
GridFunction add_soliton(const GridFunction& u, const SpectralPoint& k1, cplx gamma, const Tolerances& tol = {});

// Jost column of the transformed potential apply_darboux(u, seed), built
// from the matching column of u.
JostVector transformed_jost(const DarbouxSeed& seed, const JostVector& jost, const Tolerances& tol = {});

void check_anchor(const SpectralPoint& k1, const Tolerances& tol);

} // namespace fl
