#pragma once
#include "fl/jost.hpp"

#include <optional>

namespace fl {

struct ScatteringSample {
  SpectralPoint k;
  cplx a;
  std::optional<cplx> b; // only on the continuous spectrum
  std::optional<cplx> r;
  double spread = 0.0;   // max deviation across the reference window
  std::vector<std::string> warnings;
};

struct Eigenvalue {
  SpectralPoint k;
  cplx gamma;
};

struct DiscreteSpectrum {
  std::vector<Eigenvalue> eigenvalues;
};

struct ScatteringData {
  std::vector<ScatteringSample> samples;
  DiscreteSpectrum spectrum;
};

struct Rect {
  double re0 = 0.05, re1 = 3.0, im0 = 0.05, im1 = 3.0;
};

// Central 20% of the nodes.
std::pair<int, int> reference_window(const Grid& g);

ScatteringSample coefficients(const JostSolver& s, const SpectralPoint& k, const Tolerances& tol = {});
ScatteringSample coefficients(const GridFunction& u, const SpectralPoint& k, const Tolerances& tol = {});

// a(k) from a single sweep: the Wronskian evaluated at +L where the second
// column from +infinity is exactly e2.
cplx a_sweep(const JostSolver& s, cplx k);

cplx reflection(const JostSolver& s, const SpectralPoint& k, const Tolerances& tol = {});
cplx reflection(const GridFunction& u, const SpectralPoint& k, const Tolerances& tol = {});

int winding(const JostSolver& s, const Rect& rect, const Tolerances& tol = {});

std::vector<SpectralPoint> locate_zeros(const JostSolver& s, const Rect& rect, const Tolerances& tol = {});

struct Norming {
  cplx gamma;
  double residual;
};
Norming norming_constant(const JostSolver& s, const SpectralPoint& k1, const Tolerances& tol = {});

DiscreteSpectrum discrete_spectrum(const JostSolver& s, const Rect& rect, const Tolerances& tol = {});

} // namespace fl
