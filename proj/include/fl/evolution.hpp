#pragma once
#include "fl/darboux.hpp"

namespace fl {

// gamma0 is the norming constant of the one-soliton at t = 0. For N >= 2 it
// is the coefficient of the vacuum seed, dressed by the earlier stages.
struct SolitonParameters {
  SpectralPoint k1;
  cplx gamma0;
  double t = 0.0;

  SolitonParameters(cplx k1, cplx gamma0, double t = 0.0, const Tolerances& tol = {});
};

cplx evolve_reflection(cplx r0, const SpectralPoint& k, double t);
cplx evolve_norming(cplx gamma0, const SpectralPoint& k1, double t);

// e^{-i theta} e1 + gamma0 e^{i theta} e2, theta = k1^2 x + eta(k1)^2 t.
std::pair<GridFunction, GridFunction> vacuum_seed(const SolitonParameters& p, const Grid& g);

GridFunction n_soliton(std::vector<SolitonParameters> ps, const Grid& g, const Tolerances& tol = {});

struct SpaceTimePatch {
  Grid grid;
  std::vector<double> t;
  std::vector<std::vector<cplx>> u; // u[n][i] = u(x_i, t_n)
};

// Slices of n_soliton at the given times (the t field of ps is ignored).
SpaceTimePatch soliton_patch(const std::vector<SolitonParameters>& ps, const Grid& g, const std::vector<double>& times,
                             const Tolerances& tol = {});

// sup over interior nodes of |u_tx + u - 2i u_x - u_xx - i|u|^2 u_x|.
double pde_residual(const SpaceTimePatch& p);

} // namespace fl
