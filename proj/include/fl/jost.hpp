#pragma once
#include "fl/grid.hpp"

#include <utility>

namespace fl {

enum class Domain { RealAxis, ImagAxis, QuadrantI, QuadrantII, QuadrantIII, QuadrantIV };

struct SpectralPoint {
  cplx k;
  Domain domain;
  cplx eta;

  explicit SpectralPoint(cplx k, double axis_tol = 0.0);
  cplx k2() const { return k * k; }
  bool on_continuous_spectrum() const { return domain == Domain::RealAxis || domain == Domain::ImagAxis; }
};

const char* domain_name(Domain d);

enum class Side { Minus, Plus };
enum class Column { First, Second };

// psi-form column: the Jost column with the e^{-+ik^2x} factor stripped, so
// it tends to a unit vector at its side.
struct JostVector {
  SpectralPoint k;
  Side side;
  Column column;
  GridFunction psi1, psi2;
};

struct SolverOptions {
  int accuracy = 8;      // finite-difference order used for u_x
  double theta = 0.05;   // max |2k^2|*substep and |k q|*substep
  int min_substeps = 4;
  double decay_tol = 1e-8;
  double direction_tol = 1e-12; // slack on the sign of Im k^2
};

// Integrates dpsi/dx = -ik^2[sigma3, psi] + k P_x psi, one column at a time,
// with an exact integrating factor for the k^2 part.
class JostSolver {
public:
  explicit JostSolver(const GridFunction& u, SolverOptions opt = {});

  JostVector solve(const SpectralPoint& k, Side side, Column col) const;
  // First column from -L run to +L, returning its endpoint value. Cheap
  // path for a(k) = psi1(+L) and b(k) = e^{-2ik^2L} psi2(+L).
  std::pair<cplx, cplx> sweep_minus_first(const SpectralPoint& k) const;

  const GridFunction& u() const { return u_; }
  const GridFunction& q() const { return q_; }
  const SolverOptions& options() const { return opt_; }
  bool decay_warning() const { return decay_warning_; }

private:
  GridFunction u_, q_;
  SolverOptions opt_;
  bool decay_warning_ = false;
  double qmax_ = 0.0;

  template <class Sink>
  void integrate(const SpectralPoint& k, Side side, Column col, Sink&& sink) const;
};

JostVector solve_jost(const GridFunction& u, const SpectralPoint& k, Side side, Column col,
                      const SolverOptions& opt = {});
std::pair<JostVector, JostVector> jost_matrix(const GridFunction& u, const SpectralPoint& k, Side side,
                                              const SolverOptions& opt = {});

// phi-form: psi * e^{-ik^2x} (first column) or psi * e^{+ik^2x} (second).
std::pair<GridFunction, GridFunction> phi_form(const JostVector& j);

} // namespace fl
