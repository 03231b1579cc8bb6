#pragma once
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace fl {

using cplx = std::complex<double>;
inline constexpr cplx I{0.0, 1.0};

// Contract violations and numerical failures. The message is the stable
// part of the interface (tests and the CLI match on it).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Named tolerances, overridable from the command line.
struct Tolerances {
  double decay = 1e-8;           // |u(+-L)| above this -> warning
  double zero = 1e-8;            // |a(k)| below this declares an eigenvalue
  double spread = 1e-6;          // Wronskian x-spread warning
  double proportionality = 1e-6; // norming-constant residual
  double degenerate = 1e-12;     // min |m_k1(eta,eta)|
  double pi4_margin = 1e-3;      // exclusion around arg k1 = pi/4
  double contour_margin = 0.05;  // rectangle distance from the axes
  double contour_zero = 1e-8;    // |a| on a contour
  double newton = 1e-10;         // Newton target for |a|
  double simple_zero = 1e-6;     // min |a'(k_j)|
  double offset = 1e-4;          // removable-singularity offset

  // Returns false for an unknown name.
  bool set(const std::string& name, double value);
  std::vector<std::pair<std::string, double>> list() const;
};

} // namespace fl
