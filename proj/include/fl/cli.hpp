#pragma once
#include "fl/verify.hpp"

#include <iosfwd>
#include <optional>

namespace fl {

struct SolitonSpec {
  cplx k1;
  cplx gamma;
};

struct RunConfig {
  Grid grid{30.0, 4001};
  Rect region;
  Tolerances tol;
  std::map<std::string, double> thresholds;
  std::string input, output;
  std::optional<cplx> k1, gamma;
  double time = 0.0;
  std::vector<SolitonSpec> solitons;
  int sample_count = 64; // real-axis samples for scatter, split +-k
  double sample_kmax = 4.0;
  double asymptote_k = 40.0;
  int patch_steps = 11;
  std::optional<std::vector<std::string>> select;
};

// Sections: grid {L, N}, region {re0, re1, im0, im1}, tolerances {name:
// value}, samples {count, kmax, asymptote_k}, patch {steps}, verify {select},
// solitons [{k1, gamma}], and scalars input, output, k1, gamma, time.
void apply_config(RunConfig& c, const json& j);

// NAME=VALUE for a solver tolerance or a verify check threshold.
void apply_tolerance(RunConfig& c, const std::string& assignment);

// Exit codes: 0 ok, 1 check failure, 2 input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace fl
