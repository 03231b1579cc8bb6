#pragma once
#include "fl/io.hpp"

#include <map>

namespace fl {

struct Check {
  std::string id;
  std::string title;
  double measured = 0.0;
  double threshold = 0.0;
  bool at_least = false; // pass when measured >= threshold instead of <
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<Check> checks;
  bool pass() const;
  json to_json() const;
  std::string table() const;
};

struct SuiteOptions {
  Grid grid{30.0, 4001};
  Tolerances tol;
  std::map<std::string, double> thresholds; // overrides by check id
};

// Check ids in suite order.
const std::vector<std::string>& check_ids();
double default_threshold(const std::string& id);

Check run_check(const std::string& id, const SuiteOptions& opt);
VerifyReport run_suite(const std::vector<std::string>& ids, const SuiteOptions& opt);

} // namespace fl
