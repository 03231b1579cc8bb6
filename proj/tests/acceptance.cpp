// One line per check. With arguments, runs only those checks.
#include "fl/verify.hpp"

#include <cstdio>

int main(int argc, char** argv) {
  std::vector<std::string> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(argv[i]);
  if (ids.empty()) ids = fl::check_ids();
  fl::SuiteOptions opt;
  bool ok = true;
  for (auto& id : ids) {
    fl::Check c;
    try {
      c = fl::run_check(id, opt);
    } catch (const std::exception& e) {
      std::printf("FAIL %-20s error: %s\n", id.c_str(), e.what());
      ok = false;
      continue;
    }
    std::printf("%s %-20s measured %.4e %s %.4g | %s\n", c.pass ? "PASS" : "FAIL", c.id.c_str(), c.measured,
                c.at_least ? ">=" : "<", c.threshold, c.detail.c_str());
    ok = ok && c.pass;
  }
  return ok ? 0 : 1;
}
