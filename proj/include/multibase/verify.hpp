#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace multibase {

struct SuiteCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  bool passed = true;
  double seconds = 0;
  std::vector<SuiteCheck> checks;
};

/// table1, thm13, monotonicity, catalogs, b2-sweep, known-m1.
const std::vector<std::string>& suite_names();

/// Deterministic (fixed seeds). Throws ParseError for an unknown suite.
SuiteReport run_suite(std::string_view name);

}  // namespace multibase
