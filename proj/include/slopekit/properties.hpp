#pragma once

#include <string>
#include <vector>

namespace slopekit {

// One verified inequality, equality, or structural fact. `group` names the
// family (filterable from the command line), `name` the instance.
struct PropertyCheck {
  std::string group;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PropertySuiteResult {
  unsigned seed = 0;
  std::string filter;
  std::vector<std::string> groups_run;
  std::vector<PropertyCheck> checks;
  int passed = 0;
  int failed = 0;
  bool ok() const { return failed == 0; }
};

// Group names in execution order.
std::vector<std::string> property_group_names();

// Runs every group whose name contains `filter` (empty runs everything).
// All randomness is derived from `seed`; two calls with the same arguments
// produce identical results, including the detail strings.
PropertySuiteResult run_property_suite(unsigned seed, const std::string& filter);

}  // namespace slopekit
