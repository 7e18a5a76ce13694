#pragma once

#include <string>
#include <vector>

namespace lff {

struct SuiteCase {
  std::string name;
  bool pass = false;
  std::string detail;  // failure diagnostics, empty on pass
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCase> cases;

  bool pass() const;
  std::size_t failures() const;
  std::string summary() const;
};

// Registered verification sweeps, in presentation order.
std::vector<std::string> suite_names();

// Deterministic case list for a named sweep. max_n <= 0 selects the sweep's
// full documented size; smaller values cap the dimension bound where one
// applies. Unknown names throw std::invalid_argument.
SuiteResult run_suite_serial(const std::string& name, int max_n = 0);

// Same cases evaluated under an OpenMP loop; the result is order-stable and
// equals the serial one. jobs <= 0 uses the OpenMP default thread count.
SuiteResult run_suite_parallel(const std::string& name, int max_n = 0, int jobs = 0);

}  // namespace lff
