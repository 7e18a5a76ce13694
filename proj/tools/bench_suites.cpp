#include <chrono>
#include <iomanip>
#include <iostream>

#include "lff/suites.hpp"

// Times every sweep under the serial reference runner and the OpenMP runner
// and checks the outputs match case for case.

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

bool same(const lff::SuiteResult& a, const lff::SuiteResult& b) {
  if (a.cases.size() != b.cases.size()) return false;
  for (std::size_t i = 0; i < a.cases.size(); ++i)
    if (a.cases[i].name != b.cases[i].name || a.cases[i].pass != b.cases[i].pass ||
        a.cases[i].detail != b.cases[i].detail)
      return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = argc > 1 ? std::atoi(argv[1]) : 0;
  std::cout << std::fixed << std::setprecision(3);
  std::cout << "suite                 cases   serial[s] parallel[s]  speedup  match\n";
  bool all_match = true;
  for (const auto& name : lff::suite_names()) {
    auto t0 = std::chrono::steady_clock::now();
    auto serial = lff::run_suite_serial(name);
    auto t1 = std::chrono::steady_clock::now();
    auto parallel = lff::run_suite_parallel(name, 0, jobs);
    auto t2 = std::chrono::steady_clock::now();
    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    bool ok = same(serial, parallel);
    all_match = all_match && ok;
    std::cout << std::left << std::setw(20) << name << std::right << std::setw(7)
              << serial.cases.size() << std::setw(12) << ts << std::setw(12) << tp
              << std::setw(9) << (tp > 0 ? ts / tp : 0.0) << "  " << (ok ? "yes" : "NO") << "\n";
  }
  return all_match ? 0 : 1;
}
