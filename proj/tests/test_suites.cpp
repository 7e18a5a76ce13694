#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lff/suites.hpp"

using namespace lff;

TEST_CASE("suite registry") {
  auto names = suite_names();
  CHECK(names.size() == 9);
  CHECK_THROWS_AS(run_suite_serial("no-such-suite", 2), std::invalid_argument);
}

TEST_CASE("parallel sweep reproduces the serial reference") {
  for (const std::string name : {"cosets", "laws", "main-theorem"}) {
    int cap = name == "laws" ? 2 : 4;
    auto serial = run_suite_serial(name, cap);
    auto parallel = run_suite_parallel(name, cap, 3);
    REQUIRE(serial.cases.size() == parallel.cases.size());
    for (std::size_t i = 0; i < serial.cases.size(); ++i) {
      CHECK(serial.cases[i].name == parallel.cases[i].name);
      CHECK(serial.cases[i].pass == parallel.cases[i].pass);
      CHECK(serial.cases[i].detail == parallel.cases[i].detail);
    }
    CHECK(serial.pass());
    CHECK(serial.failures() == 0);
    CHECK(serial.summary().find(name) == 0);
  }
}

TEST_CASE("bounded sweeps stay small but nonempty") {
  auto r = run_suite_serial("cosets", 3);
  CHECK(!r.cases.empty());
  CHECK(r.cases.size() < run_suite_serial("cosets", 5).cases.size());
}
