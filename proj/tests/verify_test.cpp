#include <doctest.h>

#include <string>
#include <vector>

#include "osc/verify.hpp"
#include "test_support.hpp"

namespace {

using testsupport::errorCode;

TEST_CASE("suite names are fixed") {
  const auto& names = osc::verify::suiteNames();
  CHECK(names == std::vector<std::string>{"finite", "baire", "seq", "walks", "lspace"});
}

TEST_CASE("unknown suites are rejected") {
  osc::verify::Budgets budgets;
  CHECK(errorCode([&] { osc::verify::runSuite("bogus", 0, budgets); }) == "UnknownSuite");
}

TEST_CASE("a suite run is deterministic and green") {
  osc::verify::Budgets budgets;
  auto first = osc::verify::runSuite("seq", 7, budgets);
  CHECK(first.suite == "seq");
  CHECK(first.passed());
  CHECK(first.totalChecks() > 0);
  CHECK(first.allCounterexamples().empty());

  auto second = osc::verify::runSuite("seq", 7, budgets);
  REQUIRE(first.properties.size() == second.properties.size());
  for (std::size_t i = 0; i < first.properties.size(); ++i) {
    CHECK(first.properties[i].property == second.properties[i].property);
    CHECK(first.properties[i].checks == second.properties[i].checks);
    CHECK(first.properties[i].counterexamples.size() ==
          second.properties[i].counterexamples.size());
  }
}

}  // namespace
