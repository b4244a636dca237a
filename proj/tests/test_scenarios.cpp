#include "doctest.h"

#include <algorithm>

#include "dgal/errors.hpp"
#include "dgal/scenarios.hpp"

using namespace dgal;

TEST_CASE("registry") {
  auto all = list_scenarios();
  CHECK(all.size() >= 20);
  auto it = std::find_if(all.begin(), all.end(), [](const ScenarioInfo& s) { return s.id == "ex2_1_cubic"; });
  REQUIRE(it != all.end());
  CHECK(it->anchor == "Example 2.1");
  for (const auto& s : all) CHECK(s.anchor.rfind("Example ", 0) == 0);
  CHECK_THROWS_AS(run_scenario("nope"), UnknownScenario);
}

TEST_CASE("every scenario passes") {
  for (const auto& s : list_scenarios()) {
    Report r = run_scenario(s.id);
    INFO(r.to_text());
    CHECK(r.passed());
    CHECK(!r.assertions.empty());
  }
}

TEST_CASE("reports are byte-identical across runs") {
  for (const char* id : {"ex2_1_cubic", "ex4_20_pfaffian", "ex5_1_tensor_constants"})
    CHECK(run_scenario(id).to_json().dump() == run_scenario(id).to_json().dump());
  CHECK(run_property_suites(3, 2).to_json().dump() == run_property_suites(3, 2).to_json().dump());
}

TEST_CASE("json schema") {
  auto j = run_scenario("ex2_18_crt").to_json();
  CHECK(j["scenario"] == "ex2_18_crt");
  for (const auto& a : j["assertions"]) {
    CHECK(a.contains("name"));
    CHECK((a["status"] == "pass" || a["status"] == "fail"));
    CHECK((a["expected_provenance"] == "printed" || a["expected_provenance"] == "trivial" ||
           a["expected_provenance"] == "derived"));
    CHECK(a["residual"].is_null());
  }
  CHECK(j["notes"].is_array());
}

TEST_CASE("property suites") {
  Report r = run_property_suites(42, 5);
  INFO(r.to_text());
  CHECK(r.passed());
  auto has = [&](const std::string& prefix) {
    return std::any_of(r.assertions.begin(), r.assertions.end(),
                       [&](const Assertion& a) { return a.name.rfind(prefix, 0) == 0; });
  };
  CHECK(has("jacobi (n=1, m=1, q=2, source): 5/5"));
  CHECK(has("sharp and flat commute (n=1, m=2, q=1): 5/5"));
  CHECK(has("spencer of a holonomic section"));
}
