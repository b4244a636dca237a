#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace dgal {

// Where an expected value comes from.
enum class Provenance { Printed, Trivial, Derived };
std::string provenance_name(Provenance p);

struct Assertion {
  std::string name;
  bool passed = false;
  Provenance provenance = Provenance::Printed;
  std::string residual;  // canonical form of the mismatch, empty on success
};

struct Report {
  std::string scenario;
  std::vector<Assertion> assertions;
  std::vector<std::string> notes;

  bool passed() const;
  int pass_count() const;
  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

struct ScenarioInfo {
  std::string id;
  std::string anchor;
  std::string summary;
};

std::vector<ScenarioInfo> list_scenarios();
// Throws UnknownScenario.
Report run_scenario(const std::string& id);

// Randomized identity checks; deterministic in the seed.
Report run_property_suites(std::uint64_t seed, int trials);

}  // namespace dgal
