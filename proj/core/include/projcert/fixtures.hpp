#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "projcert/types.hpp"

namespace projcert {

// Named regression fixtures: each reproduces a worked example or
// counterexample with a hard-coded expected verdict and side conditions.
struct FixtureResult {
  std::string name;
  std::string expected;
  std::string observed;
  bool match = false;
  nlohmann::json details;

  nlohmann::json to_json() const;
};

std::vector<std::string> fixture_names();
FixtureResult run_fixture(const std::string& name, const SampleConfig& cfg);

}  // namespace projcert
