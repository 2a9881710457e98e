#pragma once

#include "fusion/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace fusion {

struct UnknownScenario : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Scenario {
  std::string id;
  std::string notes;
  CausalGraph graph;
};

// Registered three-variable structures.  `cards` overrides the default
// (binary) cardinality of individual observed variables, e.g. {{"A", 3}}.
Scenario scenario(const std::string& id, const std::map<std::string, int>& cards = {});

std::vector<std::string> scenarioIds();

} // namespace fusion
