#pragma once

#include "fusion/quantum.hpp"
#include "fusion/scenarios.hpp"

#include <map>
#include <string>
#include <vector>

namespace fusion {

struct StrategyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownStrategy : StrategyError {
  using StrategyError::StrategyError;
};
struct ParamOutOfRange : StrategyError {
  using StrategyError::StrategyError;
};

// A named construction: the scenario it lives on (with cardinality overrides
// where the construction departs from binary), the network strategy itself,
// and the variables whose interventions the construction exercises.
struct PaperStrategy {
  std::string id;
  Scenario scene;
  NetworkStrategy network;
  std::vector<std::string> cutTargets;
};

// Registered constructions (parameters: "v" for visibility, "xi" for the
// strategy-mixing weight, both in [0,1], defaulting to 1 and 1/2):
//   fig1a-chsh      shared-source CHSH embedding with a direct arrow A -> C
//   bonet           instrument-like chain, three effective settings for B
//   theorem1        Werner-state protocol on the scenario where B feeds A and C (param v)
//   theorem2        three-qubit protocol on the single-common-source chain
//   bilocal-swap    entanglement-swapping protocol on the two-source chain
//   bilocal-fritz   Fritz-type protocol on the two-source chain
//   bilocal-mix     classical-bit mixture of the two bilocal protocols (param xi)
//   triangle-fritz  triangle + arrow A -> B, C outputs a (bit,bit) pair (param v)
//   coarse-fritz    triangle + arrow A -> B with trit outputs for B and C (param v)
//   chain-chsh      triangle + chain A -> B -> C, CHSH across both marks
PaperStrategy paperStrategy(const std::string& id,
                            const std::map<std::string, double>& params = {});

std::vector<std::string> strategyIds();

// Exact classical model for the v=1 observational table of the theorem1
// construction: two four-valued sources with Q(sqrt 2) weights and the
// deterministic/ stochastic response functions listed with it.  Evaluated
// entirely in exact arithmetic.
DataTable theorem1ClassicalTable();

} // namespace fusion
