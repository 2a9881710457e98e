#include "fusion/scenarios.hpp"

#include <algorithm>

namespace fusion {

namespace {

struct Spec {
  const char* notes;
  // latent -> children, then observed edges
  std::vector<std::pair<std::string, std::vector<std::string>>> latents;
  std::vector<std::pair<std::string, std::string>> edges;
};

const std::map<std::string, Spec>& registry() {
  static const std::map<std::string, Spec> reg = {
      {"fig1a",
       {"A,B share a source; B,C share a source; direct arrow A -> C",
        {{"gamma", {"A", "B"}}, {"alpha", {"B", "C"}}},
        {{"A", "C"}}}},
      {"fig1b",
       {"chain A -> B -> C with sources on (A,C) and (B,C)",
        {{"beta", {"A", "C"}}, {"alpha", {"B", "C"}}},
        {{"A", "B"}, {"B", "C"}}}},
      {"fig1c",
       {"exogenous C feeding A and B; source on (A,B); arrow A -> B",
        {{"alpha", {"A", "B"}}},
        {{"C", "A"}, {"C", "B"}, {"A", "B"}}}},
      {"fig1d",
       {"exogenous A feeding B and C; chain B -> C; source on (B,C)",
        {{"alpha", {"B", "C"}}},
        {{"A", "B"}, {"A", "C"}, {"B", "C"}}}},
      {"fig2a-instrumental",
       {"instrumental scenario: A -> B -> C with a source on (B,C)",
        {{"lambda", {"B", "C"}}},
        {{"A", "B"}, {"B", "C"}}}},
      {"fig2b",
       {"chain A -> B -> C with sources on (B,C) and (A,C)",
        {{"alpha", {"B", "C"}}, {"beta", {"A", "C"}}},
        {{"A", "B"}, {"B", "C"}}}},
      {"fig3a",
       {"chain A -> B -> C with sources on (A,B) and (B,C)",
        {{"gamma", {"A", "B"}}, {"alpha", {"B", "C"}}},
        {{"A", "B"}, {"B", "C"}}}},
      {"evans-uc",
       {"B feeds A and C; sources on (A,B) and (B,C)",
        {{"gamma", {"A", "B"}}, {"alpha", {"B", "C"}}},
        {{"B", "A"}, {"B", "C"}}}},
      {"evans-extra-edge",
       {"evans-uc plus a direct arrow A -> C",
        {{"gamma", {"A", "B"}}, {"alpha", {"B", "C"}}},
        {{"B", "A"}, {"B", "C"}, {"A", "C"}}}},
      {"measurement-dependence",
       {"single source feeding A, B, C; chain A -> B -> C",
        {{"lambda", {"A", "B", "C"}}},
        {{"A", "B"}, {"B", "C"}}}},
      {"bilocal-chain",
       {"chain A -> B -> C with sources on (A,B) and (A,C)",
        {{"gamma", {"A", "B"}}, {"alpha", {"A", "C"}}},
        {{"A", "B"}, {"B", "C"}}}},
      {"triangle-AB",
       {"triangle of pairwise sources plus arrow A -> B",
        {{"gamma", {"A", "B"}}, {"beta", {"A", "C"}}, {"alpha", {"B", "C"}}},
        {{"A", "B"}}}},
      {"triangle-AB-AC",
       {"triangle of pairwise sources plus arrows A -> B and A -> C",
        {{"gamma", {"A", "B"}}, {"beta", {"A", "C"}}, {"alpha", {"B", "C"}}},
        {{"A", "B"}, {"A", "C"}}}},
      {"triangle-chain",
       {"triangle of pairwise sources plus chain A -> B -> C",
        {{"gamma", {"A", "B"}}, {"beta", {"A", "C"}}, {"alpha", {"B", "C"}}},
        {{"A", "B"}, {"B", "C"}}}},
      {"triangle-collider",
       {"triangle of pairwise sources plus arrows A -> B and C -> B",
        {{"gamma", {"A", "B"}}, {"beta", {"A", "C"}}, {"alpha", {"B", "C"}}},
        {{"A", "B"}, {"C", "B"}}}},
      {"triangle-3edges",
       {"triangle of pairwise sources plus all of A -> B, B -> C, A -> C",
        {{"gamma", {"A", "B"}}, {"beta", {"A", "C"}}, {"alpha", {"B", "C"}}},
        {{"A", "B"}, {"B", "C"}, {"A", "C"}}}},
      {"edge-case-1",
       {"single global source with the complete order A -> B -> C, A -> C",
        {{"lambda", {"A", "B", "C"}}},
        {{"A", "B"}, {"B", "C"}, {"A", "C"}}}},
      {"edge-case-2",
       {"sources on (A,B) and (B,C) with the complete order A -> B -> C, A -> C",
        {{"gamma", {"A", "B"}}, {"alpha", {"B", "C"}}},
        {{"A", "B"}, {"B", "C"}, {"A", "C"}}}},
      {"edge-case-3",
       {"single global source with arrows B -> C and A -> C",
        {{"lambda", {"A", "B", "C"}}},
        {{"B", "C"}, {"A", "C"}}}},
      {"edge-case-4",
       {"sources on (A,B) and (B,C) with arrows B -> C and A -> C",
        {{"gamma", {"A", "B"}}, {"alpha", {"B", "C"}}},
        {{"B", "C"}, {"A", "C"}}}},
  };
  return reg;
}

} // namespace

Scenario scenario(const std::string& id, const std::map<std::string, int>& cards) {
  auto it = registry().find(id);
  if (it == registry().end()) throw UnknownScenario("unknown scenario id: " + id);
  const Spec& spec = it->second;

  auto cardOf = [&](const std::string& v) {
    auto c = cards.find(v);
    return c == cards.end() ? 2 : c->second;
  };
  std::vector<Node> nodes = {
      Node{"A", NodeKind::Observed, cardOf("A")},
      Node{"B", NodeKind::Observed, cardOf("B")},
      Node{"C", NodeKind::Observed, cardOf("C")},
  };
  std::vector<std::pair<std::string, std::string>> edges = spec.edges;
  for (auto& [lat, kids] : spec.latents) {
    nodes.push_back(Node{lat, NodeKind::Latent, 0});
    for (auto& k : kids) edges.emplace_back(lat, k);
  }
  for (auto& [v, c] : cards)
    if (v != "A" && v != "B" && v != "C")
      throw UnknownScenario("cardinality override for unknown variable: " + v);
  return Scenario{id, spec.notes, CausalGraph(std::move(nodes), std::move(edges))};
}

std::vector<std::string> scenarioIds() {
  std::vector<std::string> out;
  for (auto& [id, spec] : registry()) out.push_back(id);
  return out;
}

} // namespace fusion
