#include <doctest.h>

#include "fusion/graph.hpp"

#include <algorithm>

using namespace fusion;

namespace {

CausalGraph evansLike() {
  // B feeds A and C; sources gamma -> {A,B}, alpha -> {B,C}
  return CausalGraph(
      {Node{"A", NodeKind::Observed, 2}, Node{"B", NodeKind::Observed, 2},
       Node{"C", NodeKind::Observed, 2}, Node{"gamma", NodeKind::Latent, 0},
       Node{"alpha", NodeKind::Latent, 0}},
      {{"B", "A"}, {"B", "C"}, {"gamma", "A"}, {"gamma", "B"},
       {"alpha", "B"}, {"alpha", "C"}});
}

} // namespace

TEST_CASE("basic accessors and validation") {
  CausalGraph g = evansLike();
  CHECK(g.hasNode("B"));
  CHECK(!g.hasNode("D"));
  CHECK(g.node("A").card == 2);
  CHECK(g.hasEdge("B", "A"));
  CHECK(!g.hasEdge("A", "B"));
  CHECK(g.observed() == std::vector<std::string>{"A", "B", "C"});
  auto lat = g.latents();
  std::sort(lat.begin(), lat.end());
  CHECK(lat == std::vector<std::string>{"alpha", "gamma"});
  CHECK(g.marks().empty());
  CHECK(g.parents("A") == std::vector<std::string>{"B", "gamma"});
  CHECK(validate(g).ok());
}

TEST_CASE("validation flags cycles and non-exogenous latents") {
  CausalGraph cyc({Node{"A", NodeKind::Observed, 2}, Node{"B", NodeKind::Observed, 2}},
                  {{"A", "B"}, {"B", "A"}});
  CHECK(!validate(cyc).acyclic);
  CHECK(!validate(cyc).ok());

  CausalGraph bad({Node{"A", NodeKind::Observed, 2}, Node{"l", NodeKind::Latent, 0}},
                  {{"A", "l"}, {"l", "A"}});
  CHECK(!validate(bad).latentsExogenous);
}

TEST_CASE("mark naming") {
  CHECK(markName("B") == "B#");
  CHECK(markTarget("B#") == "B");
  CHECK(markTarget("B").empty());
}

TEST_CASE("interrupt performs single-world surgery") {
  CausalGraph g = evansLike();
  CausalGraph s = interrupt(g, {"B"});
  CHECK(s.hasNode("B#"));
  CHECK(s.node("B#").kind == NodeKind::InterventionMark);
  CHECK(s.node("B#").card == 2);
  // outgoing edges of B now leave from B#
  CHECK(s.hasEdge("B#", "A"));
  CHECK(s.hasEdge("B#", "C"));
  CHECK(!s.hasEdge("B", "A"));
  CHECK(!s.hasEdge("B", "C"));
  // B keeps its own incoming edges
  CHECK(s.hasEdge("gamma", "B"));
  CHECK(s.hasEdge("alpha", "B"));
  CHECK(validate(s).ok());
  CHECK(s.marks() == std::vector<std::string>{"B#"});

  CHECK_THROWS_AS(interrupt(g, {"gamma"}), TargetNotObserved);
  CHECK_THROWS_AS(interrupt(g, {"D"}), GraphError);
  CHECK_THROWS_AS(interrupt(g, {"A"}), TargetHasNoChildren); // A has no children
}

TEST_CASE("full SWIG detection") {
  CausalGraph g = evansLike();
  CHECK(!isFullSwig(g));            // B -> A is an observed-to-observed edge
  CHECK(isFullSwig(interrupt(g, {"B"})));

  CausalGraph chain({Node{"A", NodeKind::Observed, 2}, Node{"B", NodeKind::Observed, 2},
                     Node{"C", NodeKind::Observed, 2}},
                    {{"A", "B"}, {"B", "C"}});
  CHECK(!isFullSwig(interrupt(chain, {"A"})));     // B -> C survives
  CHECK(isFullSwig(interrupt(chain, {"A", "B"})));
}

TEST_CASE("shared children of marks") {
  CausalGraph g = evansLike();
  CausalGraph s = interrupt(g, {"B"});
  CHECK_THROWS_AS(sharedChildren(s, "B#", "A"), NotAnInterventionNode);
  CHECK_THROWS_AS(sharedChildren(s, "B", "B#"), NotAnInterventionNode);

  // collider: A -> B <- C, both interrupted, marks share child B
  CausalGraph col({Node{"A", NodeKind::Observed, 2}, Node{"B", NodeKind::Observed, 2},
                   Node{"C", NodeKind::Observed, 2}},
                  {{"A", "B"}, {"C", "B"}});
  CausalGraph cs = interrupt(col, {"A", "C"});
  CHECK(sharedChildren(cs, "A#", "C#") == std::set<std::string>{"B"});

  // disjoint children: A -> B, C alone has no outgoing edge; use two marks
  CausalGraph chain({Node{"A", NodeKind::Observed, 2}, Node{"B", NodeKind::Observed, 2},
                     Node{"C", NodeKind::Observed, 2}},
                    {{"A", "B"}, {"B", "C"}});
  CausalGraph hs = interrupt(chain, {"A", "B"});
  CHECK(sharedChildren(hs, "A#", "B#").empty());
}

TEST_CASE("maximal interruption splits multi-child marks") {
  CausalGraph g = evansLike();
  CHECK_THROWS_AS(maximallyInterrupt(g), NotFullSwig);

  CausalGraph s = interrupt(g, {"B"});
  CausalGraph m = maximallyInterrupt(s);
  CHECK(m.hasNode("B#@A"));
  CHECK(m.hasNode("B#@C"));
  CHECK(!m.hasNode("B#"));
  CHECK(m.hasEdge("B#@A", "A"));
  CHECK(m.hasEdge("B#@C", "C"));
  CHECK(!m.hasEdge("B#@A", "C"));
  CHECK(sharedChildren(m, "B#@A", "B#@C").empty());
  CHECK(validate(m).ok());

  // single-child marks pass through unchanged
  CausalGraph chain({Node{"A", NodeKind::Observed, 2}, Node{"B", NodeKind::Observed, 2},
                     Node{"C", NodeKind::Observed, 2}},
                    {{"A", "B"}, {"B", "C"}});
  CausalGraph hs = interrupt(chain, {"A", "B"});
  CHECK(maximallyInterrupt(hs) == hs);
}

TEST_CASE("intervention-eligible nodes") {
  CausalGraph g = evansLike();
  CHECK(interventionEligible(g) == std::vector<std::string>{"B"});

  CausalGraph chain({Node{"A", NodeKind::Observed, 2}, Node{"B", NodeKind::Observed, 2},
                     Node{"C", NodeKind::Observed, 2}},
                    {{"A", "B"}, {"B", "C"}});
  CHECK(interventionEligible(chain) == std::vector<std::string>{"A", "B"});
}
