#include <doctest.h>

#include "fusion/ett.hpp"
#include "fusion/scenarios.hpp"

using namespace fusion;

namespace {

// evans-uc with B = gamma xor alpha, A = gamma, C = alpha (uniform sources):
// P(a,b,c) = 1/4 [b = a xor c], and cutting B leaves A, C uniform.
HybridDataset parityDataset() {
  HybridDataset h;
  DataTable p({Var{"A", 2}, Var{"B", 2}, Var{"C", 2}});
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) p.at({a, a ^ c, c}) = Scalar::frac(1, 4);
  h.observational = p;
  for (int v = 0; v < 2; ++v) {
    DataTable d({Var{"A", 2}, Var{"C", 2}});
    for (int a = 0; a < 2; ++a)
      for (int c = 0; c < 2; ++c) d.at({a, c}) = Scalar::frac(1, 4);
    h.interventions[doKey("B", v)] = d;
  }
  return h;
}

} // namespace

TEST_CASE("single-target extension against a hand-computed model") {
  CausalGraph swig = interrupt(scenario("evans-uc").graph, {"B"});
  DataTable q = ettExtend(swig, parityDataset(), "B");
  CHECK(q.vars().size() == 3);
  REQUIRE(q.given().size() == 1);
  CHECK(q.given()[0].name == "B#");
  CHECK_NOTHROW(q.checkNormalized());
  // B is fixed by the sources, so Q(a,b,c | B#=v) = 1/4 [b = a xor c] for both v
  for (int v = 0; v < 2; ++v)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          CHECK(q.at({a, b, c}, {v}) ==
                (b == (a ^ c) ? Scalar::frac(1, 4) : Scalar(0)));
}

TEST_CASE("extension matches the closed form on a shared-source structure") {
  // fig1a with the direct arrow A -> C cut; exact extension
  //   Q(a,b,c | A#=v) = 1/8 (1 + (-1)^{b+c+a v} / sqrt 2)
  // fed in through its own observational and post-cut marginals.
  CausalGraph swig = interrupt(scenario("fig1a").graph, {"A"});
  auto oracle = [](int a, int b, int c, int v) {
    return Scalar(Rat(1, 8), Rat(((b + c + a * v) % 2) ? -1 : 1, 16));
  };

  HybridDataset h;
  DataTable p({Var{"A", 2}, Var{"B", 2}, Var{"C", 2}});
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) p.at({a, b, c}) = oracle(a, b, c, a);
  h.observational = p;
  for (int v = 0; v < 2; ++v) {
    DataTable d({Var{"B", 2}, Var{"C", 2}});
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        d.at({b, c}) = oracle(0, b, c, v) + oracle(1, b, c, v);
    h.interventions[doKey("A", v)] = d;
  }

  DataTable q = ettExtend(swig, h, "A");
  for (int v = 0; v < 2; ++v)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          CHECK(q.at({a, b, c}, {v}) == oracle(a, b, c, v));
}

TEST_CASE("two disjoint cuts on the chain") {
  CausalGraph chain({Node{"A", NodeKind::Observed, 2}, Node{"B", NodeKind::Observed, 2},
                     Node{"C", NodeKind::Observed, 2}},
                    {{"A", "B"}, {"B", "C"}});
  CausalGraph swig = interrupt(chain, {"A", "B"});

  // deterministic chain: A uniform, B = A, C = B
  HybridDataset h;
  DataTable p({Var{"A", 2}, Var{"B", 2}, Var{"C", 2}});
  p.at({0, 0, 0}) = Scalar::frac(1, 2);
  p.at({1, 1, 1}) = Scalar::frac(1, 2);
  h.observational = p;
  for (int v = 0; v < 2; ++v) {
    DataTable dA({Var{"B", 2}, Var{"C", 2}});
    dA.at({v, v}) = Scalar(1);
    h.interventions[doKey("A", v)] = dA;
    DataTable dB({Var{"A", 2}, Var{"C", 2}});
    dB.at({0, v}) = Scalar::frac(1, 2);
    dB.at({1, v}) = Scalar::frac(1, 2);
    h.interventions[doKey("B", v)] = dB;
  }

  DataTable q = multiEttExtend(swig, h, {"A", "B"});
  REQUIRE(q.given().size() == 2);
  CHECK(q.given()[0].name == "A#");
  CHECK(q.given()[1].name == "B#");
  // ground truth: A free and uniform, B = A# value, C = B# value
  for (int al = 0; al < 2; ++al)
    for (int be = 0; be < 2; ++be)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < 2; ++c)
            CHECK(q.at({a, b, c}, {al, be}) ==
                  ((b == al && c == be) ? Scalar::frac(1, 2) : Scalar(0)));

  // projecting back recovers every input table entrywise
  HybridDataset back = projectToHybrid(swig, q, {"A", "B"});
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        CHECK(back.observational.at({a, b, c}) == p.at({a, b, c}));
  for (auto& [key, tab] : h.interventions) {
    auto it = back.interventions.find(key);
    REQUIRE(it != back.interventions.end());
    CHECK(it->second.raw() == tab.raw());
  }
}

TEST_CASE("round trip on the single-cut model") {
  CausalGraph swig = interrupt(scenario("evans-uc").graph, {"B"});
  HybridDataset h = parityDataset();
  DataTable q = ettExtend(swig, h, "B");
  HybridDataset back = projectToHybrid(swig, q, {"B"});
  CHECK(back.observational.raw() == h.observational.raw());
  CHECK(back.interventions.at(doKey("B", 0)).raw() ==
        h.interventions.at(doKey("B", 0)).raw());
  CHECK(back.interventions.at(doKey("B", 1)).raw() ==
        h.interventions.at(doKey("B", 1)).raw());
}

TEST_CASE("incompatible tables are reported entry by entry") {
  CausalGraph swig = interrupt(scenario("evans-uc").graph, {"B"});
  HybridDataset h = parityDataset();
  // replace the cut tables by a point mass the joint cannot sit under
  for (int v = 0; v < 2; ++v) {
    DataTable d({Var{"A", 2}, Var{"C", 2}});
    d.at({0, 0}) = Scalar(1);
    h.interventions[doKey("B", v)] = d;
  }
  CHECK_THROWS_AS(ettExtend(swig, h, "B"), InconsistentTables);
  try {
    ettExtend(swig, h, "B");
  } catch (const InconsistentTables& e) {
    CHECK(!e.negatives.empty());
  }
}

TEST_CASE("precondition failures") {
  HybridDataset h = parityDataset();

  CausalGraph swig = interrupt(scenario("evans-uc").graph, {"B"});
  CHECK_THROWS_AS(ettExtend(swig, h, "A"), GraphError); // A was not interrupted

  HybridDataset missing = parityDataset();
  missing.interventions.erase(doKey("B", 1));
  CHECK_THROWS_AS(ettExtend(swig, missing, "B"), MissingTable);

  // ternary target
  CausalGraph t3 = interrupt(scenario("evans-uc", {{"B", 3}}).graph, {"B"});
  CHECK_THROWS_AS(multiEttExtend(t3, h, {"B"}), TargetNotBinary);

  // collider: the two marks share the child B
  CausalGraph col({Node{"A", NodeKind::Observed, 2}, Node{"B", NodeKind::Observed, 2},
                   Node{"C", NodeKind::Observed, 2}},
                  {{"A", "B"}, {"C", "B"}});
  CausalGraph cs = interrupt(col, {"A", "C"});
  CHECK_THROWS_AS(multiEttExtend(cs, h, {"A", "C"}), SharedChildrenNonEmpty);
}
