#include "doctest.h"

#include "fusion/ett.hpp"
#include "fusion/strategies.hpp"

using namespace fusion;

namespace {

int par(int e) { return e % 2 == 0 ? 1 : -1; }

Scalar eighthPlus(int sgn, long num = 1, long den = 16) {
  return Scalar(Rat(1, 8), Rat(sgn * num, den));
}

} // namespace

TEST_CASE("registry lists ten ids and rejects bad input") {
  auto ids = strategyIds();
  CHECK(ids.size() == 10);
  for (auto& id : ids) {
    auto s = paperStrategy(id);
    CHECK(s.id == id);
    CHECK(!s.cutTargets.empty());
    // bornTable itself checks the distribution sums to one
    CHECK_NOTHROW(bornTable(s.scene.graph, s.network));
  }
  CHECK_THROWS_AS(paperStrategy("nope"), UnknownStrategy);
  CHECK_THROWS_AS(paperStrategy("theorem1", {{"v", 1.5}}), ParamOutOfRange);
  CHECK_THROWS_AS(paperStrategy("bilocal-mix", {{"xi", -0.1}}), ParamOutOfRange);
}

TEST_CASE("instrumental CHSH strategy reproduces its extended table") {
  auto s = paperStrategy("fig1a-chsh");
  auto obsT = bornTable(s.scene.graph, s.network);
  REQUIRE(obsT.exact());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        CHECK(obsT.prob({{"A", a}, {"B", b}, {"C", c}}) == eighthPlus(par(a + b + c)));
  // cutting A decouples B,C for value 1 but not value 0
  auto do0 = doTable(s.scene.graph, s.network, "A", 0);
  auto do1 = doTable(s.scene.graph, s.network, "A", 1);
  REQUIRE(do0.exact());
  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 2; ++c) {
      CHECK(do0.prob({{"B", b}, {"C", c}}) == Scalar(Rat(1, 4), Rat(par(b + c), 8)));
      CHECK(do1.prob({{"B", b}, {"C", c}}) == Scalar::frac(1, 4));
    }
  auto swig = interrupt(s.scene.graph, {"A"});
  auto q = ettExtend(swig, hybridFromStrategy(s.scene.graph, s.network, {"A"}), "A");
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int v = 0; v < 2; ++v)
          CHECK(q.prob({{"A", a}, {"B", b}, {"C", c}, {"A#", v}}) ==
                eighthPlus(par(b + c + a * v)));
}

TEST_CASE("three-setting chain strategy attains (3+sqrt2)/2") {
  auto s = paperStrategy("bonet");
  auto swig = interrupt(s.scene.graph, {"A"});
  auto q = ettExtend(swig, hybridFromStrategy(s.scene.graph, s.network, {"A"}), "A");
  REQUIRE(q.exact());
  // A reads its shared bit, so Q(A=a | A#) = 1/2 and conditioning doubles
  for (int a = 0; a < 2; ++a)
    for (int v = 0; v < 2; ++v)
      CHECK(q.prob({{"A", a}, {"A#", v}}) == Scalar::frac(1, 2));
  auto cond = [&](int b, int c, int a, int v) {
    return Scalar(2) * q.prob({{"A", a}, {"B", b}, {"C", c}, {"A#", v}});
  };
  Scalar score = cond(0, 0, 0, 1) + cond(1, 1, 0, 1)                // b = c at (A#,A)=(1,0)
                 + Scalar(2) * q.prob({{"A", 1}, {"C", 0}, {"A#", 0}})
                 + cond(0, 1, 1, 1);
  CHECK(score == Scalar(Rat(3, 2), Rat(1, 2)));
}

TEST_CASE("unobserved-confounder strategy matches its closed form in v") {
  for (double v : {1.0, 0.5}) {
    auto s = paperStrategy("theorem1", {{"v", v}});
    auto obsT = bornTable(s.scene.graph, s.network);
    REQUIRE(obsT.exact());
    long den = v == 1.0 ? 16 : 32;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          CHECK(obsT.prob({{"A", a}, {"B", b}, {"C", c}}) ==
                eighthPlus(par(a + b + c * b), 1, den));
    // cut tables are featureless: A and C uniform and independent
    for (int val = 0; val < 2; ++val) {
      auto cut = doTable(s.scene.graph, s.network, "B", val);
      for (int a = 0; a < 2; ++a)
        for (int c = 0; c < 2; ++c)
          CHECK(cut.prob({{"A", a}, {"C", c}}) == Scalar::frac(1, 4));
    }
  }
}

TEST_CASE("exact classical model reproduces the v=1 observational table") {
  auto t = theorem1ClassicalTable();
  CHECK(t.exact());
  t.checkNormalized();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        CHECK(t.prob({{"A", a}, {"B", b}, {"C", c}}) == eighthPlus(par(a + b + c * b)));
}

TEST_CASE("measurement-dependence strategy matches the printed tables") {
  auto s = paperStrategy("theorem2");
  auto obsT = bornTable(s.scene.graph, s.network);
  REQUIRE(obsT.exact());
  const Scalar gp(Rat(1, 2), Rat(1, 2));   // 1/2 + 1/sqrt2
  const Scalar gm(Rat(1, 2), Rat(-1, 2));  // 1/2 - 1/sqrt2
  const Scalar invs2(Rat(0), Rat(1, 2));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        Scalar bracket = Scalar(1) + Scalar(par(a)) * invs2 -
                         Scalar(par(c)) * (a == 1 ? Scalar(par(b)) * gm : gp);
        CHECK(obsT.prob({{"A", a}, {"B", b}, {"C", c}}) == bracket / Scalar(8));
      }
  for (int a = 0; a < 2; ++a) {
    auto cut = doTable(s.scene.graph, s.network, "A", a);
    REQUIRE(cut.exact());
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        Scalar tilt = Scalar::frac(1, 2) - Scalar(a == 0 ? 1 : 0) -
                      Scalar(a == 1 && b == 0 ? 1 : 0);
        CHECK(cut.prob({{"B", b}, {"C", c}}) ==
              (Scalar(1) + Scalar(par(c)) * tilt) / Scalar(4));
      }
  }
  for (int bval = 0; bval < 2; ++bval) {
    auto cut = doTable(s.scene.graph, s.network, "B", bval);
    REQUIRE(cut.exact());
    for (int a = 0; a < 2; ++a)
      for (int c = 0; c < 2; ++c)
        CHECK(cut.prob({{"A", a}, {"C", c}}) ==
              (Scalar(1) + Scalar(par(a)) * invs2) / Scalar(4));
  }
}

namespace {

Scalar swapForm(int a, int b, int c, int va, int vb) {
  int sgn = par(b + c + vb + va * vb);
  if (a == 0) return Scalar(Rat(1, 16), Rat(sgn, 32));
  return Scalar(Rat(3, 16), Rat(-sgn, 32));
}

Scalar fritzForm(int a, int b, int c, int va) {
  return Scalar(Rat(1, 8), Rat(par(a + b + c * va), 16));
}

DataTable doubleCutTable(const PaperStrategy& s) {
  auto swig = interrupt(s.scene.graph, {"A", "B"});
  return multiEttExtend(swig, hybridFromStrategy(s.scene.graph, s.network, {"A", "B"}),
                        {"A", "B"});
}

} // namespace

TEST_CASE("entanglement-swapping chain matches its extended closed form") {
  auto q = doubleCutTable(paperStrategy("bilocal-swap"));
  REQUIRE(q.exact());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int va = 0; va < 2; ++va)
          for (int vb = 0; vb < 2; ++vb)
            CHECK(q.prob({{"A", a}, {"B", b}, {"C", c}, {"A#", va}, {"B#", vb}}) ==
                  swapForm(a, b, c, va, vb));
}

TEST_CASE("shared-bit chain matches its extended closed form") {
  auto q = doubleCutTable(paperStrategy("bilocal-fritz"));
  REQUIRE(q.exact());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int va = 0; va < 2; ++va)
          for (int vb = 0; vb < 2; ++vb)
            CHECK(q.prob({{"A", a}, {"B", b}, {"C", c}, {"A#", va}, {"B#", vb}}) ==
                  fritzForm(a, b, c, va));
}

TEST_CASE("chain mixture interpolates the two pure chain strategies") {
  auto q = doubleCutTable(paperStrategy("bilocal-mix", {{"xi", 0.5}}));
  REQUIRE(q.exact());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int va = 0; va < 2; ++va)
          for (int vb = 0; vb < 2; ++vb) {
            Scalar want =
                (swapForm(a, b, c, va, vb) + fritzForm(a, b, c, va)) / Scalar(2);
            CHECK(q.prob({{"A", a}, {"B", b}, {"C", c}, {"A#", va}, {"B#", vb}}) == want);
          }
}

TEST_CASE("four-outcome triangle strategy matches its printed tables") {
  auto s = paperStrategy("triangle-fritz", {{"v", 1.0}});
  auto obsT = bornTable(s.scene.graph, s.network);
  REQUIRE(obsT.exact());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 4; ++c) {
        int cp = c % 2, y = c / 2;
        Scalar want = a == y ? eighthPlus(par(b + cp + y * a)) : Scalar(0);
        CHECK(obsT.prob({{"A", a}, {"B", b}, {"C", c}}) == want);
      }
  for (int a = 0; a < 2; ++a) {
    auto cut = doTable(s.scene.graph, s.network, "A", a);
    REQUIRE(cut.exact());
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 4; ++c) {
        int cp = c % 2, y = c / 2;
        CHECK(cut.prob({{"B", b}, {"C", c}}) == eighthPlus(par(b + cp + y * a)));
      }
  }
}

TEST_CASE("coarse-grained triangle strategy has the expected support") {
  auto s = paperStrategy("coarse-fritz", {{"v", 1.0}});
  auto obsT = bornTable(s.scene.graph, s.network);
  obsT.checkNormalized();
  std::set<std::vector<int>> zeros = {{0, 1, 1}, {0, 1, 2}, {0, 2, 1},
                                      {0, 2, 2}, {1, 0, 0}, {1, 0, 1},
                                      {1, 0, 2}, {1, 1, 0}, {1, 2, 0}};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        double p = obsT.prob({{"A", a}, {"B", b}, {"C", c}}).toDouble();
        if (zeros.count({a, b, c}))
          CHECK(p == doctest::Approx(0.0).epsilon(1e-12));
        else
          CHECK(p > 1e-3);
      }
}

TEST_CASE("triangle chain strategy hides the correlation observationally") {
  auto s = paperStrategy("chain-chsh");
  auto q = doubleCutTable(s);
  REQUIRE(q.exact());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int va = 0; va < 2; ++va)
          for (int vb = 0; vb < 2; ++vb)
            CHECK(q.prob({{"A", a}, {"B", b}, {"C", c}, {"A#", va}, {"B#", vb}}) ==
                  eighthPlus(par(b + c + va * vb)));
  auto obsT = bornTable(s.scene.graph, s.network);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        CHECK(obsT.prob({{"A", a}, {"B", b}, {"C", c}}) == eighthPlus(par(b + c + a * b)));
  for (int a = 0; a < 2; ++a) {
    auto cut = doTable(s.scene.graph, s.network, "A", a);
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        CHECK(cut.prob({{"B", b}, {"C", c}}) ==
              Scalar(Rat(1, 4), Rat(par(b + c + a * b), 8)));
  }
  // cutting B wipes out all dependence on everything
  for (int bval = 0; bval < 2; ++bval) {
    auto cut = doTable(s.scene.graph, s.network, "B", bval);
    for (int a = 0; a < 2; ++a)
      for (int c = 0; c < 2; ++c)
        CHECK(cut.prob({{"A", a}, {"C", c}}) == Scalar::frac(1, 4));
  }
}
