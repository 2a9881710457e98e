#include "doctest.h"

#include "fusion/lp.hpp"

#include <random>

using namespace fusion;

namespace {

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  Scalar s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// substitute the returned certificate back into the program
void checkCertificate(const LpProblem& p, const LpSolution& s) {
  size_t m = p.A.size(), n = p.c.size();
  if (s.status == LpStatus::Optimal) {
    for (size_t i = 0; i < m; ++i) CHECK(dot(p.A[i], s.x) == p.b[i]);
    for (auto& v : s.x) CHECK(v.sign() >= 0);
    CHECK(dot(p.c, s.x) == s.objective);
    CHECK(dot(s.y, p.b) == s.objective);  // strong duality
    for (size_t j = 0; j < n; ++j) {
      Scalar col(0);
      for (size_t i = 0; i < m; ++i) col += s.y[i] * p.A[i][j];
      CHECK((p.c[j] - col).sign() >= 0);  // dual feasibility
    }
  } else if (s.status == LpStatus::Infeasible) {
    CHECK(dot(s.y, p.b).sign() > 0);
    for (size_t j = 0; j < n; ++j) {
      Scalar col(0);
      for (size_t i = 0; i < m; ++i) col += s.y[i] * p.A[i][j];
      CHECK(col.sign() <= 0);  // Farkas: y.A <= 0 while y.b > 0
    }
  }
}

}  // namespace

TEST_CASE("minimum over a probability simplex picks the smallest cost") {
  LpProblem p;
  p.A = {{Scalar(1), Scalar(1), Scalar(1)}};
  p.b = {Scalar(1)};
  p.c = {Scalar(3), Scalar::frac(1, 2), Scalar(2)};
  auto s = solveLp(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == Scalar::frac(1, 2));
  CHECK(s.x[1] == Scalar(1));
  checkCertificate(p, s);
}

TEST_CASE("negative right-hand side over nonnegative columns is infeasible") {
  LpProblem p;
  p.A = {{Scalar(1), Scalar(1)}};
  p.b = {Scalar(-1)};
  p.c = {Scalar(0), Scalar(0)};
  auto s = solveLp(p);
  REQUIRE(s.status == LpStatus::Infeasible);
  checkCertificate(p, s);
}

TEST_CASE("free direction with negative cost is unbounded") {
  LpProblem p;
  p.A = {{Scalar(0), Scalar(1)}};
  p.b = {Scalar(1)};
  p.c = {Scalar(-1), Scalar(0)};
  auto s = solveLp(p);
  CHECK(s.status == LpStatus::Unbounded);
}

TEST_CASE("irrational data stays exact through the pivots") {
  // x1 - x2 = sqrt2 - 1, x1 + x2 = 1
  LpProblem p;
  p.A = {{Scalar(1), Scalar(-1)}, {Scalar(1), Scalar(1)}};
  p.b = {Scalar(Rat(-1), Rat(1)), Scalar(1)};
  p.c = {Scalar(1), Scalar(0)};
  auto s = solveLp(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.x[0] == Scalar(Rat(0), Rat(1, 2)));  // sqrt2/2
  CHECK(s.x[1] == Scalar(1) - Scalar(Rat(0), Rat(1, 2)));
  checkCertificate(p, s);
}

TEST_CASE("redundant rows do not break phase two") {
  LpProblem p;
  p.A = {{Scalar(1), Scalar(1)}, {Scalar(2), Scalar(2)}};
  p.b = {Scalar(1), Scalar(2)};
  p.c = {Scalar(1), Scalar(2)};
  auto s = solveLp(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == Scalar(1));
  checkCertificate(p, s);
}

TEST_CASE("degenerate cycling example terminates under Bland's rule") {
  // Beale's example, put into equality form with three slacks
  auto f = [](long n, long d) { return Scalar::frac(n, d); };
  LpProblem p;
  p.A = {{f(1, 4), f(-60, 1), f(-1, 25), Scalar(9), Scalar(1), Scalar(0), Scalar(0)},
         {f(1, 2), f(-90, 1), f(-1, 50), Scalar(3), Scalar(0), Scalar(1), Scalar(0)},
         {Scalar(0), Scalar(0), Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(1)}};
  p.b = {Scalar(0), Scalar(0), Scalar(1)};
  p.c = {f(-3, 4), Scalar(150), f(-1, 50), Scalar(6), Scalar(0), Scalar(0), Scalar(0)};
  auto s = solveLp(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == f(-1, 20));
  checkCertificate(p, s);
}

TEST_CASE("random conic points are feasible and outside points certified") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), pick(0, 9);
  for (int trial = 0; trial < 40; ++trial) {
    size_t m = 3, n = 6;
    LpProblem p;
    p.A.assign(m, std::vector<Scalar>(n));
    for (auto& row : p.A)
      for (auto& v : row) v = Scalar(coef(rng));
    p.c.assign(n, Scalar(0));
    for (auto& v : p.c) v = Scalar(coef(rng));
    if (trial % 2 == 0) {
      // b in the cone by construction: nonnegative combination of columns
      std::vector<Scalar> x(n);
      for (auto& v : x) v = Scalar::frac(pick(rng), 3);
      p.b.assign(m, Scalar(0));
      for (size_t i = 0; i < m; ++i) p.b[i] = dot(p.A[i], x);
      auto s = solveLp(p);
      REQUIRE(s.status != LpStatus::Infeasible);
      if (s.status == LpStatus::Optimal) {
        CHECK((dot(p.c, x) - s.objective).sign() >= 0);
        checkCertificate(p, s);
      }
    } else {
      p.b.assign(m, Scalar(0));
      for (auto& v : p.b) v = Scalar(coef(rng));
      auto s = solveLp(p);
      checkCertificate(p, s);
    }
  }
}
