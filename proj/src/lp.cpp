#include "fusion/lp.hpp"

namespace fusion {

namespace {

// full dense tableau over the exact field; columns n..n+m-1 are the phase-1
// artificials, kept around afterwards (at cost 0) so dual vectors can be read
// off their reduced costs
struct Tableau {
  size_t m, n;
  std::vector<std::vector<Scalar>> t;  // m x (n+m)
  std::vector<Scalar> rhs;
  std::vector<size_t> basis;
  std::vector<Scalar> cost;  // current objective, length n+m
  std::vector<Scalar> red;   // reduced costs
  Scalar objective;

  Tableau(const LpProblem& p) : m(p.A.size()), n(p.c.size()) {
    t.assign(m, std::vector<Scalar>(n + m, Scalar(0)));
    rhs.resize(m);
    basis.resize(m);
    for (size_t i = 0; i < m; ++i) {
      if (p.A[i].size() != n) throw DimensionMismatch("row length != objective length");
      bool flip = p.b[i].sign() < 0;
      for (size_t j = 0; j < n; ++j) t[i][j] = flip ? -p.A[i][j] : p.A[i][j];
      rhs[i] = flip ? -p.b[i] : p.b[i];
      t[i][n + i] = Scalar(1);
      basis[i] = n + i;
    }
  }

  void computeReduced() {
    red.assign(n + m, Scalar(0));
    objective = Scalar(0);
    // y = c_B B^{-1} accumulated row-wise: red_j = cost_j - sum_i cost_{basis_i} t[i][j]
    for (size_t j = 0; j < n + m; ++j) red[j] = cost[j];
    for (size_t i = 0; i < m; ++i) {
      const Scalar& cb = cost[basis[i]];
      if (cb.sign() == 0) continue;
      for (size_t j = 0; j < n + m; ++j)
        if (t[i][j].sign() != 0) red[j] -= cb * t[i][j];
      objective += cb * rhs[i];
    }
  }

  void pivot(size_t row, size_t col) {
    Scalar inv = Scalar(1) / t[row][col];
    for (auto& v : t[row]) v = v * inv;
    rhs[row] = rhs[row] * inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || t[i][col].sign() == 0) continue;
      Scalar f = t[i][col];
      for (size_t j = 0; j < n + m; ++j)
        if (t[row][j].sign() != 0) t[i][j] -= f * t[row][j];
      rhs[i] -= f * rhs[row];
    }
    if (red[col].sign() != 0) {
      Scalar f = red[col];
      for (size_t j = 0; j < n + m; ++j)
        if (t[row][j].sign() != 0) red[j] -= f * t[row][j];
      objective += f * rhs[row];
    }
    basis[row] = col;
  }

  // Bland's rule: smallest eligible entering index, smallest basis index on
  // ratio ties.  `allowArtificial` gates the artificial columns.
  // returns false once optimal, throws nothing; sets unbounded on failure
  bool unbounded = false;
  bool step(bool allowArtificial) {
    size_t limit = allowArtificial ? n + m : n;
    for (size_t j = 0; j < limit; ++j) {
      if (red[j].sign() >= 0) continue;
      size_t row = m;
      for (size_t i = 0; i < m; ++i) {
        if (t[i][j].sign() <= 0) continue;
        if (row == m) {
          row = i;
          continue;
        }
        Scalar diff = rhs[i] * t[row][j] - rhs[row] * t[i][j];
        if (diff.sign() < 0 || (diff.sign() == 0 && basis[i] < basis[row])) row = i;
      }
      if (row == m) {
        unbounded = true;
        return false;
      }
      pivot(row, j);
      return true;
    }
    return false;
  }
};

}  // namespace

LpSolution solveLp(const LpProblem& p) {
  const size_t m = p.A.size(), n = p.c.size();
  if (p.b.size() != m) throw DimensionMismatch("b length != row count");

  Tableau tab(p);

  // phase 1: minimize the sum of artificials
  tab.cost.assign(n + m, Scalar(0));
  for (size_t i = 0; i < m; ++i) tab.cost[n + i] = Scalar(1);
  tab.computeReduced();
  while (tab.step(true)) {
  }

  LpSolution out;
  if (tab.objective.sign() > 0) {
    out.status = LpStatus::Infeasible;
    out.objective = tab.objective;
    out.y.resize(m);
    for (size_t i = 0; i < m; ++i) {
      Scalar yi = Scalar(1) - tab.red[n + i];
      // rows were sign-flipped for b >= 0; undo on the certificate
      out.y[i] = p.b[i].sign() < 0 ? -yi : yi;
    }
    return out;
  }

  // evict artificials still basic at level zero; a row with no eligible
  // original column is a redundant constraint and can stay put harmlessly
  for (size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    for (size_t j = 0; j < n; ++j)
      if (tab.t[i][j].sign() != 0) {
        tab.pivot(i, j);
        break;
      }
  }

  // phase 2 on the real objective
  tab.cost.assign(n + m, Scalar(0));
  for (size_t j = 0; j < n; ++j) tab.cost[j] = p.c[j];
  tab.computeReduced();
  while (tab.step(false)) {
  }
  if (tab.unbounded) {
    out.status = LpStatus::Unbounded;
    return out;
  }

  out.status = LpStatus::Optimal;
  out.objective = tab.objective;
  out.x.assign(n, Scalar(0));
  for (size_t i = 0; i < m; ++i)
    if (tab.basis[i] < n) out.x[tab.basis[i]] = tab.rhs[i];
  out.y.resize(m);
  for (size_t i = 0; i < m; ++i) {
    Scalar yi = -tab.red[n + i];
    out.y[i] = p.b[i].sign() < 0 ? -yi : yi;
  }
  return out;
}

LpSolution solveFeasibility(const std::vector<std::vector<Scalar>>& A,
                            const std::vector<Scalar>& b) {
  LpProblem p;
  p.A = A;
  p.b = b;
  p.c.assign(A.empty() ? 0 : A.front().size(), Scalar(0));
  return solveLp(p);
}

}  // namespace fusion
