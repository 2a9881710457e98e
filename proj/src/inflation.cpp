#include "fusion/inflation.hpp"

#include "fusion/lp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace fusion {

namespace {

// --- instance declarations ---------------------------------------------------

std::vector<int> composePerm(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
  return r;
}

std::vector<std::vector<int>> closeGroup(std::vector<std::vector<int>> gens) {
  size_t n = gens.empty() ? 0 : gens[0].size();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> group{id};
  for (size_t i = 0; i < group.size(); ++i)
    for (auto& g : gens) {
      auto h = composePerm(g, group[i]);
      if (seen.insert(h).second) group.push_back(std::move(h));
    }
  return group;
}

std::vector<int> swaps(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (auto [i, j] : pairs) std::swap(p[i], p[j]);
  return p;
}

// B feeds A and C; sources gamma on (A,B) and alpha on (B,C); B interrupted.
// Counterfactual responses A_{b#}, C_{b#}; inflated slots carry the source
// copy: A^i_{b#} reads gamma copy i, C^j_{b#} reads alpha copy j, B^{ij}
// reads both.
InflationInstance evansInstance() {
  InflationInstance inst;
  inst.scenarioId = "evans-uc-swig";
  inst.vars = {"A0_0", "A0_1", "A1_0", "A1_1", "B00", "B10",
               "B01",  "B11",  "C0_0", "C0_1", "C1_0", "C1_1"};
  inst.marks = {"B#"};
  auto gammaSwap = swaps(12, {{0, 2}, {1, 3}, {4, 5}, {6, 7}});
  auto alphaSwap = swaps(12, {{4, 6}, {5, 7}, {8, 10}, {9, 11}});
  inst.symmetry = closeGroup({gammaSwap, alphaSwap});
  // diagonal worlds: copy 0 of both sources with response slot b0#, copy 1
  // with b1#; the pinned marginal factorizes into the two table entries
  for (int m0 = 0; m0 < 2; ++m0)
    for (int m1 = 0; m1 < 2; ++m1)
      for (int a0 = 0; a0 < 2; ++a0)
        for (int a1 = 0; a1 < 2; ++a1)
          for (int b0 = 0; b0 < 2; ++b0)
            for (int b1 = 0; b1 < 2; ++b1)
              for (int c0 = 0; c0 < 2; ++c0)
                for (int c1 = 0; c1 < 2; ++c1) {
                  ProductConstraint pc;
                  pc.cell = {{0 + m0, a0}, {2 + m1, a1}, {4, b0},
                             {7, b1},      {8 + m0, c0}, {10 + m1, c1}};
                  pc.left = extAtom({{"A", a0}, {"B", b0}, {"C", c0}, {"B#", m0}});
                  pc.right = extAtom({{"A", a1}, {"B", b1}, {"C", c1}, {"B#", m1}});
                  inst.constraints.push_back(std::move(pc));
                }
  return inst;
}

// chain A -> B -> C with sources gamma on (A,B) and alpha on (A,C); A and B
// interrupted.  A^{ij} reads gamma copy i and alpha copy j, B^i_{a#} reads
// gamma copy i, C^j_{b#} reads alpha copy j.
InflationInstance bilocalInstance() {
  InflationInstance inst;
  inst.scenarioId = "bilocal-swig";
  inst.vars = {"A00",  "A10",  "A01",  "A11",  "B0_0", "B0_1",
               "B1_0", "B1_1", "C0_0", "C0_1", "C1_0", "C1_1"};
  inst.marks = {"A#", "B#"};
  auto gammaSwap = swaps(12, {{0, 1}, {2, 3}, {4, 6}, {5, 7}});
  auto alphaSwap = swaps(12, {{0, 2}, {1, 3}, {8, 10}, {9, 11}});
  inst.symmetry = closeGroup({gammaSwap, alphaSwap});
  for (int ma0 = 0; ma0 < 2; ++ma0)
    for (int ma1 = 0; ma1 < 2; ++ma1)
      for (int mb0 = 0; mb0 < 2; ++mb0)
        for (int mb1 = 0; mb1 < 2; ++mb1)
          for (int a0 = 0; a0 < 2; ++a0)
            for (int a1 = 0; a1 < 2; ++a1)
              for (int b0 = 0; b0 < 2; ++b0)
                for (int b1 = 0; b1 < 2; ++b1)
                  for (int c0 = 0; c0 < 2; ++c0)
                    for (int c1 = 0; c1 < 2; ++c1) {
                      ProductConstraint pc;
                      pc.cell = {{0, a0},        {3, a1},       {4 + ma0, b0},
                                 {6 + ma1, b1},  {8 + mb0, c0}, {10 + mb1, c1}};
                      pc.left = extAtom(
                          {{"A", a0}, {"B", b0}, {"C", c0}, {"A#", ma0}, {"B#", mb0}});
                      pc.right = extAtom(
                          {{"A", a1}, {"B", b1}, {"C", c1}, {"A#", ma1}, {"B#", mb1}});
                      inst.constraints.push_back(std::move(pc));
                    }
  return inst;
}

// --- joint indexing -----------------------------------------------------------

size_t applyPerm(const std::vector<int>& perm, size_t idx) {
  size_t out = 0;
  for (size_t s = 0; s < perm.size(); ++s)
    if (idx >> s & 1) out |= size_t(1) << perm[s];
  return out;
}

bool matchesCell(const ProductConstraint& pc, size_t idx) {
  for (auto [slot, val] : pc.cell)
    if (int(idx >> slot & 1) != val) return false;
  return true;
}

struct Orbits {
  std::vector<int> orbitOf;               // joint index -> column
  std::vector<std::vector<size_t>> members;  // column -> joint indices
};

Orbits computeOrbits(const InflationInstance& inst) {
  Orbits o;
  size_t n = inst.jointSize();
  o.orbitOf.assign(n, -1);
  for (size_t i = 0; i < n; ++i) {
    if (o.orbitOf[i] >= 0) continue;
    int col = int(o.members.size());
    std::set<size_t> orb;
    for (auto& g : inst.symmetry) orb.insert(applyPerm(g, i));
    o.members.emplace_back(orb.begin(), orb.end());
    for (size_t j : o.members.back()) o.orbitOf[j] = col;
  }
  return o;
}

void checkSignature(const InflationInstance& inst, const DataTable& q) {
  std::set<std::string> given;
  for (auto& v : q.given()) given.insert(v.name);
  if (given != std::set<std::string>(inst.marks.begin(), inst.marks.end()))
    throw SignatureMismatch("table marks do not match scenario " + inst.scenarioId);
  for (auto name : {"A", "B", "C"})
    if (!q.hasVar(name) || q.card(name) != 2)
      throw SignatureMismatch(std::string("expected binary outcome variable ") + name);
}

std::vector<Scalar> constraintValues(const InflationInstance& inst, const DataTable& q) {
  WitnessInput in;
  in.extended = &q;
  std::vector<Scalar> rhs;
  rhs.reserve(inst.constraints.size());
  for (auto& pc : inst.constraints)
    rhs.push_back(atomValue(pc.left, in) * atomValue(pc.right, in));
  return rhs;
}

// --- linear systems -----------------------------------------------------------

// equality system A x = b, x >= 0; rowConstraint maps rows back to product
// constraints (-1 for the normalization row and consumed symmetry rows)
struct System {
  std::vector<std::vector<Scalar>> A;
  std::vector<Scalar> b;
  std::vector<long> rowConstraint;
};

std::string rowKey(const std::vector<Scalar>& row, const Scalar& rhs) {
  std::ostringstream os;
  for (auto& v : row) os << v.str() << ';';
  os << '|' << rhs.str();
  return os.str();
}

// one column per symmetry orbit carrying the total orbit mass; a symmetric
// joint assigns each member mass w/|orbit|
System collapsedSystem(const InflationInstance& inst, const Orbits& orbits,
                       const std::vector<Scalar>& rhs) {
  System sys;
  size_t cols = orbits.members.size();
  std::set<std::string> seen;
  for (size_t k = 0; k < inst.constraints.size(); ++k) {
    std::vector<Scalar> row(cols, Scalar(0));
    for (size_t col = 0; col < cols; ++col) {
      long count = 0;
      for (size_t idx : orbits.members[col])
        if (matchesCell(inst.constraints[k], idx)) ++count;
      if (count) row[col] = Scalar(Rat(count, long(orbits.members[col].size())));
    }
    if (!seen.insert(rowKey(row, rhs[k])).second) continue;
    sys.A.push_back(std::move(row));
    sys.b.push_back(rhs[k]);
    sys.rowConstraint.push_back(long(k));
  }
  sys.A.emplace_back(cols, Scalar(1));
  sys.b.push_back(Scalar(1));
  sys.rowConstraint.push_back(-1);
  return sys;
}

// full-joint system with explicit pairwise symmetry rows, reduced by generic
// aliasing presolve (x_i = x_j rows folded by union-find, duplicates dropped)
System explicitSystem(const InflationInstance& inst, const std::vector<Scalar>& rhs,
                      std::vector<int>& rootOf) {
  size_t n = inst.jointSize();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  for (auto& g : inst.symmetry)
    for (size_t i = 0; i < n; ++i) parent[find(int(i))] = find(int(applyPerm(g, i)));
  std::map<int, int> colOf;
  rootOf.assign(n, -1);
  for (size_t i = 0; i < n; ++i) {
    int r = find(int(i));
    if (!colOf.count(r)) colOf[r] = int(colOf.size());
    rootOf[i] = colOf[r];
  }
  size_t cols = colOf.size();
  System sys;
  std::set<std::string> seen;
  auto push = [&](std::vector<Scalar> row, Scalar b, long which) {
    if (!seen.insert(rowKey(row, b)).second) return;
    sys.A.push_back(std::move(row));
    sys.b.push_back(std::move(b));
    sys.rowConstraint.push_back(which);
  };
  for (size_t k = 0; k < inst.constraints.size(); ++k) {
    std::vector<Scalar> row(cols, Scalar(0));
    for (size_t i = 0; i < n; ++i)
      if (matchesCell(inst.constraints[k], i)) row[rootOf[i]] += Scalar(1);
    push(std::move(row), rhs[k], long(k));
  }
  std::vector<Scalar> norm(cols, Scalar(0));
  for (size_t i = 0; i < n; ++i) norm[rootOf[i]] += Scalar(1);
  push(std::move(norm), Scalar(1), -1);
  return sys;
}

// --- floating-point presolve ----------------------------------------------

struct FloatVerdict {
  bool decided = false;
  bool feasible = false;
  std::vector<double> x, y;
};

// dense phase-1 simplex on A x = b, x >= 0 (doubles; guidance only)
FloatVerdict floatFeasibility(const std::vector<std::vector<double>>& A,
                              std::vector<double> b) {
  size_t m = A.size(), n = m ? A[0].size() : 0;
  std::vector<std::vector<double>> T(m + 1, std::vector<double>(n + m + 1, 0.0));
  for (size_t i = 0; i < m; ++i) {
    double s = b[i] < 0 ? -1.0 : 1.0;
    for (size_t j = 0; j < n; ++j) T[i][j] = s * A[i][j];
    T[i][n + i] = 1.0;
    T[i][n + m] = s * b[i];
  }
  for (size_t j = 0; j <= n + m; ++j) {
    double s = 0;
    for (size_t i = 0; i < m; ++i) s += T[i][j];
    T[m][j] = (j >= n && j < n + m) ? 0.0 : -s;  // reduced costs of phase-1
  }
  std::vector<size_t> basis(m);
  std::iota(basis.begin(), basis.end(), n);
  size_t maxIter = 40 * (m + n) + 4000;
  for (size_t iter = 0; iter < maxIter; ++iter) {
    size_t enter = n + m;
    double best = -1e-9;
    bool bland = iter > maxIter / 2;
    for (size_t j = 0; j < n + m; ++j) {
      if (T[m][j] < best) {
        best = T[m][j];
        enter = j;
        if (bland) break;
      }
    }
    if (enter == n + m) break;
    size_t leave = m;
    double bestRatio = 0;
    for (size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 1e-11) continue;
      double r = T[i][n + m] / T[i][enter];
      if (leave == m || r < bestRatio - 1e-12) {
        leave = i;
        bestRatio = r;
      }
    }
    if (leave == m) break;  // numerically unbounded; bail to exact path
    double piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      double f = T[i][enter];
      if (f == 0) continue;
      for (size_t j = 0; j <= n + m; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  FloatVerdict v;
  double obj = 0;
  for (size_t i = 0; i < m; ++i)
    if (basis[i] >= n) obj += T[i][n + m];
  v.x.assign(n, 0.0);
  for (size_t i = 0; i < m; ++i)
    if (basis[i] < n) v.x[basis[i]] = T[i][n + m];
  v.y.assign(m, 0.0);
  for (size_t i = 0; i < m; ++i) v.y[i] = (b[i] < 0 ? -1.0 : 1.0) * (1.0 - T[m][n + i]);
  if (obj < 1e-8) {
    v.decided = v.feasible = true;
  } else {
    // sanity-check the Farkas direction before trusting the support
    double worst = 0, val = 0;
    for (size_t j = 0; j < n; ++j) {
      double s = 0;
      for (size_t i = 0; i < m; ++i) s += v.y[i] * A[i][j];
      worst = std::max(worst, s);
    }
    for (size_t i = 0; i < m; ++i) val += v.y[i] * b[i];
    if (worst < 1e-6 && val > 1e-7) {
      v.decided = true;
      v.feasible = false;
    }
  }
  return v;
}

double approx(const Scalar& s) {
  return double(s.rational()) + std::sqrt(2.0) * double(s.radical());
}

// --- exact solving with float guidance -------------------------------------

struct CoreResult {
  bool feasible = false;
  std::vector<Scalar> x;           // feasible point in system columns
  std::vector<Scalar> dualByRow;   // Farkas weights, one per system row
};

bool verifyPoint(const System& sys, const std::vector<Scalar>& x) {
  for (auto& v : x)
    if (v.sign() < 0) return false;
  for (size_t i = 0; i < sys.A.size(); ++i) {
    Scalar s(0);
    for (size_t j = 0; j < x.size(); ++j) s += sys.A[i][j] * x[j];
    if (!(s == sys.b[i])) return false;
  }
  return true;
}

// exact feasibility restricted to a column subset; a solution extends by
// zeros, so success certifies the full system
bool tryColumns(const System& sys, const std::vector<size_t>& colSet, CoreResult& out) {
  LpProblem p;
  p.b = sys.b;
  p.A.assign(sys.A.size(), {});
  for (size_t i = 0; i < sys.A.size(); ++i)
    for (size_t j : colSet) p.A[i].push_back(sys.A[i][j]);
  p.c.assign(colSet.size(), Scalar(0));
  auto sol = solveLp(p);
  if (sol.status != LpStatus::Optimal) return false;
  out.feasible = true;
  out.x.assign(sys.A[0].size(), Scalar(0));
  for (size_t j = 0; j < colSet.size(); ++j) out.x[colSet[j]] = sol.x[j];
  return true;
}

// exact feasibility restricted to a row subset; a Farkas vector pads with
// zeros, so infeasibility certifies the full system
bool tryRows(const System& sys, const std::vector<size_t>& rowSet, CoreResult& out) {
  LpProblem p;
  for (size_t i : rowSet) {
    p.A.push_back(sys.A[i]);
    p.b.push_back(sys.b[i]);
  }
  p.c.assign(sys.A[0].size(), Scalar(0));
  auto sol = solveLp(p);
  if (sol.status != LpStatus::Infeasible) return false;
  out.feasible = false;
  out.dualByRow.assign(sys.A.size(), Scalar(0));
  for (size_t r = 0; r < rowSet.size(); ++r) out.dualByRow[rowSet[r]] = sol.y[r];
  return true;
}

CoreResult solveCore(const System& sys, bool floatPresolve) {
  size_t m = sys.A.size(), n = sys.A[0].size();
  CoreResult out;
  if (floatPresolve) {
    std::vector<std::vector<double>> Ad(m, std::vector<double>(n));
    std::vector<double> bd(m);
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < n; ++j) Ad[i][j] = approx(sys.A[i][j]);
      bd[i] = approx(sys.b[i]);
    }
    auto fv = floatFeasibility(Ad, bd);
    if (fv.decided && fv.feasible) {
      // snap the float point first; fall back to an exact restricted LP
      for (long den : {128L, 4096L, 1L << 20}) {
        std::vector<Scalar> x(n, Scalar(0));
        bool ok = true;
        for (size_t j = 0; j < n && ok; ++j) {
          if (std::abs(fv.x[j]) < 1e-12) continue;
          auto s = Scalar::snap(fv.x[j], den, 1e-7);
          if (!s) ok = false;
          else x[j] = *s;
        }
        if (ok && verifyPoint(sys, x)) {
          out.feasible = true;
          out.x = std::move(x);
          return out;
        }
      }
      std::vector<size_t> cols;
      for (size_t j = 0; j < n; ++j)
        if (fv.x[j] > 1e-11) cols.push_back(j);
      if (!cols.empty() && tryColumns(sys, cols, out)) return out;
    } else if (fv.decided) {
      std::vector<size_t> order(m);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](size_t a, size_t b) { return std::abs(fv.y[a]) > std::abs(fv.y[b]); });
      size_t k = 0;
      while (k < m && std::abs(fv.y[order[k]]) > 1e-9) ++k;
      for (size_t take = std::max<size_t>(k, 4); take < 2 * m; take *= 2) {
        std::vector<size_t> rows(order.begin(), order.begin() + std::min(take, m));
        if (tryRows(sys, rows, out)) return out;
        if (take >= m) break;
      }
    }
  }
  // exact fallback on the full system
  LpProblem p{sys.A, sys.b, std::vector<Scalar>(n, Scalar(0))};
  auto sol = solveLp(p);
  if (sol.status == LpStatus::Optimal) {
    out.feasible = true;
    out.x = sol.x;
  } else {
    out.feasible = false;
    out.dualByRow = sol.y;
  }
  return out;
}

InfeasibilityCertificate makeCertificate(const InflationInstance& inst, const System& sys,
                                         const std::vector<Scalar>& dualByRow,
                                         const std::vector<Scalar>& rhs) {
  InfeasibilityCertificate cert;
  cert.dual.assign(inst.constraints.size() + 1, Scalar(0));
  for (size_t i = 0; i < sys.rowConstraint.size(); ++i) {
    long k = sys.rowConstraint[i];
    cert.dual[k < 0 ? inst.constraints.size() : size_t(k)] += dualByRow[i];
  }
  cert.bound = cert.dual.back();
  for (size_t k = 0; k < inst.constraints.size(); ++k) cert.bound += cert.dual[k] * rhs[k];
  WitnessExpr w;
  w.key = inst.scenarioId + "-certificate";
  w.scenarioId = inst.scenarioId;
  w.cmp = Cmp::Leq;
  for (size_t k = 0; k < inst.constraints.size(); ++k) {
    if (cert.dual[k].sign() == 0) continue;
    Term t;
    t.coeff = cert.dual[k];
    t.factors = {inst.constraints[k].left, inst.constraints[k].right};
    w.terms.push_back(std::move(t));
  }
  if (cert.dual.back().sign() != 0) {
    Term t;
    t.coeff = cert.dual.back();
    w.terms.push_back(std::move(t));
  }
  cert.witness = std::move(w);
  return cert;
}

}  // namespace

InflationInstance buildInflation(const std::string& scenario, int order) {
  if (order != 2) throw UnsupportedOrder("only second-order inflation is implemented");
  if (scenario == "evans-uc-swig") return evansInstance();
  if (scenario == "bilocal-swig") return bilocalInstance();
  throw UnsupportedScenario("no inflation declared for scenario: " + scenario);
}

InflationResult solve(const InflationInstance& inst, const DataTable& q,
                      const InflationSolveOptions& opts) {
  checkSignature(inst, q);
  auto rhs = constraintValues(inst, q);
  InflationResult res;
  if (opts.explicitSymmetry) {
    std::vector<int> rootOf;
    auto sys = explicitSystem(inst, rhs, rootOf);
    auto core = solveCore(sys, opts.floatPresolve);
    if (core.feasible) {
      res.status = InflationStatus::Feasible;
      res.model.assign(inst.jointSize(), Scalar(0));
      for (size_t i = 0; i < res.model.size(); ++i) res.model[i] = core.x[rootOf[i]];
    } else {
      res.status = InflationStatus::Infeasible;
      res.cert = makeCertificate(inst, sys, core.dualByRow, rhs);
    }
    return res;
  }
  auto orbits = computeOrbits(inst);
  auto sys = collapsedSystem(inst, orbits, rhs);
  auto core = solveCore(sys, opts.floatPresolve);
  if (core.feasible) {
    res.status = InflationStatus::Feasible;
    res.model.assign(inst.jointSize(), Scalar(0));
    for (size_t i = 0; i < res.model.size(); ++i) {
      int col = orbits.orbitOf[i];
      res.model[i] = core.x[col] / Scalar(long(orbits.members[col].size()));
    }
  } else {
    res.status = InflationStatus::Infeasible;
    res.cert = makeCertificate(inst, sys, core.dualByRow, rhs);
  }
  return res;
}

WitnessExpr renderWitness(const InfeasibilityCertificate& cert) { return cert.witness; }

bool verifyCertificate(const InflationInstance& inst, const InfeasibilityCertificate& cert,
                       const DataTable& q) {
  if (cert.dual.size() != inst.constraints.size() + 1) return false;
  // the weighted constraint rows must be nonpositive on every symmetrized
  // column while the weighted right-hand sides exceed zero
  auto orbits = computeOrbits(inst);
  for (auto& members : orbits.members) {
    Scalar s = cert.dual.back() * Scalar(long(members.size()));
    for (size_t k = 0; k < inst.constraints.size(); ++k) {
      if (cert.dual[k].sign() == 0) continue;
      long count = 0;
      for (size_t idx : members)
        if (matchesCell(inst.constraints[k], idx)) ++count;
      if (count) s += cert.dual[k] * Scalar(count);
    }
    if (s.sign() > 0) return false;
  }
  auto rhs = constraintValues(inst, q);
  Scalar val = cert.dual.back();
  for (size_t k = 0; k < inst.constraints.size(); ++k) val += cert.dual[k] * rhs[k];
  return val.sign() > 0 && val == cert.bound;
}

bool verifyModel(const InflationInstance& inst, const DataTable& q,
                 const std::vector<Scalar>& model) {
  if (model.size() != inst.jointSize()) return false;
  for (auto& v : model)
    if (v.sign() < 0) return false;
  Scalar total(0);
  for (auto& v : model) total += v;
  if (!(total == Scalar(1))) return false;
  for (auto& g : inst.symmetry)
    for (size_t i = 0; i < model.size(); ++i)
      if (!(model[i] == model[applyPerm(g, i)])) return false;
  auto rhs = constraintValues(inst, q);
  for (size_t k = 0; k < inst.constraints.size(); ++k) {
    Scalar s(0);
    for (size_t i = 0; i < model.size(); ++i)
      if (matchesCell(inst.constraints[k], i)) s += model[i];
    if (!(s == rhs[k])) return false;
  }
  return true;
}

}  // namespace fusion
