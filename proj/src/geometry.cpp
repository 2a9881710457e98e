#include "fusion/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

namespace fusion {

namespace {

using boost::multiprecision::mpz_int;

std::vector<std::string> observedTopoOrder(const CausalGraph& g) {
  auto obs = g.observed();
  std::vector<std::string> order;
  std::set<std::string> placed;
  while (order.size() < obs.size()) {
    bool progress = false;
    for (auto& n : obs) {
      if (placed.count(n)) continue;
      bool ready = true;
      for (auto& p : g.parents(n))
        if (g.node(p).kind == NodeKind::Observed && !placed.count(p)) ready = false;
      if (ready) {
        order.push_back(n);
        placed.insert(n);
        progress = true;
      }
    }
    if (!progress) throw GeometryError("observed subgraph has a cycle");
  }
  return order;
}

std::vector<std::string> observedParents(const CausalGraph& g, const std::string& n) {
  std::vector<std::string> out;
  for (auto& p : g.parents(n))
    if (g.node(p).kind == NodeKind::Observed) out.push_back(p);
  return out;
}

std::string coordLabel(const Atom& a) {
  std::ostringstream os;
  os << "P(";
  bool first = true;
  for (auto& [k, v] : a.assign) {
    if (!first) os << ",";
    first = false;
    os << k << "=" << v;
  }
  if (!a.cut.empty()) {
    os << "|do(";
    first = true;
    for (auto& [k, v] : a.cut) {
      if (!first) os << ",";
      first = false;
      os << k << "=" << v;
    }
    os << ")";
  }
  os << ")";
  return os.str();
}

// realized observed values of one deterministic unpacked assignment under a cut
std::map<std::string, int> realize(const UnpackedSpec& spec, const std::vector<int>& assign,
                                   const DoKey& cut, const std::vector<std::string>& order) {
  std::map<std::string, int> val;
  for (auto& [t, v] : cut) val[t] = v;
  for (auto& n : order) {
    if (val.count(n)) continue;
    for (size_t k = 0; k < spec.copies.size(); ++k) {
      const auto& c = spec.copies[k];
      if (c.node != n) continue;
      bool match = true;
      for (size_t j = 0; j < c.parentNodes.size(); ++j)
        if (val.at(c.parentNodes[j]) != c.parentValues[j]) match = false;
      if (match) {
        val[n] = assign[k];
        break;
      }
    }
  }
  return val;
}

// --- exact vector helpers ---------------------------------------------------

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  Scalar s(0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].sign() != 0 && b[i].sign() != 0) s += a[i] * b[i];
  return s;
}

// positive scale making a rational row primitive-integer; irrational rows are
// scaled by the first nonzero magnitude instead
void normalizeRow(std::vector<Scalar>& a, Scalar& b) {
  bool rational = b.isRational();
  for (auto& v : a) rational = rational && v.isRational();
  if (rational) {
    mpz_int den = 1, num = 0;
    auto fold = [&](const Rat& r) {
      if (r == 0) return;
      den = lcm(den, denominator(r));
      num = gcd(num, numerator(r));
    };
    for (auto& v : a) fold(v.rational());
    fold(b.rational());
    if (num == 0) return;
    Scalar f{Rat(den, abs(num))};
    for (auto& v : a) v = v * f;
    b = b * f;
  } else {
    Scalar f(0);
    for (auto& v : a)
      if (v.sign() != 0) {
        f = Scalar(1) / abs(v);
        break;
      }
    if (f.sign() == 0 && b.sign() != 0) f = Scalar(1) / abs(b);
    for (auto& v : a) v = v * f;
    b = b * f;
  }
}

std::string rowKey(const std::vector<Scalar>& a, const Scalar& b) {
  std::ostringstream os;
  for (auto& v : a) os << v.str() << ";";
  os << "|" << b.str();
  return os.str();
}

// --- double description on a cone given in H-form ---------------------------

struct DDRay {
  std::vector<Scalar> v;
  std::vector<uint64_t> zero;  // bitset over processed constraints
};

bool zsubset(const std::vector<uint64_t>& x, const std::vector<uint64_t>& y) {
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] & ~y[i]) return false;
  return true;
}

void scaleRay(std::vector<Scalar>& v) {
  Scalar dummyB(0);
  normalizeRow(v, dummyB);
}

// extreme rays + lineality of {z : rows[k].z <= 0 for all k}
void ddCone(const std::vector<std::vector<Scalar>>& rows, std::vector<DDRay>& rays,
            std::vector<std::vector<Scalar>>& lineality) {
  const size_t dim = rows.empty() ? 0 : rows.front().size();
  const size_t words = (rows.size() + 63) / 64;
  lineality.clear();
  for (size_t i = 0; i < dim; ++i) {
    std::vector<Scalar> e(dim, Scalar(0));
    e[i] = Scalar(1);
    lineality.push_back(std::move(e));
  }
  rays.clear();

  for (size_t k = 0; k < rows.size(); ++k) {
    const auto& c = rows[k];
    // try to absorb the constraint into the lineality space
    size_t hit = lineality.size();
    for (size_t i = 0; i < lineality.size(); ++i)
      if (dot(c, lineality[i]).sign() != 0) {
        hit = i;
        break;
      }
    if (hit < lineality.size()) {
      auto u = lineality[hit];
      lineality.erase(lineality.begin() + hit);
      Scalar cu = dot(c, u);
      for (auto& w : lineality) {
        Scalar cw = dot(c, w);
        if (cw.sign() == 0) continue;
        Scalar f = cw / cu;
        for (size_t j = 0; j < dim; ++j) w[j] -= f * u[j];
      }
      for (auto& r : rays) {
        Scalar cr = dot(c, r.v);
        if (cr.sign() == 0) continue;
        Scalar f = cr / cu;
        for (size_t j = 0; j < dim; ++j) r.v[j] -= f * u[j];
        scaleRay(r.v);
      }
      // all old rays are now tight on k
      for (auto& r : rays) {
        r.zero.resize(words, 0);
        r.zero[k / 64] |= uint64_t(1) << (k % 64);
      }
      DDRay nr;
      nr.v = std::move(u);
      if (cu.sign() > 0)
        for (auto& x : nr.v) x = -x;
      scaleRay(nr.v);
      // lineality vectors are tight on every earlier constraint
      nr.zero.assign(words, 0);
      for (size_t j = 0; j < k; ++j) nr.zero[j / 64] |= uint64_t(1) << (j % 64);
      rays.push_back(std::move(nr));
      continue;
    }

    std::vector<DDRay> neg, zer, pos;
    for (auto& r : rays) {
      int s = dot(c, r.v).sign();
      if (s < 0)
        neg.push_back(std::move(r));
      else if (s == 0)
        zer.push_back(std::move(r));
      else
        pos.push_back(std::move(r));
    }
    for (auto& r : zer) {
      r.zero.resize(words, 0);
      r.zero[k / 64] |= uint64_t(1) << (k % 64);
    }
    std::vector<DDRay> next = neg;
    for (auto& r : next) r.zero.resize(words, 0);
    for (auto& z : zer) next.push_back(z);

    // adjacency: keep p,q only if no third ray's zero set covers theirs
    auto adjacent = [&](const DDRay& p, const DDRay& q) {
      std::vector<uint64_t> common(words, 0);
      size_t w = std::min(p.zero.size(), q.zero.size());
      for (size_t i = 0; i < w; ++i) common[i] = p.zero[i] & q.zero[i];
      auto covers = [&](const DDRay& o) {
        if (&o == &p || &o == &q) return false;
        std::vector<uint64_t> oz = o.zero;
        oz.resize(words, 0);
        return zsubset(common, oz);
      };
      for (auto& o : neg)
        if (covers(o)) return false;
      for (auto& o : zer)
        if (covers(o)) return false;
      for (auto& o : pos)
        if (covers(o)) return false;
      return true;
    };

    for (auto& p : pos)
      for (auto& q : neg) {
        if (!adjacent(p, q)) continue;
        Scalar cp = dot(c, p.v), cq = dot(c, q.v);
        DDRay nr;
        nr.v.resize(dim);
        for (size_t j = 0; j < dim; ++j) nr.v[j] = cp * q.v[j] - cq * p.v[j];
        scaleRay(nr.v);
        nr.zero.assign(words, 0);
        size_t w = std::min(p.zero.size(), q.zero.size());
        for (size_t i = 0; i < w; ++i) nr.zero[i] = p.zero[i] & q.zero[i];
        nr.zero[k / 64] |= uint64_t(1) << (k % 64);
        next.push_back(std::move(nr));
      }
    rays = std::move(next);
  }
}

// --- LP helpers over free variables and inequality rows ---------------------

// maximize obj.x subject to ineqs (a.x <= b) and eqs (a.x = b), x free.
// returns {bounded, optimum}
std::pair<bool, Scalar> maximize(const std::vector<Scalar>& obj,
                                 const std::vector<LinearIneq>& ineqs,
                                 const std::vector<LinearIneq>& eqs) {
  size_t d = obj.size(), ni = ineqs.size();
  LpProblem p;
  size_t cols = 2 * d + ni;  // x = u - w, slack s per inequality
  for (auto& row : ineqs) {
    std::vector<Scalar> r(cols, Scalar(0));
    for (size_t j = 0; j < d; ++j) {
      r[j] = row.a[j];
      r[d + j] = -row.a[j];
    }
    r[2 * d + (&row - ineqs.data())] = Scalar(1);
    p.A.push_back(std::move(r));
    p.b.push_back(row.b);
  }
  for (auto& row : eqs) {
    std::vector<Scalar> r(cols, Scalar(0));
    for (size_t j = 0; j < d; ++j) {
      r[j] = row.a[j];
      r[d + j] = -row.a[j];
    }
    p.A.push_back(std::move(r));
    p.b.push_back(row.b);
  }
  p.c.assign(cols, Scalar(0));
  for (size_t j = 0; j < d; ++j) {
    p.c[j] = -obj[j];
    p.c[d + j] = obj[j];
  }
  auto s = solveLp(p);
  if (s.status == LpStatus::Unbounded) return {false, Scalar(0)};
  if (s.status == LpStatus::Infeasible) throw GeometryError("redundancy LP infeasible");
  return {true, -s.objective};
}

void dropRedundant(std::vector<LinearIneq>& ineqs, const std::vector<LinearIneq>& eqs) {
  // syntactic pass first
  std::set<std::string> seen;
  std::vector<LinearIneq> kept;
  for (auto& r : ineqs) {
    LinearIneq n = r;
    normalizeRow(n.a, n.b);
    bool zero = true;
    for (auto& v : n.a) zero = zero && v.sign() == 0;
    if (zero) {
      if (n.b.sign() < 0) throw GeometryError("inconsistent system in projection");
      continue;
    }
    if (seen.insert(rowKey(n.a, n.b)).second) kept.push_back(std::move(n));
  }
  // exact LP pass
  std::vector<LinearIneq> out;
  for (size_t i = 0; i < kept.size(); ++i) {
    std::vector<LinearIneq> others = out;
    for (size_t j = i + 1; j < kept.size(); ++j) others.push_back(kept[j]);
    auto [bounded, best] = maximize(kept[i].a, others, eqs);
    if (bounded && best <= kept[i].b) continue;
    out.push_back(kept[i]);
  }
  ineqs = std::move(out);
}

}  // namespace

long UnpackedSpec::assignments() const {
  long n = 1;
  for (auto& c : copies) n *= c.card;
  return n;
}

std::vector<Scalar> UnpackedSpec::project(const std::vector<int>& assignment) const {
  auto order = observedTopoOrder(graph);
  std::vector<Scalar> out(coords.size(), Scalar(0));
  std::map<DoKey, std::map<std::string, int>> cache;
  for (size_t i = 0; i < coords.size(); ++i) {
    const Atom& at = coords[i];
    auto it = cache.find(at.cut);
    if (it == cache.end())
      it = cache.emplace(at.cut, realize(*this, assignment, at.cut, order)).first;
    bool match = true;
    for (auto& [k, v] : at.assign)
      if (it->second.at(k) != v) match = false;
    if (match) out[i] = Scalar(1);
  }
  return out;
}

UnpackedSpec unpack(const CausalGraph& g, const std::vector<TableQuery>& queries) {
  if (g.latents().size() > 1)
    throw MultipleLatentComponents("unpacking needs a single latent source");
  UnpackedSpec spec;
  spec.graph = g;
  spec.queries = queries;
  for (auto& n : observedTopoOrder(g)) {
    auto pa = observedParents(g, n);
    std::vector<int> cards;
    long combos = 1;
    for (auto& p : pa) {
      cards.push_back(g.node(p).card);
      combos *= cards.back();
    }
    for (long t = 0; t < combos; ++t) {
      UnpackedSpec::Copy c;
      c.node = n;
      c.parentNodes = pa;
      long rest = t;
      for (size_t j = 0; j < pa.size(); ++j) {
        c.parentValues.push_back(int(rest % cards[j]));
        rest /= cards[j];
      }
      c.card = g.node(n).card;
      spec.copies.push_back(std::move(c));
    }
  }
  for (auto& q : queries) {
    std::vector<int> cards;
    long combos = 1;
    for (auto& v : q.outcomes) {
      cards.push_back(g.node(v).card);
      combos *= cards.back();
    }
    for (long t = 0; t < combos; ++t) {
      std::map<std::string, int> assign;
      long rest = t;
      for (size_t j = 0; j < q.outcomes.size(); ++j) {
        assign[q.outcomes[j]] = int(rest % cards[j]);
        rest /= cards[j];
      }
      Atom a = q.cut.empty() ? obsAtom(assign) : doAtom(q.cut, assign);
      spec.labels.push_back(coordLabel(a));
      spec.coords.push_back(std::move(a));
    }
  }
  return spec;
}

Polyhedron vertices(const UnpackedSpec& spec) {
  Polyhedron out;
  out.labels = spec.labels;
  std::set<std::vector<Scalar>> seen;
  long n = spec.assignments();
  std::vector<int> a(spec.copies.size(), 0);
  for (long t = 0; t < n; ++t) {
    long rest = t;
    for (size_t j = 0; j < spec.copies.size(); ++j) {
      a[j] = int(rest % spec.copies[j].card);
      rest /= spec.copies[j].card;
    }
    auto v = spec.project(a);
    if (seen.insert(v).second) out.verts.push_back(std::move(v));
  }
  return out;
}

MembershipCertificate lpMembership(const std::vector<Scalar>& point, const Polyhedron& poly) {
  const size_t d = poly.labels.size();
  if (point.size() != d) throw DimensionMismatch("point dimension != polytope dimension");
  LpProblem p;
  const size_t nv = poly.verts.size();
  p.A.assign(d + 1, std::vector<Scalar>(nv, Scalar(0)));
  for (size_t j = 0; j < nv; ++j) {
    for (size_t i = 0; i < d; ++i) p.A[i][j] = poly.verts[j][i];
    p.A[d][j] = Scalar(1);
  }
  p.b = point;
  p.b.push_back(Scalar(1));
  p.c.assign(nv, Scalar(0));
  auto s = solveLp(p);
  MembershipCertificate cert;
  if (s.status == LpStatus::Optimal) {
    cert.feasible = true;
    cert.weights = s.x;
  } else {
    cert.feasible = false;
    cert.plane.assign(s.y.begin(), s.y.begin() + d);
    cert.planeRhs = -s.y[d];
  }
  return cert;
}

std::vector<LinearIneq> hullEqualities(const Polyhedron& poly) {
  std::vector<LinearIneq> eqs;
  if (poly.verts.empty()) return eqs;
  const size_t d = poly.labels.size();
  // row space of the differences; its orthogonal complement gives the hull
  std::vector<std::vector<Scalar>> rows;
  for (size_t k = 1; k < poly.verts.size(); ++k) {
    std::vector<Scalar> r(d);
    for (size_t j = 0; j < d; ++j) r[j] = poly.verts[k][j] - poly.verts[0][j];
    rows.push_back(std::move(r));
  }
  // gaussian elimination to echelon form, tracking pivot columns
  std::vector<size_t> pivots;
  size_t rank = 0;
  for (size_t col = 0; col < d && rank < rows.size(); ++col) {
    size_t sel = rows.size();
    for (size_t i = rank; i < rows.size(); ++i)
      if (rows[i][col].sign() != 0) {
        sel = i;
        break;
      }
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col].sign() == 0) continue;
      Scalar f = rows[i][col] / rows[rank][col];
      for (size_t j = 0; j < d; ++j) rows[i][j] -= f * rows[rank][j];
    }
    pivots.push_back(col);
    ++rank;
  }
  // for each non-pivot column, one normal vector orthogonal to all rows
  std::set<size_t> pivotSet(pivots.begin(), pivots.end());
  for (size_t free = 0; free < d; ++free) {
    if (pivotSet.count(free)) continue;
    std::vector<Scalar> nvec(d, Scalar(0));
    nvec[free] = Scalar(1);
    for (size_t i = 0; i < rank; ++i) {
      // rows echelon: coefficient on pivot var solving row . nvec = 0
      nvec[pivots[i]] = -rows[i][free] / rows[i][pivots[i]];
    }
    LinearIneq e;
    e.a = std::move(nvec);
    e.b = dot(e.a, poly.verts[0]);
    normalizeRow(e.a, e.b);
    eqs.push_back(std::move(e));
  }
  return eqs;
}

Polyhedron facets(const Polyhedron& vForm) {
  Polyhedron out;
  out.labels = vForm.labels;
  out.verts = vForm.verts;
  const size_t d = vForm.labels.size();
  std::vector<std::vector<Scalar>> rows;
  for (auto& v : vForm.verts) {
    std::vector<Scalar> r = v;
    r.push_back(Scalar(1));
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end());  // deterministic insertion order
  std::vector<DDRay> rays;
  std::vector<std::vector<Scalar>> lin;
  ddCone(rows, rays, lin);
  for (auto& u : lin) {
    LinearIneq e;
    e.a.assign(u.begin(), u.begin() + d);
    e.b = -u[d];
    bool zero = true;
    for (auto& x : e.a) zero = zero && x.sign() == 0;
    if (zero) continue;
    normalizeRow(e.a, e.b);
    out.eqs.push_back(std::move(e));
  }
  std::set<std::string> seen;
  for (auto& r : rays) {
    LinearIneq q;
    q.a.assign(r.v.begin(), r.v.begin() + d);
    q.b = -r.v[d];
    bool zero = true;
    for (auto& x : q.a) zero = zero && x.sign() == 0;
    if (zero) continue;  // 0.x <= const carries no facet
    normalizeRow(q.a, q.b);
    if (seen.insert(rowKey(q.a, q.b)).second) out.ineqs.push_back(std::move(q));
  }
  return out;
}

Polyhedron fourierMotzkin(const Polyhedron& hForm, const std::vector<std::string>& eliminate) {
  std::vector<LinearIneq> ineqs = hForm.ineqs, eqs = hForm.eqs;
  std::vector<std::string> labels = hForm.labels;
  const long budget = 10000000;

  for (auto& victim : eliminate) {
    auto pos = std::find(labels.begin(), labels.end(), victim);
    if (pos == labels.end()) throw GeometryError("unknown coordinate: " + victim);
    size_t col = size_t(pos - labels.begin());

    auto drop = [&](std::vector<Scalar>& a) { a.erase(a.begin() + col); };

    // prefer gaussian substitution through an equality
    size_t eqHit = eqs.size();
    for (size_t i = 0; i < eqs.size(); ++i)
      if (eqs[i].a[col].sign() != 0) {
        eqHit = i;
        break;
      }
    if (eqHit < eqs.size()) {
      LinearIneq sub = eqs[eqHit];
      eqs.erase(eqs.begin() + eqHit);
      auto apply = [&](LinearIneq& r) {
        if (r.a[col].sign() == 0) {
          drop(r.a);
          return;
        }
        Scalar f = r.a[col] / sub.a[col];
        for (size_t j = 0; j < r.a.size(); ++j) r.a[j] -= f * sub.a[j];
        r.b -= f * sub.b;
        drop(r.a);
      };
      for (auto& r : ineqs) apply(r);
      for (auto& r : eqs) apply(r);
    } else {
      std::vector<LinearIneq> posr, negr, zer;
      for (auto& r : ineqs) {
        int s = r.a[col].sign();
        (s > 0 ? posr : s < 0 ? negr : zer).push_back(r);
      }
      std::vector<LinearIneq> next;
      for (auto& r : zer) {
        drop(r.a);
        next.push_back(std::move(r));
      }
      if (long(posr.size()) * long(negr.size()) > budget)
        throw BudgetExceeded("projection row budget exceeded");
      for (auto& p : posr)
        for (auto& q : negr) {
          LinearIneq r;
          r.a.resize(p.a.size());
          Scalar cp = p.a[col], cq = -q.a[col];
          for (size_t j = 0; j < p.a.size(); ++j) r.a[j] = cq * p.a[j] + cp * q.a[j];
          r.b = cq * p.b + cp * q.b;
          drop(r.a);
          next.push_back(std::move(r));
        }
      ineqs = std::move(next);
      for (auto& r : eqs) drop(r.a);
    }
    labels.erase(labels.begin() + col);
    dropRedundant(ineqs, eqs);
  }

  Polyhedron out;
  out.labels = labels;
  out.ineqs = std::move(ineqs);
  out.eqs = std::move(eqs);
  return out;
}

std::vector<std::vector<int>> symmetricGroup(int k) {
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

bool atomLess(const Atom& x, const Atom& y) {
  if (x.kind != y.kind) return x.kind < y.kind;
  if (x.cut != y.cut) return x.cut < y.cut;
  return x.assign < y.assign;
}

}  // namespace

std::vector<std::vector<size_t>> outcomeRelabelings(
    const std::vector<Atom>& coords,
    const std::map<std::string, std::vector<std::vector<int>>>& varPerms) {
  std::map<Atom, size_t, bool (*)(const Atom&, const Atom&)> index(atomLess);
  for (size_t i = 0; i < coords.size(); ++i) index[coords[i]] = i;

  std::vector<std::map<std::string, std::vector<int>>> combos = {{}};
  for (auto& [var, perms] : varPerms) {
    std::vector<std::map<std::string, std::vector<int>>> next;
    for (auto& c : combos)
      for (auto& p : perms) {
        auto c2 = c;
        c2[var] = p;
        next.push_back(std::move(c2));
      }
    combos = std::move(next);
  }

  std::vector<std::vector<size_t>> group;
  for (auto& combo : combos) {
    std::vector<size_t> perm(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) {
      Atom a = coords[i];
      for (auto& [k, v] : a.assign) {
        auto it = combo.find(k);
        if (it != combo.end()) v = it->second[v];
      }
      for (auto& [k, v] : a.cut) {
        auto it = combo.find(k);
        if (it != combo.end()) v = it->second[v];
      }
      auto it = index.find(a);
      if (it == index.end()) throw GeometryError("relabeling leaves the coordinate set");
      perm[i] = it->second;
    }
    group.push_back(std::move(perm));
  }
  return group;
}

std::string canonicalize(const LinearIneq& ineq, const std::vector<LinearIneq>& eqs,
                         const std::vector<std::vector<size_t>>& group) {
  const size_t d = ineq.a.size();
  // reduced echelon form of the equality system, once
  std::vector<std::vector<Scalar>> rref;
  std::vector<size_t> pivots;
  for (auto& e : eqs) {
    std::vector<Scalar> r = e.a;
    r.push_back(e.b);
    rref.push_back(std::move(r));
  }
  size_t rank = 0;
  for (size_t col = 0; col < d && rank < rref.size(); ++col) {
    size_t sel = rref.size();
    for (size_t i = rank; i < rref.size(); ++i)
      if (rref[i][col].sign() != 0) {
        sel = i;
        break;
      }
    if (sel == rref.size()) continue;
    std::swap(rref[rank], rref[sel]);
    Scalar inv = Scalar(1) / rref[rank][col];
    for (auto& x : rref[rank]) x = x * inv;
    for (size_t i = 0; i < rref.size(); ++i) {
      if (i == rank || rref[i][col].sign() == 0) continue;
      Scalar f = rref[i][col];
      for (size_t j = 0; j <= d; ++j) rref[i][j] -= f * rref[rank][j];
    }
    pivots.push_back(col);
    ++rank;
  }

  auto reduced = [&](std::vector<Scalar> a, Scalar b) {
    for (size_t i = 0; i < rank; ++i) {
      Scalar f = a[pivots[i]];
      if (f.sign() == 0) continue;
      for (size_t j = 0; j < d; ++j) a[j] -= f * rref[i][j];
      b -= f * rref[i][d];
    }
    normalizeRow(a, b);
    return rowKey(a, b);
  };

  std::string best;
  for (auto& perm : group) {
    std::vector<Scalar> a(d, Scalar(0));
    for (size_t i = 0; i < d; ++i) a[perm[i]] = ineq.a[i];
    std::string key = reduced(std::move(a), ineq.b);
    if (best.empty() || key < best) best = std::move(key);
  }
  return best;
}

}  // namespace fusion
