#include "fusion/ett.hpp"

#include <algorithm>
#include <sstream>

namespace fusion {

namespace {

struct Extender {
  const CausalGraph& swig;
  const HybridDataset& data;
  const std::vector<std::string>& targets;
  std::map<std::string, int> markValue; // target -> current mark value

  // does the mark of `target` point at any variable in S?
  bool markActive(const std::string& target, const std::map<std::string, int>& s) const {
    for (auto& c : swig.children(markName(target)))
      if (s.count(c)) return true;
    return false;
  }

  // Q(S = s | marks), defined by peeling mismatched targets one at a time:
  //   Q(.., X=x, .. | X#=v)  =  Q(.. , .. | X#=v) - Q(.., X=v, .. | X#=v)
  // until every interrupted variable present in S carries its mark's value,
  // at which point the event is answered by an observational or single-cut
  // post-intervention marginal.
  Scalar value(std::map<std::string, int> s) const {
    for (auto& t : targets) {
      auto it = s.find(t);
      if (it == s.end() || it->second == markValue.at(t)) continue;
      std::map<std::string, int> without = s;
      without.erase(t);
      std::map<std::string, int> matched = s;
      matched[t] = markValue.at(t);
      return value(std::move(without)) - value(std::move(matched));
    }
    // all targets in S agree with their marks; route to the right dataset
    std::vector<std::string> cut;
    for (auto& t : targets)
      if (!s.count(t) && markActive(t, s)) cut.push_back(t);
    if (cut.empty()) return data.observational.prob(s);
    DoKey key;
    for (auto& t : cut) key.emplace_back(t, markValue.at(t));
    std::sort(key.begin(), key.end());
    auto it = data.interventions.find(key);
    if (it == data.interventions.end()) {
      std::ostringstream msg;
      msg << "hybrid dataset is missing the post-intervention table for do(";
      for (size_t i = 0; i < key.size(); ++i)
        msg << (i ? ", " : "") << key[i].first << "=" << key[i].second;
      msg << ")";
      throw MissingTable(msg.str());
    }
    return it->second.prob(s);
  }
};

std::string entryLabel(const std::vector<Var>& vars, const std::vector<int>& out,
                       const std::vector<Var>& marks, const std::vector<int>& mv) {
  std::ostringstream os;
  os << "Q(";
  for (size_t i = 0; i < vars.size(); ++i) os << (i ? "," : "") << vars[i].name << "=" << out[i];
  os << " | ";
  for (size_t i = 0; i < marks.size(); ++i) os << (i ? "," : "") << marks[i].name << "=" << mv[i];
  os << ")";
  return os.str();
}

} // namespace

DataTable multiEttExtend(const CausalGraph& swig, const HybridDataset& data,
                         const std::vector<std::string>& targets) {
  for (auto& t : targets) {
    if (!swig.hasNode(markName(t)))
      throw GraphError("variable not interrupted in graph: " + t);
    if (swig.node(t).card != 2)
      throw TargetNotBinary("extension target must be binary: " + t);
  }
  for (size_t i = 0; i < targets.size(); ++i)
    for (size_t j = i + 1; j < targets.size(); ++j) {
      auto shared = sharedChildren(swig, markName(targets[i]), markName(targets[j]));
      if (!shared.empty())
        throw SharedChildrenNonEmpty(
            "interrupted variables " + targets[i] + ", " + targets[j] +
            " share the child " + *shared.begin() +
            "; the composed extension is not defined");
    }

  std::vector<Var> vars, marks;
  for (auto& name : swig.observed())
    vars.push_back(Var{name, swig.node(name).card});
  for (auto& t : targets) marks.push_back(Var{markName(t), swig.node(markName(t)).card});
  std::sort(marks.begin(), marks.end(),
            [](const Var& x, const Var& y) { return x.name < y.name; });

  DataTable q(vars, marks);
  if (!data.exact()) q.markInexact();

  std::vector<std::string> negatives;
  std::vector<int> mv(marks.size(), 0);
  while (true) {
    Extender ext{swig, data, targets, {}};
    for (size_t i = 0; i < marks.size(); ++i)
      ext.markValue[markTarget(marks[i].name)] = mv[i];

    std::vector<int> out(vars.size(), 0);
    while (true) {
      std::map<std::string, int> s;
      for (size_t i = 0; i < vars.size(); ++i) s[vars[i].name] = out[i];
      Scalar v = ext.value(s);
      if (v.sign() < 0) negatives.push_back(entryLabel(vars, out, marks, mv));
      q.at(out, mv) = v;
      size_t i = out.size();
      bool done = true;
      while (i > 0) {
        --i;
        if (++out[i] < vars[i].card) { done = false; break; }
        out[i] = 0;
      }
      if (done) break;
    }

    size_t i = mv.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++mv[i] < marks[i].card) { done = false; break; }
      mv[i] = 0;
    }
    if (done || mv.empty()) break;
  }

  if (!negatives.empty())
    throw InconsistentTables("hybrid dataset has no nonnegative extension (" +
                                 std::to_string(negatives.size()) + " negative entries)",
                             negatives);
  return q;
}

DataTable ettExtend(const CausalGraph& swig, const HybridDataset& data,
                    const std::string& target) {
  return multiEttExtend(swig, data, {target});
}

HybridDataset projectToHybrid(const CausalGraph& swig, const DataTable& q,
                              const std::vector<std::string>& targets) {
  HybridDataset out;
  std::vector<Var> obs = q.vars();

  auto markAssign = [&](const std::map<std::string, int>& obsAssign) {
    std::map<std::string, int> a = obsAssign;
    for (auto& t : targets) a[markName(t)] = obsAssign.at(t);
    return a;
  };

  // observational table: marks riding along with their targets
  DataTable p(obs);
  if (!q.exact()) p.markInexact();
  std::vector<int> o(obs.size(), 0);
  while (true) {
    std::map<std::string, int> s;
    for (size_t i = 0; i < obs.size(); ++i) s[obs[i].name] = o[i];
    p.at(o) = q.prob(markAssign(s));
    size_t i = o.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++o[i] < obs[i].card) { done = false; break; }
      o[i] = 0;
    }
    if (done) break;
  }
  out.observational = std::move(p);

  // one table per single cut: remaining targets' marks match their variables
  for (auto& t : targets) {
    std::vector<Var> rest;
    for (auto& v : obs)
      if (v.name != t) rest.push_back(v);
    for (int val = 0; val < q.card(markName(t)); ++val) {
      DataTable d(rest);
      if (!q.exact()) d.markInexact();
      std::vector<int> r(rest.size(), 0);
      while (true) {
        std::map<std::string, int> s;
        for (size_t i = 0; i < rest.size(); ++i) s[rest[i].name] = r[i];
        std::map<std::string, int> a = s;
        a[markName(t)] = val;
        for (auto& u : targets)
          if (u != t) a[markName(u)] = s.at(u);
        d.at(r) = q.prob(a); // the cut variable itself is marginalized
        size_t i = r.size();
        bool done = true;
        while (i > 0) {
          --i;
          if (++r[i] < rest[i].card) { done = false; break; }
          r[i] = 0;
        }
        if (done || rest.empty()) break;
      }
      out.interventions[doKey(t, val)] = std::move(d);
    }
  }
  return out;
}

} // namespace fusion
