#include "fusion/table.hpp"

#include <algorithm>

namespace fusion {

DataTable::DataTable(std::vector<Var> vars, std::vector<Var> given)
    : vars_(std::move(vars)), given_(std::move(given)) {
  size_t n = 1;
  for (auto& v : given_) {
    if (v.card < 1) throw TableError("bad cardinality for " + v.name);
    n *= static_cast<size_t>(v.card);
  }
  for (auto& v : vars_) {
    if (v.card < 1) throw TableError("bad cardinality for " + v.name);
    n *= static_cast<size_t>(v.card);
  }
  data_.assign(n, Scalar(0));
}

bool DataTable::hasVar(const std::string& name) const {
  auto match = [&](const Var& v) { return v.name == name; };
  return std::any_of(vars_.begin(), vars_.end(), match) ||
         std::any_of(given_.begin(), given_.end(), match);
}

int DataTable::card(const std::string& name) const {
  for (auto& v : vars_)
    if (v.name == name) return v.card;
  for (auto& v : given_)
    if (v.name == name) return v.card;
  throw TableError("unknown table variable: " + name);
}

size_t DataTable::index(const std::vector<int>& outcome, const std::vector<int>& given) const {
  if (outcome.size() != vars_.size() || given.size() != given_.size())
    throw TableError("assignment arity mismatch");
  size_t idx = 0;
  for (size_t i = 0; i < given_.size(); ++i) {
    if (given[i] < 0 || given[i] >= given_[i].card)
      throw TableError("value out of range for " + given_[i].name);
    idx = idx * static_cast<size_t>(given_[i].card) + static_cast<size_t>(given[i]);
  }
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (outcome[i] < 0 || outcome[i] >= vars_[i].card)
      throw TableError("value out of range for " + vars_[i].name);
    idx = idx * static_cast<size_t>(vars_[i].card) + static_cast<size_t>(outcome[i]);
  }
  return idx;
}

Scalar& DataTable::at(const std::vector<int>& outcome, const std::vector<int>& given) {
  return data_[index(outcome, given)];
}

const Scalar& DataTable::at(const std::vector<int>& outcome, const std::vector<int>& given) const {
  return data_[index(outcome, given)];
}

Scalar DataTable::prob(const std::map<std::string, int>& assign) const {
  std::vector<int> gv(given_.size());
  for (size_t i = 0; i < given_.size(); ++i) {
    auto it = assign.find(given_[i].name);
    if (it == assign.end())
      throw TableError("conditioning variable not assigned: " + given_[i].name);
    gv[i] = it->second;
  }
  for (auto& [name, val] : assign)
    if (!hasVar(name)) throw TableError("unknown table variable: " + name);

  // iterate over the unassigned outcome variables
  std::vector<int> fixed(vars_.size(), -1);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = assign.find(vars_[i].name);
    if (it != assign.end()) fixed[i] = it->second;
  }
  Scalar total(0);
  std::vector<int> out(vars_.size(), 0);
  for (size_t i = 0; i < vars_.size(); ++i)
    if (fixed[i] >= 0) out[i] = fixed[i];
  while (true) {
    total += at(out, gv);
    // odometer over free positions
    size_t i = vars_.size();
    while (i > 0) {
      --i;
      if (fixed[i] >= 0) continue;
      if (++out[i] < vars_[i].card) break;
      out[i] = 0;
    }
    bool wrapped = true;
    for (size_t j = 0; j < vars_.size(); ++j)
      if (fixed[j] < 0 && out[j] != 0) { wrapped = false; break; }
    if (wrapped) break;
  }
  return total;
}

bool DataTable::nonNegative() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Scalar& s) { return s.sign() >= 0; });
}

void DataTable::checkNormalized() const {
  if (!nonNegative()) throw TableError("table has a negative entry");
  size_t block = 1;
  for (auto& v : vars_) block *= static_cast<size_t>(v.card);
  for (size_t start = 0; start < data_.size(); start += block) {
    Scalar sum(0);
    for (size_t i = 0; i < block; ++i) sum += data_[start + i];
    if (sum != Scalar(1)) throw TableError("table slice does not sum to one");
  }
}

DataTable marginalize(const DataTable& t, const std::vector<std::string>& keep) {
  std::vector<Var> kept;
  for (auto& name : keep) {
    auto it = std::find_if(t.vars().begin(), t.vars().end(),
                           [&](const Var& v) { return v.name == name; });
    if (it == t.vars().end()) throw TableError("cannot keep unknown variable: " + name);
    kept.push_back(*it);
  }
  DataTable out(kept, t.given());
  if (!t.exact()) out.markInexact();

  std::vector<int> gv(t.given().size(), 0);
  auto forEachGiven = [&](auto&& body) {
    while (true) {
      body(gv);
      size_t i = gv.size();
      while (i > 0) {
        --i;
        if (++gv[i] < t.given()[i].card) break;
        gv[i] = 0;
      }
      bool wrapped = std::all_of(gv.begin(), gv.end(), [](int x) { return x == 0; });
      if (wrapped || gv.empty()) break;
    }
  };
  forEachGiven([&](const std::vector<int>& g) {
    std::vector<int> full(t.vars().size(), 0);
    while (true) {
      std::vector<int> sub(kept.size());
      for (size_t k = 0; k < kept.size(); ++k) {
        for (size_t i = 0; i < t.vars().size(); ++i)
          if (t.vars()[i].name == kept[k].name) sub[k] = full[i];
      }
      out.at(sub, g) += t.at(full, g);
      size_t i = full.size();
      bool done = true;
      while (i > 0) {
        --i;
        if (++full[i] < t.vars()[i].card) { done = false; break; }
        full[i] = 0;
      }
      if (done) break;
    }
  });
  return out;
}

DataTable condition(const DataTable& t, const std::map<std::string, int>& on) {
  if (!t.given().empty())
    throw TableError("condition expects a joint table");
  for (auto& [name, val] : on)
    if (!t.hasVar(name)) throw TableError("unknown table variable: " + name);
  Scalar denom = t.prob(on);
  if (denom.sign() == 0) throw TableError("conditioning on a zero-probability event");

  std::vector<Var> rest;
  for (auto& v : t.vars())
    if (!on.count(v.name)) rest.push_back(v);
  DataTable out(rest);
  if (!t.exact()) out.markInexact();

  std::vector<int> sub(rest.size(), 0);
  while (true) {
    std::map<std::string, int> assign = on;
    for (size_t i = 0; i < rest.size(); ++i) assign[rest[i].name] = sub[i];
    out.at(sub) = t.prob(assign) / denom;
    size_t i = sub.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++sub[i] < rest[i].card) { done = false; break; }
      sub[i] = 0;
    }
    if (done || rest.empty()) break;
  }
  return out;
}

DoKey doKey(const std::string& target, int value) { return {{target, value}}; }

bool HybridDataset::exact() const {
  if (!observational.exact()) return false;
  for (auto& [k, t] : interventions)
    if (!t.exact()) return false;
  return true;
}

} // namespace fusion
