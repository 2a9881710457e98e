#pragma once

#include "fusion/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace fusion {

struct TableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Var {
  std::string name;
  int card = 2;
  friend bool operator==(const Var&, const Var&) = default;
};

// Discrete probability table with exact entries.  `vars` are the outcome
// variables; `given` are conditioning variables (intervention marks in the
// extended tables), so the table stores one normalized distribution per
// assignment of `given`.  A plain joint distribution has no `given` part.
class DataTable {
public:
  DataTable() = default;
  DataTable(std::vector<Var> vars, std::vector<Var> given = {});

  const std::vector<Var>& vars() const { return vars_; }
  const std::vector<Var>& given() const { return given_; }
  size_t size() const { return data_.size(); }

  bool exact() const { return exact_; }
  void markInexact() { exact_ = false; }

  bool hasVar(const std::string& name) const;
  int card(const std::string& name) const;

  Scalar& at(const std::vector<int>& outcome, const std::vector<int>& given = {});
  const Scalar& at(const std::vector<int>& outcome, const std::vector<int>& given = {}) const;

  // Entry or partial-assignment marginal: all `given` variables must be
  // assigned, outcome variables not mentioned are summed over.
  Scalar prob(const std::map<std::string, int>& assign) const;

  // throws TableError unless entries are nonnegative and each conditional
  // slice sums to one
  void checkNormalized() const;
  bool nonNegative() const;

  const std::vector<Scalar>& raw() const { return data_; }
  std::vector<Scalar>& raw() { return data_; }

private:
  size_t index(const std::vector<int>& outcome, const std::vector<int>& given) const;

  std::vector<Var> vars_, given_;
  std::vector<Scalar> data_;
  bool exact_ = true;
};

// keep only `keep` outcome variables (conditioning part is preserved)
DataTable marginalize(const DataTable& t, const std::vector<std::string>& keep);

// distribution over the remaining outcome variables given an assignment of
// some outcome variables; throws TableError when conditioning on a
// zero-probability event
DataTable condition(const DataTable& t, const std::map<std::string, int>& on);

// sorted single- or multi-target intervention label
using DoKey = std::vector<std::pair<std::string, int>>;
DoKey doKey(const std::string& target, int value);

// observational joint plus one post-intervention table per registered cut
struct HybridDataset {
  DataTable observational;
  std::map<DoKey, DataTable> interventions;
  bool exact() const;
};

} // namespace fusion
