#pragma once

#include "fusion/ett.hpp"
#include "fusion/table.hpp"

#include <map>
#include <string>
#include <vector>

namespace fusion {

struct WitnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownWitness : WitnessError {
  using WitnessError::WitnessError;
};
struct DivisorZero : WitnessError {
  using WitnessError::WitnessError;
};
struct GuardFailed : WitnessError {
  GuardFailed(const std::string& msg, std::vector<std::string> which)
      : WitnessError(msg), failed(std::move(which)) {}
  std::vector<std::string> failed;
};

// One probability read off a table.  A partial assignment marginalizes the
// unmentioned outcome variables; for extended tables the assignment must pin
// every intervention mark.
struct Atom {
  enum class Kind { Observational, Do, Extended };
  Kind kind = Kind::Observational;
  DoKey cut;                          // which post-intervention table (Kind::Do)
  std::map<std::string, int> assign;
};

Atom obsAtom(std::map<std::string, int> assign);
Atom doAtom(DoKey cut, std::map<std::string, int> assign);
Atom extAtom(std::map<std::string, int> assign);

// coeff * prod(factors) / prod(divisors); ratio coefficients carry the
// divisors, which must evaluate nonzero
struct Term {
  Scalar coeff = Scalar(1);
  std::vector<Atom> factors;
  std::vector<Atom> divisors;
};

enum class Cmp { Leq, Geq };

// exact equality side condition: sum(lhs) == sum(rhs) + shift
struct Guard {
  std::string label;
  std::vector<Atom> lhs, rhs;
  Scalar shift = Scalar(0);
};

struct WitnessExpr {
  std::string key;
  std::string scenarioId;
  std::vector<Term> terms;
  Cmp cmp = Cmp::Leq;
  Scalar bound = Scalar(0);
  std::vector<Guard> guards;
  // named sub-expressions reported separately; `terms` already contains
  // them (possibly scaled by other atoms), so parts never add to the value
  std::map<std::string, std::vector<Term>> parts;
};

struct WitnessVerdict {
  Scalar value;
  Scalar slack;  // >= 0 iff the comparison holds
  bool satisfied = false;
};

// tables the atoms resolve against; either side may be absent
struct WitnessInput {
  const HybridDataset* hybrid = nullptr;
  const DataTable* extended = nullptr;
};

Scalar atomValue(const Atom& a, const WitnessInput& in);
Scalar evaluateTerms(const std::vector<Term>& terms, const WitnessInput& in);

WitnessVerdict evaluate(const WitnessExpr& w, const WitnessInput& in);
WitnessVerdict evaluate(const WitnessExpr& w, const HybridDataset& data);
WitnessVerdict evaluate(const WitnessExpr& w, const DataTable& extendedQ);

// checks the equality guards exactly first; throws GuardFailed listing the
// violated ones
WitnessVerdict guardedEvaluate(const WitnessExpr& w, const WitnessInput& in);

Scalar evaluatePart(const WitnessExpr& w, const std::string& part, const WitnessInput& in);

WitnessExpr builtinWitness(const std::string& key);
std::vector<std::string> witnessKeys();

}  // namespace fusion
