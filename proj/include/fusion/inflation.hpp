#pragma once

#include "fusion/table.hpp"
#include "fusion/witness.hpp"

#include <string>
#include <vector>

namespace fusion {

struct InflationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedScenario : InflationError {
  using InflationError::InflationError;
};
struct UnsupportedOrder : InflationError {
  using InflationError::InflationError;
};
struct SignatureMismatch : InflationError {
  using InflationError::InflationError;
};

// One injectable-marginal equality: the marginal of the inflated joint pinned
// by `cell` (variable slot -> outcome) equals the product of the two
// extended-table entries `left` and `right`.
struct ProductConstraint {
  std::vector<std::pair<int, int>> cell;
  Atom left, right;
};

// Second-order inflation of an interrupted scenario: two independent copies
// of every latent source, one inflated variable per (response slot, source
// copies) combination.  All inflated variables are binary; a joint assignment
// is indexed by the bitmask over `vars` slots.
struct InflationInstance {
  std::string scenarioId;
  std::vector<std::string> vars;            // 12 slot names
  std::vector<std::vector<int>> symmetry;   // full copy-swap group, slot perms
  std::vector<ProductConstraint> constraints;
  std::vector<std::string> marks;           // intervention marks of the input table

  size_t jointSize() const { return size_t(1) << vars.size(); }
};

InflationInstance buildInflation(const std::string& scenario, int order = 2);

// Farkas certificate of LP infeasibility.  `dual` has one weight per product
// constraint plus a trailing weight for the normalization row; the witness is
// the induced degree-<=2 polynomial over extended-table entries, valid (<= 0)
// for every classically compatible table and equal to `bound` > 0 on the
// rejected one.
struct InfeasibilityCertificate {
  std::vector<Scalar> dual;
  WitnessExpr witness;
  Scalar bound;
};

enum class InflationStatus { Feasible, Infeasible };

struct InflationResult {
  InflationStatus status = InflationStatus::Feasible;
  std::vector<Scalar> model;  // Feasible: symmetric inflated joint, indexed by bitmask
  InfeasibilityCertificate cert;  // Infeasible only
};

struct InflationSolveOptions {
  // solve over the full inflated joint with one equality row per symmetry
  // pair (reduced by generic aliasing presolve) instead of the hand-built
  // orbit collapse; the two routes must agree
  bool explicitSymmetry = false;
  bool floatPresolve = true;  // warm start only; every verdict re-verified exactly
};

InflationResult solve(const InflationInstance& inst, const DataTable& q,
                      const InflationSolveOptions& opts = {});

WitnessExpr renderWitness(const InfeasibilityCertificate& cert);

// exact re-verification, in the symmetrized column space
bool verifyCertificate(const InflationInstance& inst, const InfeasibilityCertificate& cert,
                       const DataTable& q);
bool verifyModel(const InflationInstance& inst, const DataTable& q,
                 const std::vector<Scalar>& model);

}  // namespace fusion
