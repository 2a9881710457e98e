#pragma once

#include "fusion/graph.hpp"
#include "fusion/lp.hpp"
#include "fusion/witness.hpp"

#include <map>
#include <string>
#include <vector>

namespace fusion {

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MultipleLatentComponents : GeometryError {
  using GeometryError::GeometryError;
};
struct BudgetExceeded : GeometryError {
  using GeometryError::GeometryError;
};

// one requested data table: the (possibly empty) intervention cut plus the
// outcome variables whose joint distribution the table reports
struct TableQuery {
  DoKey cut;
  std::vector<std::string> outcomes;
};

// Counterfactual unpacking of a single-latent-source scenario: every observed
// node gets one copy per assignment of its observed parents, and each data
// table coordinate becomes a marginal of the unpacked joint.
struct UnpackedSpec {
  struct Copy {
    std::string node;
    std::vector<std::string> parentNodes;  // observed parents, sorted
    std::vector<int> parentValues;
    int card = 2;
  };

  CausalGraph graph;
  std::vector<TableQuery> queries;
  std::vector<Copy> copies;
  std::vector<Atom> coords;          // coordinate identities (cut + assignment)
  std::vector<std::string> labels;   // printable coordinate names

  long assignments() const;  // number of deterministic unpacked points
  // 0/1 coordinate vector of one deterministic assignment (indexed like copies)
  std::vector<Scalar> project(const std::vector<int>& assignment) const;
};

UnpackedSpec unpack(const CausalGraph& g, const std::vector<TableQuery>& queries);

// a.x <= b rows; equalities listed separately
struct LinearIneq {
  std::vector<Scalar> a;
  Scalar b;
};

struct Polyhedron {
  std::vector<std::string> labels;
  std::vector<std::vector<Scalar>> verts;  // V-form
  std::vector<LinearIneq> ineqs;           // H-form
  std::vector<LinearIneq> eqs;
};

// projected deterministic points, deduplicated (V-form)
Polyhedron vertices(const UnpackedSpec& spec);

struct MembershipCertificate {
  bool feasible = false;
  std::vector<Scalar> weights;  // convex weights over verts when feasible
  std::vector<Scalar> plane;    // otherwise: plane.x <= rhs on the polytope,
  Scalar planeRhs;              // plane.point > rhs on the queried point
};

MembershipCertificate lpMembership(const std::vector<Scalar>& point, const Polyhedron& vForm);

// exact projection of an H-form system onto the coordinates not listed in
// `eliminate`; redundant rows removed by exact LP
Polyhedron fourierMotzkin(const Polyhedron& hForm, const std::vector<std::string>& eliminate);

// complete irredundant H-form of conv(verts) by the double description method
// on the polar cone
Polyhedron facets(const Polyhedron& vForm);

// hull equalities of a V-form (affine-hull rows only)
std::vector<LinearIneq> hullEqualities(const Polyhedron& vForm);

// coordinate permutations induced by per-variable outcome permutations; the
// group is the cartesian product of the supplied per-variable sets acting on
// both outcome assignments and do() cut values
std::vector<std::vector<size_t>> outcomeRelabelings(
    const std::vector<Atom>& coords,
    const std::map<std::string, std::vector<std::vector<int>>>& varPerms);

// all k! permutations of {0..k-1}
std::vector<std::vector<int>> symmetricGroup(int k);

// canonical representative of an inequality class: reduce modulo the equality
// span, scale to a primitive integer vector, take the lexicographic minimum
// over the relabeling orbit; equal strings = same class
std::string canonicalize(const LinearIneq& ineq, const std::vector<LinearIneq>& eqs,
                         const std::vector<std::vector<size_t>>& group);

}  // namespace fusion
