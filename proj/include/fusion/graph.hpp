#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusion {

enum class NodeKind { Observed, Latent, InterventionMark };

struct Node {
  std::string name;
  NodeKind kind = NodeKind::Observed;
  int card = 0; // outcome cardinality; 0 for latent nodes

  friend bool operator==(const Node&, const Node&) = default;
};

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TargetNotObserved : GraphError {
  using GraphError::GraphError;
};
struct TargetHasNoChildren : GraphError {
  using GraphError::GraphError;
};
struct NotAnInterventionNode : GraphError {
  using GraphError::GraphError;
};
struct NotFullSwig : GraphError {
  using GraphError::GraphError;
};

// Directed graph over observed variables, latent sources and intervention
// marks ("#" nodes).  Latent nodes and marks must be exogenous; marks have a
// single observed target plus zero or more downstream edges installed by
// interruption.
class CausalGraph {
public:
  CausalGraph() = default;
  CausalGraph(std::vector<Node> nodes,
              std::vector<std::pair<std::string, std::string>> edges);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<std::pair<std::string, std::string>>& edges() const { return edges_; }

  bool hasNode(const std::string& name) const { return index_.count(name) > 0; }
  const Node& node(const std::string& name) const;
  bool hasEdge(const std::string& from, const std::string& to) const;

  std::vector<std::string> parents(const std::string& name) const;
  std::vector<std::string> children(const std::string& name) const;

  // observed node names in canonical (sorted) order
  std::vector<std::string> observed() const;
  std::vector<std::string> latents() const;
  std::vector<std::string> marks() const;

  friend bool operator==(const CausalGraph&, const CausalGraph&) = default;

private:
  std::vector<Node> nodes_; // sorted by name
  std::vector<std::pair<std::string, std::string>> edges_; // sorted
  std::map<std::string, int> index_;
};

struct ValidationReport {
  bool acyclic = true;
  bool latentsExogenous = true;
  bool marksExogenous = true;
  std::vector<std::string> violations;
  bool ok() const { return acyclic && latentsExogenous && marksExogenous && violations.empty(); }
};

ValidationReport validate(const CausalGraph& g);

// name of the intervention mark attached to observed variable `target`
std::string markName(const std::string& target);
// inverse of markName; empty if `mark` is not of that shape
std::string markTarget(const std::string& mark);

// Single-world surgery: for every target X, add an exogenous mark X# with the
// same cardinality, rewire every edge X -> C to X# -> C.  X keeps its own
// parents.  Targets must be observed and (for a meaningful surgery) have at
// least one child; latent or unknown targets throw GraphError.
CausalGraph interrupt(const CausalGraph& g, const std::set<std::string>& targets);

// no observed node has an observed parent that is not a mark
bool isFullSwig(const CausalGraph& g);

// observed common children of two intervention marks in an interrupted graph;
// xi/xj are the mark node names themselves (e.g. "A#")
std::set<std::string> sharedChildren(const CausalGraph& g, const std::string& xi,
                                     const std::string& xj);

// Split every mark with k > 1 observed children into k per-edge marks, so no
// two marks share a child.  Per-edge marks are named "X#@C" for child C.
CausalGraph maximallyInterrupt(const CausalGraph& g);

// observed nodes with at least one observed child (the ones worth interrupting)
std::vector<std::string> interventionEligible(const CausalGraph& g);

} // namespace fusion
