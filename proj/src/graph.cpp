#include "fusion/graph.hpp"

#include <algorithm>

namespace fusion {

CausalGraph::CausalGraph(std::vector<Node> nodes,
                         std::vector<std::pair<std::string, std::string>> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::sort(nodes_.begin(), nodes_.end(),
            [](const Node& x, const Node& y) { return x.name < y.name; });
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (size_t i = 0; i < nodes_.size(); ++i) {
    if (!index_.emplace(nodes_[i].name, static_cast<int>(i)).second)
      throw GraphError("duplicate node name: " + nodes_[i].name);
  }
  for (auto& [from, to] : edges_) {
    if (!hasNode(from) || !hasNode(to))
      throw GraphError("edge references unknown node: " + from + " -> " + to);
    if (from == to) throw GraphError("self loop on " + from);
  }
}

const Node& CausalGraph::node(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw GraphError("unknown node: " + name);
  return nodes_[it->second];
}

bool CausalGraph::hasEdge(const std::string& from, const std::string& to) const {
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(from, to));
}

std::vector<std::string> CausalGraph::parents(const std::string& name) const {
  std::vector<std::string> out;
  for (auto& [from, to] : edges_)
    if (to == name) out.push_back(from);
  return out;
}

std::vector<std::string> CausalGraph::children(const std::string& name) const {
  std::vector<std::string> out;
  for (auto& [from, to] : edges_)
    if (from == name) out.push_back(to);
  return out;
}

static std::vector<std::string> ofKind(const CausalGraph& g, NodeKind k) {
  std::vector<std::string> out;
  for (auto& n : g.nodes())
    if (n.kind == k) out.push_back(n.name);
  return out;
}

std::vector<std::string> CausalGraph::observed() const { return ofKind(*this, NodeKind::Observed); }
std::vector<std::string> CausalGraph::latents() const { return ofKind(*this, NodeKind::Latent); }
std::vector<std::string> CausalGraph::marks() const { return ofKind(*this, NodeKind::InterventionMark); }

ValidationReport validate(const CausalGraph& g) {
  ValidationReport rep;
  for (auto& n : g.nodes()) {
    if (n.kind != NodeKind::Latent && n.card < 2)
      rep.violations.push_back(n.name + ": cardinality must be >= 2");
    if (n.kind != NodeKind::Latent && !g.parents(n.name).empty() &&
        n.kind == NodeKind::InterventionMark) {
      rep.marksExogenous = false;
      rep.violations.push_back(n.name + ": intervention mark has parents");
    }
    if (n.kind == NodeKind::Latent && !g.parents(n.name).empty()) {
      rep.latentsExogenous = false;
      rep.violations.push_back(n.name + ": latent node has parents");
    }
  }
  // Kahn's algorithm for acyclicity
  std::map<std::string, int> indeg;
  for (auto& n : g.nodes()) indeg[n.name] = 0;
  for (auto& [from, to] : g.edges()) indeg[to]++;
  std::vector<std::string> queue;
  for (auto& [name, d] : indeg)
    if (d == 0) queue.push_back(name);
  size_t seen = 0;
  while (!queue.empty()) {
    auto cur = queue.back();
    queue.pop_back();
    ++seen;
    for (auto& c : g.children(cur))
      if (--indeg[c] == 0) queue.push_back(c);
  }
  if (seen != g.nodes().size()) {
    rep.acyclic = false;
    rep.violations.push_back("graph has a directed cycle");
  }
  return rep;
}

std::string markName(const std::string& target) { return target + "#"; }

std::string markTarget(const std::string& mark) {
  if (mark.size() < 2) return "";
  auto hash = mark.find('#');
  if (hash == std::string::npos || hash == 0) return "";
  return mark.substr(0, hash);
}

CausalGraph interrupt(const CausalGraph& g, const std::set<std::string>& targets) {
  auto nodes = g.nodes();
  auto edges = g.edges();
  for (auto& t : targets) {
    const Node& n = g.node(t); // throws on unknown node
    if (n.kind != NodeKind::Observed)
      throw TargetNotObserved("interruption target must be observed: " + t);
    if (g.children(t).empty())
      throw TargetHasNoChildren("interruption target has no children: " + t);
    std::string mk = markName(t);
    if (g.hasNode(mk)) throw GraphError("node already interrupted: " + t);
    nodes.push_back(Node{mk, NodeKind::InterventionMark, n.card});
    for (auto& e : edges)
      if (e.first == t) e.first = mk;
  }
  return CausalGraph(std::move(nodes), std::move(edges));
}

bool isFullSwig(const CausalGraph& g) {
  for (auto& n : g.nodes()) {
    if (n.kind != NodeKind::Observed) continue;
    for (auto& p : g.parents(n.name))
      if (g.node(p).kind == NodeKind::Observed) return false;
  }
  return true;
}

std::set<std::string> sharedChildren(const CausalGraph& g, const std::string& xi,
                                     const std::string& xj) {
  for (auto* x : {&xi, &xj})
    if (g.node(*x).kind != NodeKind::InterventionMark)
      throw NotAnInterventionNode("not an intervention mark: " + *x);
  auto ci = g.children(xi);
  auto cj = g.children(xj);
  std::set<std::string> si(ci.begin(), ci.end()), out;
  for (auto& c : cj)
    if (si.count(c) && g.node(c).kind == NodeKind::Observed) out.insert(c);
  return out;
}

CausalGraph maximallyInterrupt(const CausalGraph& g) {
  if (!isFullSwig(g)) throw NotFullSwig("maximal interruption requires a full SWIG");
  auto nodes = g.nodes();
  auto edges = g.edges();
  for (auto& n : g.nodes()) {
    if (n.kind != NodeKind::InterventionMark) continue;
    auto kids = g.children(n.name);
    if (kids.size() <= 1) continue;
    // one fresh mark per outgoing edge
    nodes.erase(std::find_if(nodes.begin(), nodes.end(),
                             [&](const Node& m) { return m.name == n.name; }));
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [&](const auto& e) { return e.first == n.name; }),
                edges.end());
    for (auto& c : kids) {
      std::string split = n.name + "@" + c;
      nodes.push_back(Node{split, NodeKind::InterventionMark, n.card});
      edges.emplace_back(split, c);
    }
  }
  return CausalGraph(std::move(nodes), std::move(edges));
}

std::vector<std::string> interventionEligible(const CausalGraph& g) {
  std::vector<std::string> out;
  for (auto& n : g.nodes()) {
    if (n.kind != NodeKind::Observed) continue;
    for (auto& c : g.children(n.name)) {
      if (g.node(c).kind == NodeKind::Observed) {
        out.push_back(n.name);
        break;
      }
    }
  }
  return out;
}

} // namespace fusion
