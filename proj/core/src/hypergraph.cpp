#include "hgcage/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hgcage {

Hypergraph::Hypergraph(std::size_t n, std::vector<std::vector<VertexId>> edges)
    : edges_(std::move(edges)), incident_(n) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& members = edges_[e];
    if (members.empty()) throw std::invalid_argument("hyperedge " + std::to_string(e + 1) + " is empty");
    std::sort(members.begin(), members.end());
    if (members.back() >= n) {
      throw std::invalid_argument("hyperedge " + std::to_string(e + 1) + " has a vertex out of range");
    }
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
      throw std::invalid_argument("hyperedge " + std::to_string(e + 1) + " repeats a vertex");
    }
    for (VertexId v : members) incident_[v].push_back(static_cast<EdgeId>(e));
  }
  std::vector<const std::vector<VertexId>*> sorted;
  sorted.reserve(edges_.size());
  for (const auto& members : edges_) sorted.push_back(&members);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a < *b; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (*sorted[i] == *sorted[i - 1]) throw std::invalid_argument("identical hyperedges");
  }
}

bool Hypergraph::contains(EdgeId e, VertexId v) const {
  const auto& members = edges_[e];
  return std::binary_search(members.begin(), members.end(), v);
}

DegreeProfile degree_profile(const Hypergraph& h) {
  DegreeProfile profile;
  if (h.order() > 0) {
    const std::size_t d = h.incident(0).size();
    bool regular = true;
    for (VertexId v = 1; v < h.order(); ++v) regular = regular && h.incident(v).size() == d;
    if (regular) profile.degree = d;
  }
  if (h.size() > 0) {
    const std::size_t r = h.edge(0).size();
    bool uniform = true;
    for (EdgeId e = 1; e < h.size(); ++e) uniform = uniform && h.edge(e).size() == r;
    if (uniform) profile.uniformity = r;
  }
  return profile;
}

Graph levi(const Hypergraph& h) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  const auto n = static_cast<VertexId>(h.order());
  for (EdgeId e = 0; e < h.size(); ++e) {
    for (VertexId v : h.edge(e)) pairs.emplace_back(v, n + e);
  }
  return Graph(h.order() + h.size(), pairs);
}

Hypergraph dual(const Hypergraph& h) {
  std::vector<std::vector<VertexId>> edges(h.order());
  for (VertexId v = 0; v < h.order(); ++v) {
    const auto inc = h.incident(v);
    if (inc.empty()) {
      throw std::invalid_argument("vertex " + std::to_string(v + 1) + " is isolated; its dual hyperedge would be empty");
    }
    edges[v].assign(inc.begin(), inc.end());
  }
  return Hypergraph(h.size(), std::move(edges));
}

bool is_linear(const Hypergraph& h) {
  // For each vertex, every pair of hyperedges through it may meet only there.
  std::vector<bool> seen(h.size(), false);
  for (EdgeId e = 0; e < h.size(); ++e) {
    std::vector<EdgeId> touched;
    for (VertexId v : h.edge(e)) {
      for (EdgeId f : h.incident(v)) {
        if (f == e) continue;
        if (seen[f]) return false;
        seen[f] = true;
        touched.push_back(f);
      }
    }
    for (EdgeId f : touched) seen[f] = false;
  }
  return true;
}

Hypergraph as_hypergraph(const Graph& g) {
  std::vector<std::vector<VertexId>> edges;
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Hypergraph(g.order(), std::move(edges));
}

Hypergraph from_incidence_graph(const Graph& g, std::size_t black) {
  if (black > g.order()) throw std::invalid_argument("black class larger than the graph");
  for (VertexId v = 0; v < black; ++v) {
    for (VertexId w : g.neighbors(v)) {
      if (w < black) throw std::invalid_argument("colouring is not proper");
    }
  }
  std::vector<std::vector<VertexId>> edges;
  for (VertexId w = static_cast<VertexId>(black); w < g.order(); ++w) {
    std::vector<VertexId> members;
    for (VertexId v : g.neighbors(w)) {
      if (v >= black) throw std::invalid_argument("colouring is not proper");
      members.push_back(v);
    }
    edges.push_back(std::move(members));
  }
  return Hypergraph(black, std::move(edges));
}

}  // namespace hgcage
