#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hgcage/graph.hpp"

namespace hgcage {

using EdgeId = std::uint32_t;

/// A finite hypergraph on vertices 0..n-1.
///
/// Each hyperedge is stored sorted. Empty hyperedges, repeated vertices inside
/// a hyperedge and identical hyperedges are rejected with
/// std::invalid_argument.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::size_t n, std::vector<std::vector<VertexId>> edges);

  std::size_t order() const noexcept { return incident_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const VertexId> edge(EdgeId e) const { return edges_[e]; }
  const std::vector<std::vector<VertexId>>& edges() const noexcept { return edges_; }
  /// Hyperedges containing v, ascending.
  std::span<const EdgeId> incident(VertexId v) const { return incident_[v]; }
  bool contains(EdgeId e, VertexId v) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<VertexId>> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

struct DegreeProfile {
  std::optional<std::size_t> degree;      ///< nullopt when irregular
  std::optional<std::size_t> uniformity;  ///< nullopt when non-uniform
};

DegreeProfile degree_profile(const Hypergraph& h);

/// Bipartite incidence graph: vertex i is black, hyperedge j becomes white
/// vertex n + j.
Graph levi(const Hypergraph& h);

/// Swaps the roles of vertices and hyperedges. Throws std::invalid_argument if
/// a vertex is isolated, or if two vertices lie in exactly the same hyperedges
/// (the dual would repeat a hyperedge).
Hypergraph dual(const Hypergraph& h);

/// No two distinct hyperedges share two or more vertices.
bool is_linear(const Hypergraph& h);

/// A graph viewed as a 2-uniform hypergraph, edges in Graph::edges() order.
Hypergraph as_hypergraph(const Graph& g);

/// Inverse of levi(): black vertices 0..black-1 become vertices and each
/// white vertex becomes the hyperedge of its neighbours. Throws if the
/// colouring is not proper.
Hypergraph from_incidence_graph(const Graph& g, std::size_t black);

}  // namespace hgcage
