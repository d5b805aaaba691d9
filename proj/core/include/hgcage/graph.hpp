#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hgcage {

using VertexId = std::uint32_t;

/// Simple undirected graph with sorted adjacency lists. Vertices are 0-based.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on loops, parallel edges or ids >= n.
  Graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);
  Graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges)
      : Graph(n, std::span<const std::pair<VertexId, VertexId>>(edges)) {}

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  bool adjacent(VertexId u, VertexId v) const;

  /// True when every vertex has degree d.
  bool is_regular(std::size_t d) const;

  /// Each edge once as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

}  // namespace hgcage
