#include "hgcage/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hgcage {

Graph::Graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges)
    : adjacency_(n), edge_count_(edges.size()) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u + 1));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& nbrs = adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw std::invalid_argument("parallel edge at vertex " + std::to_string(v + 1));
    }
  }
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::is_regular(std::size_t d) const {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [d](const auto& nbrs) { return nbrs.size() == d; });
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> result;
  result.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) result.emplace_back(static_cast<VertexId>(u), v);
    }
  }
  return result;
}

}  // namespace hgcage
