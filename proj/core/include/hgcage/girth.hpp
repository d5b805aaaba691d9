#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "hgcage/graph.hpp"
#include "hgcage/hypergraph.hpp"

namespace hgcage {

inline constexpr std::size_t kNoGirthCap = std::numeric_limits<std::size_t>::max() / 4;

/// Girth with a shortest-cycle witness.
///
/// `girth` is nullopt when no cycle of length <= cap exists (this covers
/// acyclic inputs). For graphs the witness lists the cycle's vertices in
/// order. For hypergraphs it alternates vertex and hyperedge ids,
/// v0 e0 v1 e1 ... v(g-1) e(g-1), where each v(i) lies in e(i-1) and e(i).
struct GirthCertificate {
  std::optional<std::size_t> girth;
  std::vector<std::uint32_t> witness;

  bool found() const noexcept { return girth.has_value(); }
};

/// Shortest cycle by breadth-first search from every vertex, pruned at the
/// best length found so far. Only cycles of length <= cap are reported.
GirthCertificate graph_girth(const Graph& g, std::size_t cap = kNoGirthCap);

/// Berge girth, computed as half the girth of the Levi graph.
GirthCertificate berge_girth(const Hypergraph& h, std::size_t cap = kNoGirthCap);

/// True when `witness` is a cycle of g with `length` distinct vertices.
bool verify_graph_cycle(const Graph& g, const std::vector<std::uint32_t>& witness, std::size_t length);

/// True when `witness` is a Berge cycle of h of the given length.
bool verify_berge_cycle(const Hypergraph& h, const std::vector<std::uint32_t>& witness, std::size_t length);

}  // namespace hgcage
