#include "hgcage/girth.hpp"

#include <algorithm>
#include <set>

namespace hgcage {
namespace {

std::vector<VertexId> path_to_root(const std::vector<VertexId>& parent, VertexId v, VertexId root) {
  std::vector<VertexId> path{v};
  while (v != root) {
    v = parent[v];
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

GirthCertificate graph_girth(const Graph& g, std::size_t cap) {
  const std::size_t n = g.order();
  std::size_t best = cap == kNoGirthCap ? kNoGirthCap : cap + 1;
  VertexId best_root = 0, best_u = 0, best_w = 0;

  // Per-root state is invalidated by bumping `stamp` instead of clearing.
  std::vector<std::uint32_t> seen(n, 0);
  std::vector<std::uint32_t> dist(n, 0);
  std::vector<VertexId> parent(n, 0);
  std::vector<VertexId> queue(n);
  std::uint32_t stamp = 0;

  for (VertexId root = 0; root < n; ++root) {
    ++stamp;
    std::size_t head = 0, tail = 0;
    queue[tail++] = root;
    seen[root] = stamp;
    dist[root] = 0;
    parent[root] = root;
    while (head < tail) {
      const VertexId u = queue[head++];
      const std::uint32_t du = dist[u];
      // Any cycle closed from here has length >= 2 * du.
      if (2 * static_cast<std::size_t>(du) >= best) break;
      for (VertexId w : g.neighbors(u)) {
        if (seen[w] != stamp) {
          seen[w] = stamp;
          dist[w] = du + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (w != parent[u]) {
          const std::size_t length = static_cast<std::size_t>(du) + dist[w] + 1;
          if (length < best) {
            best = length;
            best_root = root;
            best_u = u;
            best_w = w;
          }
        }
      }
    }
  }

  GirthCertificate cert;
  if (best == kNoGirthCap || best > cap) return cert;

  // Rebuild the winning root's BFS tree to recover both branches.
  ++stamp;
  std::size_t head = 0, tail = 0;
  queue[tail++] = best_root;
  seen[best_root] = stamp;
  parent[best_root] = best_root;
  while (head < tail) {
    const VertexId u = queue[head++];
    for (VertexId w : g.neighbors(u)) {
      if (seen[w] != stamp) {
        seen[w] = stamp;
        parent[w] = u;
        queue[tail++] = w;
      }
    }
  }
  auto left = path_to_root(parent, best_u, best_root);
  auto right = path_to_root(parent, best_w, best_root);
  std::size_t common = 0;
  while (common + 1 < left.size() && common + 1 < right.size() && left[common + 1] == right[common + 1]) {
    ++common;
  }
  std::vector<std::uint32_t> cycle(left.begin() + static_cast<std::ptrdiff_t>(common), left.end());
  for (std::size_t i = right.size(); i-- > common + 1;) cycle.push_back(right[i]);

  // The replay is the same deterministic BFS, so parents match the first pass.
  // At the minimum the two branches share only the root.
  cert.girth = cycle.size();
  cert.witness = std::move(cycle);
  return cert;
}

GirthCertificate berge_girth(const Hypergraph& h, std::size_t cap) {
  const Graph incidence = levi(h);
  const std::size_t levi_cap = cap >= kNoGirthCap / 2 ? kNoGirthCap : 2 * cap;
  GirthCertificate levi_cert = graph_girth(incidence, levi_cap);
  GirthCertificate cert;
  if (!levi_cert.found()) return cert;

  auto cycle = std::move(levi_cert.witness);
  if (cycle.front() >= h.order()) std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
  const auto n = static_cast<std::uint32_t>(h.order());
  for (std::size_t i = 1; i < cycle.size(); i += 2) cycle[i] -= n;
  cert.girth = cycle.size() / 2;
  cert.witness = std::move(cycle);
  return cert;
}

bool verify_graph_cycle(const Graph& g, const std::vector<std::uint32_t>& witness, std::size_t length) {
  if (witness.size() != length || length < 3) return false;
  std::set<std::uint32_t> distinct(witness.begin(), witness.end());
  if (distinct.size() != length) return false;
  for (std::size_t i = 0; i < length; ++i) {
    const auto u = witness[i];
    const auto v = witness[(i + 1) % length];
    if (u >= g.order() || v >= g.order() || !g.adjacent(u, v)) return false;
  }
  return true;
}

bool verify_berge_cycle(const Hypergraph& h, const std::vector<std::uint32_t>& witness, std::size_t length) {
  if (length < 2 || witness.size() != 2 * length) return false;
  std::set<std::uint32_t> vertices, edges;
  for (std::size_t i = 0; i < length; ++i) {
    const auto v = witness[2 * i];
    const auto e = witness[2 * i + 1];
    const auto next = witness[(2 * i + 2) % witness.size()];
    if (v >= h.order() || e >= h.size() || next >= h.order()) return false;
    if (!h.contains(e, v) || !h.contains(e, next)) return false;
    vertices.insert(v);
    edges.insert(e);
  }
  return vertices.size() == length && edges.size() == length;
}

}  // namespace hgcage
