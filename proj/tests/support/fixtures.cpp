#include "fixtures.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace hgcage::testing {

Graph lcf(std::size_t n, const std::vector<int>& jumps) {
  std::set<std::pair<VertexId, VertexId>> edges;
  auto add = [&edges](VertexId u, VertexId v) { edges.emplace(std::min(u, v), std::max(u, v)); };
  const auto sn = static_cast<long>(n);
  for (std::size_t i = 0; i < n; ++i) {
    add(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
    const long j = ((static_cast<long>(i) + jumps[i % jumps.size()]) % sn + sn) % sn;
    add(static_cast<VertexId>(i), static_cast<VertexId>(j));
  }
  return Graph(n, std::vector<std::pair<VertexId, VertexId>>(edges.begin(), edges.end()));
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u) edges.emplace_back(u, static_cast<VertexId>((u + 1) % n));
  return Graph(n, edges);
}

Graph k33() { return lcf(6, {3}); }

Graph petersen() {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph(10, edges);
}

Graph heawood() { return lcf(14, {5, -5}); }
Graph tutte_coxeter() { return lcf(30, {-13, -9, 7, -7, 9, 13}); }
Graph mcgee() { return lcf(24, {12, 7, -7}); }

Graph balaban_ten_cage() {
  return lcf(70, {-9,  -25, -19, 29,  13,  35,  -13, -29, 19,  25,  9,   -29, 29,  17,  33,  21,  9,   -13,
                  -31, -9,  25,  17,  9,   -31, 27,  -9,  17,  -19, -29, 27,  -17, -9,  -29, 33,  -25, 25,
                  -21, 17,  -17, 29,  35,  -29, 17,  -17, 21,  -25, 25,  -33, 29,  9,   17,  -27, 29,  19,
                  -17, 9,   -27, 31,  -9,  -17, -25, 9,   31,  13,  -9,  -21, -33, -17, -29, 29});
}

Graph benson() {
  return lcf(126, {17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21, 57, 11, -21, -57, 59, -17});
}

Hypergraph fano() {
  return Hypergraph(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

std::optional<std::size_t> edge_deletion_girth(const Graph& g) {
  std::optional<std::size_t> best;
  std::vector<std::size_t> dist(g.order());
  for (const auto& [u, v] : g.edges()) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
    std::deque<VertexId> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : g.neighbors(x)) {
        if ((x == u && y == v) || (x == v && y == u)) continue;
        if (dist[y] == std::numeric_limits<std::size_t>::max()) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    if (dist[v] != std::numeric_limits<std::size_t>::max() && (!best || dist[v] + 1 < *best)) best = dist[v] + 1;
  }
  return best;
}

namespace {

struct BergeSearch {
  const Hypergraph& h;
  std::vector<bool> vertex_used;
  std::vector<bool> edge_used;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  VertexId start = 0;

  explicit BergeSearch(const Hypergraph& hg) : h(hg), vertex_used(hg.order()), edge_used(hg.size()) {}

  // At vertex v after `length` vertex/edge steps from start.
  void extend(VertexId v, std::size_t length) {
    if (length + 1 >= best) return;
    for (EdgeId e : h.incident(v)) {
      if (edge_used[e]) continue;
      if (length >= 1 && h.contains(e, start)) {
        best = length + 1;
        return;
      }
    }
    for (EdgeId e : h.incident(v)) {
      if (edge_used[e]) continue;
      edge_used[e] = true;
      for (VertexId w : h.edge(e)) {
        if (w <= start || vertex_used[w]) continue;
        vertex_used[w] = true;
        extend(w, length + 1);
        vertex_used[w] = false;
      }
      edge_used[e] = false;
    }
  }
};

}  // namespace

std::optional<std::size_t> brute_berge_girth(const Hypergraph& h) {
  BergeSearch search(h);
  for (VertexId v = 0; v < h.order(); ++v) {
    search.start = v;
    search.vertex_used[v] = true;
    search.extend(v, 0);
    search.vertex_used[v] = false;
  }
  if (search.best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return search.best;
}

namespace {

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  const std::vector<int>& ca;
  const std::vector<int>& cb;
  std::vector<VertexId> order;  // a's vertices, each after a neighbour where possible
  std::vector<std::int64_t> map;
  std::vector<bool> taken;

  bool compatible(VertexId x, VertexId y) const {
    if (a.degree(x) != b.degree(y)) return false;
    if (!ca.empty() && ca[x] != cb[y]) return false;
    for (VertexId w : a.neighbors(x)) {
      if (map[w] >= 0 && !b.adjacent(y, static_cast<VertexId>(map[w]))) return false;
    }
    return true;
  }

  bool solve(std::size_t i) {
    if (i == order.size()) return true;
    const VertexId x = order[i];
    for (VertexId y = 0; y < b.order(); ++y) {
      if (taken[y] || !compatible(x, y)) continue;
      map[x] = y;
      taken[y] = true;
      if (solve(i + 1)) return true;
      taken[y] = false;
      map[x] = -1;
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const Graph& a, const Graph& b, const std::vector<int>& colour_a, const std::vector<int>& colour_b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto degrees = [](const Graph& g) {
    std::vector<std::size_t> d;
    for (VertexId v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;

  IsoSearch search{a, b, colour_a, colour_b, {}, std::vector<std::int64_t>(a.order(), -1),
                   std::vector<bool>(b.order(), false)};
  std::vector<bool> queued(a.order(), false);
  for (VertexId s = 0; s < a.order(); ++s) {
    if (queued[s]) continue;
    queued[s] = true;
    const std::size_t first = search.order.size();
    search.order.push_back(s);
    for (std::size_t head = first; head < search.order.size(); ++head) {
      for (VertexId w : a.neighbors(search.order[head])) {
        if (!queued[w]) {
          queued[w] = true;
          search.order.push_back(w);
        }
      }
    }
  }
  return search.solve(0);
}

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> colour(a.order() + a.size(), 1);
  std::fill(colour.begin(), colour.begin() + static_cast<long>(a.order()), 0);
  return isomorphic(levi(a), levi(b), colour, colour);
}

Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> size_dist(1, std::min(max_size, n));
  // Keep m at most half the number of available edges so retries end quickly.
  std::size_t available = 0;
  for (std::size_t k = 1, binom = n; k <= std::min(max_size, n); ++k, binom = binom * (n - k + 1) / k) {
    available += binom;
  }
  m = std::clamp<std::size_t>(m, 1, std::max<std::size_t>(1, available / 2));
  std::uniform_int_distribution<VertexId> vertex_dist(0, static_cast<VertexId>(n - 1));
  for (;;) {
    std::vector<std::set<VertexId>> edges(m);
    std::vector<bool> covered(n, false);
    for (auto& e : edges) {
      const std::size_t k = size_dist(rng);
      while (e.size() < k) e.insert(vertex_dist(rng));
      for (VertexId v : e) covered[v] = true;
    }
    // Uncovered vertices join a random edge, which may then exceed max_size.
    for (VertexId v = 0; v < n; ++v) {
      if (!covered[v]) edges[rng() % m].insert(v);
    }
    std::set<std::vector<VertexId>> distinct;
    for (const auto& e : edges) distinct.emplace(e.begin(), e.end());
    if (distinct.size() == m) {
      return Hypergraph(n, std::vector<std::vector<VertexId>>(distinct.begin(), distinct.end()));
    }
  }
}

std::optional<std::pair<Graph, std::size_t>> colour_classes_first(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  std::vector<VertexId> label(g.order());
  std::size_t black = 0;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (colour[s] >= 0) continue;
    std::vector<VertexId> queue{s};
    colour[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId w : g.neighbors(queue[head])) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[queue[head]];
          queue.push_back(w);
        } else if (colour[w] == colour[queue[head]]) {
          return std::nullopt;
        }
      }
    }
  }
  VertexId next = 0;
  for (int c : {0, 1}) {
    for (VertexId v = 0; v < g.order(); ++v) {
      if (colour[v] == c) label[v] = next++;
    }
    if (c == 0) black = next;
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(label[u], label[v]);
  return std::make_pair(Graph(g.order(), edges), black);
}

Permutation random_permutation(std::mt19937_64& rng, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

std::set<IdPair> all_valid_pairs(const GroupTable& group) {
  std::vector<ElementId> threes;
  for (ElementId x = 0; x < group.order(); ++x) {
    if (group.element_order(x) == 3) threes.push_back(x);
  }
  std::set<IdPair> out;
  for (ElementId x : threes) {
    for (ElementId y : threes) {
      if (y == x || y == group.inverse(x)) continue;
      if (GroupTable::generate({group.element(x), group.element(y)}).order() == group.order()) out.emplace(x, y);
    }
  }
  return out;
}

std::set<IdPair> pair_orbit(const GroupTable& group, IdPair pair) {
  std::set<IdPair> out;
  for (ElementId g = 0; g < group.order(); ++g) {
    auto conj = [&](ElementId x) { return group.multiply(group.multiply(group.inverse(g), x), g); };
    for (ElementId a : {conj(pair.first), group.inverse(conj(pair.first))}) {
      for (ElementId b : {conj(pair.second), group.inverse(conj(pair.second))}) {
        out.emplace(a, b);
        out.emplace(b, a);
      }
    }
  }
  return out;
}

}  // namespace hgcage::testing
