#include "hgcage/excision.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <random>

#include "hgcage/girth.hpp"

namespace hgcage {
namespace {

constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Flat adjacency for graphs of maximum degree 3 that is cheap to copy.
struct CubicAdjacency {
  std::vector<std::array<VertexId, 3>> nbr;
  std::vector<std::uint8_t> deg;

  explicit CubicAdjacency(const Graph& g) : nbr(g.order()), deg(g.order(), 0) {
    for (VertexId v = 0; v < g.order(); ++v) {
      for (VertexId w : g.neighbors(v)) nbr[v][deg[v]++] = w;
    }
  }

  void remove_vertex(VertexId v) {
    for (std::uint8_t i = 0; i < deg[v]; ++i) {
      const VertexId w = nbr[v][i];
      auto& wn = nbr[w];
      auto end = wn.begin() + deg[w];
      *std::find(wn.begin(), end, v) = *(end - 1);
      --deg[w];
    }
    deg[v] = 0;
  }
  void add_edge(VertexId u, VertexId v) {
    nbr[u][deg[u]++] = v;
    nbr[v][deg[v]++] = u;
  }
  /// Undoes the most recent add_edge(u, v).
  void pop_edge(VertexId u, VertexId v) {
    --deg[u];
    --deg[v];
  }
};

class PairingSearch {
 public:
  PairingSearch(CubicAdjacency adjacency, std::vector<VertexId> boundary, std::size_t min_girth, std::size_t budget)
      : adj_(std::move(adjacency)),
        boundary_(std::move(boundary)),
        paired_(boundary_.size(), false),
        slot_of_(adj_.nbr.size(), kNoVertex),
        seen_(adj_.nbr.size(), 0),
        dist_(adj_.nbr.size(), 0),
        queue_(adj_.nbr.size()),
        min_girth_(min_girth),
        budget_(budget) {
    for (std::size_t i = 0; i < boundary_.size(); ++i) slot_of_[boundary_[i]] = static_cast<VertexId>(i);
  }

  bool run() { return solve(0); }
  const std::vector<std::pair<VertexId, VertexId>>& added() const { return added_; }

 private:
  /// Distances from boundary_[from] to every unpaired boundary vertex.
  std::vector<std::size_t> distances(std::size_t from) {
    std::vector<std::size_t> out(boundary_.size(), kUnreachable);
    std::size_t remaining = 0;
    for (std::size_t i = 0; i < boundary_.size(); ++i) remaining += (!paired_[i] && i != from);
    ++stamp_;
    std::size_t head = 0, tail = 0;
    const VertexId root = boundary_[from];
    queue_[tail++] = root;
    seen_[root] = stamp_;
    dist_[root] = 0;
    while (head < tail && remaining > 0) {
      const VertexId u = queue_[head++];
      for (std::uint8_t i = 0; i < adj_.deg[u]; ++i) {
        const VertexId w = adj_.nbr[u][i];
        if (seen_[w] == stamp_) continue;
        seen_[w] = stamp_;
        dist_[w] = dist_[u] + 1;
        queue_[tail++] = w;
        const VertexId slot = slot_of_[w];
        if (slot != kNoVertex && !paired_[slot]) {
          out[slot] = dist_[w];
          --remaining;
        }
      }
    }
    return out;
  }

  bool solve(std::size_t start) {
    std::size_t first = start;
    while (first < boundary_.size() && paired_[first]) ++first;
    if (first == boundary_.size()) return true;

    const auto dist = distances(first);
    std::vector<std::size_t> candidates;
    for (std::size_t j = first + 1; j < boundary_.size(); ++j) {
      if (paired_[j]) continue;
      // A new edge closes cycles of length dist + 1 and no shorter.
      if (dist[j] == kUnreachable || dist[j] + 1 >= min_girth_) candidates.push_back(j);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&dist](std::size_t x, std::size_t y) { return dist[x] > dist[y]; });

    paired_[first] = true;
    for (std::size_t j : candidates) {
      if (++nodes_ > budget_) break;
      const VertexId u = boundary_[first];
      const VertexId v = boundary_[j];
      paired_[j] = true;
      adj_.add_edge(u, v);
      added_.emplace_back(u, v);
      if (solve(first + 1)) return true;
      added_.pop_back();
      adj_.pop_edge(u, v);
      paired_[j] = false;
    }
    paired_[first] = false;
    return false;
  }

  CubicAdjacency adj_;
  std::vector<VertexId> boundary_;
  std::vector<bool> paired_;
  std::vector<VertexId> slot_of_;
  std::vector<std::uint32_t> seen_;
  std::vector<std::size_t> dist_;
  std::vector<VertexId> queue_;
  std::uint32_t stamp_ = 0;
  std::size_t min_girth_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<std::pair<VertexId, VertexId>> added_;
};

Graph rebuild(const Graph& g, const std::vector<bool>& removed, const std::vector<std::pair<VertexId, VertexId>>& added) {
  std::vector<VertexId> relabel(g.order(), kNoVertex);
  VertexId next = 0;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!removed[v]) relabel[v] = next++;
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& [u, v] : g.edges()) {
    if (!removed[u] && !removed[v]) edges.emplace_back(relabel[u], relabel[v]);
  }
  for (const auto& [u, v] : added) edges.emplace_back(relabel[u], relabel[v]);
  return Graph(next, edges);
}

/// Paths a-b-c-d (b < c) and stars, each as a vertex list.
std::vector<std::vector<VertexId>> four_vertex_trees(const Graph& g) {
  std::vector<std::vector<VertexId>> trees;
  for (VertexId v = 0; v < g.order(); ++v) {
    const auto n = g.neighbors(v);
    if (n.size() == 3) trees.push_back({v, n[0], n[1], n[2]});
  }
  for (const auto& [b, c] : g.edges()) {
    for (VertexId a : g.neighbors(b)) {
      if (a == c) continue;
      for (VertexId d : g.neighbors(c)) {
        if (d == b || d == a) continue;
        trees.push_back({a, b, c, d});
      }
    }
  }
  return trees;
}

}  // namespace

std::vector<VertexId> excision_boundary(const Graph& g, std::span<const VertexId> tree) {
  if (!g.is_regular(3)) throw ExcisionError("graph is not cubic");
  if (tree.empty()) throw ExcisionError("tree is empty");
  if (tree.size() % 2 != 0) throw ExcisionError("tree must have an even number of vertices");
  std::vector<bool> in_tree(g.order(), false);
  for (VertexId v : tree) {
    if (v >= g.order()) throw ExcisionError("tree vertex out of range");
    if (in_tree[v]) throw ExcisionError("tree repeats a vertex");
    in_tree[v] = true;
  }

  // Induced tree: connected with exactly |tree| - 1 internal edges.
  std::size_t internal = 0;
  std::vector<VertexId> boundary;
  std::vector<bool> reached(g.order(), false);
  std::vector<VertexId> stack{tree.front()};
  reached[tree.front()] = true;
  std::size_t visited = 0;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    ++visited;
    for (VertexId w : g.neighbors(u)) {
      if (!in_tree[w]) continue;
      ++internal;
      if (!reached[w]) {
        reached[w] = true;
        stack.push_back(w);
      }
    }
  }
  internal /= 2;
  if (visited != tree.size()) throw ExcisionError("tree vertices are not connected");
  if (internal != tree.size() - 1) throw ExcisionError("tree vertices induce a cycle");

  for (VertexId v : tree) {
    for (VertexId w : g.neighbors(v)) {
      if (!in_tree[w]) boundary.push_back(w);
    }
  }
  std::sort(boundary.begin(), boundary.end());
  if (std::adjacent_find(boundary.begin(), boundary.end()) != boundary.end()) {
    throw ExcisionError("a boundary vertex has two neighbours in the tree");
  }
  return boundary;
}

std::optional<Excised> excise_tree(const Graph& g, std::span<const VertexId> tree, std::size_t min_girth,
                                   std::size_t budget) {
  if (min_girth < 3) throw ExcisionError("min_girth must be at least 3");
  auto boundary = excision_boundary(g, tree);

  CubicAdjacency adjacency(g);
  std::vector<bool> removed(g.order(), false);
  for (VertexId v : tree) {
    removed[v] = true;
    adjacency.remove_vertex(v);
  }
  PairingSearch search(std::move(adjacency), boundary, min_girth, budget);
  if (!search.run()) return std::nullopt;

  Excised result;
  result.step.removed.assign(tree.begin(), tree.end());
  std::sort(result.step.removed.begin(), result.step.removed.end());
  result.step.added = search.added();
  result.graph = rebuild(g, removed, result.step.added);
  return result;
}

std::vector<VertexId> ball(const Graph& g, VertexId root, std::size_t depth) {
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::vector<VertexId> order{root};
  dist[root] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId u = order[head];
    if (dist[u] == depth) continue;
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        order.push_back(w);
      }
    }
  }
  return order;
}

ExcisionRun excise_greedy(const Graph& g, std::size_t min_girth, const GreedyOptions& options) {
  if (min_girth < 3) throw ExcisionError("min_girth must be at least 3");
  if (g.order() == 0 || !g.is_regular(3)) throw ExcisionError("graph is not cubic");
  const auto girth = graph_girth(g);
  if (!girth.found() || *girth.girth < min_girth) {
    throw ExcisionError("graph girth is below min_girth");
  }

  ExcisionRun run{g, {}, *girth.girth, 0};
  std::mt19937_64 rng(options.seed);

  // A ball of radius D is an induced tree with distinct boundary vertices
  // when the girth is at least 2D + 3; it has 3 * 2^D - 2 vertices.
  const std::size_t root = static_cast<std::size_t>(rng() % g.order());
  std::size_t max_depth = (run.input_girth - 3) / 2;
  while (max_depth > 0 && 3 * (std::size_t{1} << max_depth) >= g.order()) --max_depth;
  for (std::size_t depth = max_depth; depth >= 1; --depth) {
    const auto tree = ball(run.graph, static_cast<VertexId>(root), depth);
    std::optional<Excised> excised;
    try {
      excised = excise_tree(run.graph, tree, min_girth, options.budget);
    } catch (const ExcisionError&) {
      continue;
    }
    if (excised) {
      excised->step.tree_depth = depth;
      run.graph = std::move(excised->graph);
      run.steps.push_back(std::move(excised->step));
      break;
    }
  }

  bool progress = true;
  while (progress && run.attempts < options.tree_attempts) {
    progress = false;
    auto trees = four_vertex_trees(run.graph);
    std::shuffle(trees.begin(), trees.end(), rng);
    for (const auto& tree : trees) {
      if (run.attempts >= options.tree_attempts) break;
      ++run.attempts;
      std::optional<Excised> excised;
      try {
        excised = excise_tree(run.graph, tree, min_girth, options.budget);
      } catch (const ExcisionError&) {
        continue;  // not an induced tree here, or its boundary repeats
      }
      if (excised) {
        run.graph = std::move(excised->graph);
        run.steps.push_back(std::move(excised->step));
        progress = true;
        break;
      }
    }
  }
  return run;
}

}  // namespace hgcage
