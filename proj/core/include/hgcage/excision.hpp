#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hgcage/graph.hpp"

namespace hgcage {

class ExcisionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One excision, in the vertex ids of the graph it was applied to.
struct ExcisionStep {
  std::vector<VertexId> removed;                       // sorted
  std::vector<std::pair<VertexId, VertexId>> added;    // new edges between boundary vertices
  std::size_t tree_depth = 0;                          // BFS depth for ball trees, 0 otherwise
};

struct Excised {
  Graph graph;  // survivors renumbered in increasing original order
  ExcisionStep step;
};

/// Vertices outside `tree` adjacent to it, in increasing order. Throws
/// ExcisionError unless g is cubic, `tree` is nonempty with an even number
/// of distinct vertices inducing a tree, and every boundary vertex has
/// exactly one neighbour in the tree.
std::vector<VertexId> excision_boundary(const Graph& g, std::span<const VertexId> tree);

/// Removes `tree` and pairs up the exposed degree-2 vertices with new edges.
///
/// Pairs are chosen by backtracking: the first unpaired boundary vertex is
/// joined to an unpaired partner at current distance >= min_girth - 1,
/// trying the farthest partners first. The result is cubic with girth at
/// least min_girth provided g - tree already has girth >= min_girth (true
/// whenever g does; not re-checked here). Returns nullopt when no pairing
/// exists or the search visits more than `budget` nodes.
std::optional<Excised> excise_tree(const Graph& g, std::span<const VertexId> tree, std::size_t min_girth,
                                   std::size_t budget = 100'000);

/// Vertices within distance `depth` of `root`.
std::vector<VertexId> ball(const Graph& g, VertexId root, std::size_t depth);

struct GreedyOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 20'000;          // backtracking nodes per excise_tree call
  std::size_t tree_attempts = 2'000;    // 4-vertex trees tried before giving up
};

struct ExcisionRun {
  Graph graph;
  std::vector<ExcisionStep> steps;
  std::size_t input_girth = 0;
  std::size_t attempts = 0;  // 4-vertex trees tried
};

/// First excises the largest breadth-first ball (from a seeded root) that
/// admits a valid pairing, then keeps excising 4-vertex trees, visited in a
/// seeded order, until a full pass or the attempt budget yields no progress.
/// Throws ExcisionError unless g is cubic with girth >= min_girth.
ExcisionRun excise_greedy(const Graph& g, std::size_t min_girth, const GreedyOptions& options = {});

}  // namespace hgcage
