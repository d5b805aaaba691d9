#pragma once

// Named graphs and brute-force oracles shared by the unit and acceptance tests.
// Nothing here calls the BFS girth code, so results can be compared against it.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hgcage/graph.hpp"
#include "hgcage/group_table.hpp"
#include "hgcage/hypergraph.hpp"
#include "hgcage/permutation.hpp"

namespace hgcage::testing {

/// Hamiltonian cubic graph in LCF notation: cycle 0..n-1 plus chords i ~ i + jumps[i % len].
Graph lcf(std::size_t n, const std::vector<int>& jumps);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph k33();
Graph petersen();
Graph heawood();
Graph tutte_coxeter();
Graph mcgee();
/// A (3,10)-cage on 70 vertices.
Graph balaban_ten_cage();
/// The (3,12)-cage on 126 vertices.
Graph benson();
Hypergraph fano();

/// Girth as min over edges uv of 1 + dist(u, v) in G - uv; nullopt for forests.
std::optional<std::size_t> edge_deletion_girth(const Graph& g);

/// Shortest Berge cycle by exhaustive depth-first enumeration; nullopt if none.
std::optional<std::size_t> brute_berge_girth(const Hypergraph& h);

/// Backtracking isomorphism test. When `colour_a`/`colour_b` are given, the
/// map must send colour classes to colour classes with the same label.
bool isomorphic(const Graph& a, const Graph& b, const std::vector<int>& colour_a = {},
                const std::vector<int>& colour_b = {});

/// Isomorphism of hypergraphs via their bicoloured Levi graphs.
bool isomorphic(const Hypergraph& a, const Hypergraph& b);

/// Random hypergraph on n vertices with m distinct edges, every vertex covered.
/// Edges have 1..max_size vertices before uncovered vertices are added to
/// random edges. m is clamped to half the number of possible edges.
Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t max_size);

/// Relabels a bipartite graph so one colour class comes first; returns the
/// graph and the size of that class, or nullopt if g is not bipartite.
std::optional<std::pair<Graph, std::size_t>> colour_classes_first(const Graph& g);

/// Random permutation of the given degree.
Permutation random_permutation(std::mt19937_64& rng, std::size_t degree);

using IdPair = std::pair<ElementId, ElementId>;

/// Every ordered pair of order-3 elements with distinct cyclic subgroups that
/// generates the whole group, found by closing each pair separately.
std::set<IdPair> all_valid_pairs(const GroupTable& group);

/// Images of (a, b) under conjugation, inversion of either entry and swapping.
std::set<IdPair> pair_orbit(const GroupTable& group, IdPair pair);

}  // namespace hgcage::testing
