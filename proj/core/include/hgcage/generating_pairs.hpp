#pragma once

#include <cstddef>
#include <vector>

#include "hgcage/group_table.hpp"
#include "hgcage/permutation.hpp"

namespace hgcage {

struct GeneratorPair {
  Permutation a;
  Permutation b;

  friend bool operator==(const GeneratorPair&, const GeneratorPair&) = default;
};

/// Ids of all elements of order exactly 3, ascending.
std::vector<ElementId> order_three_elements(const GroupTable& group);

/// Size of the subgroup generated by the two elements (closure inside `group`).
std::size_t generated_order(const GroupTable& group, ElementId a, ElementId b);

/// Representatives of pairs (a, b) of order-3 elements with <a> != <b> and
/// <a, b> = G, up to simultaneous conjugation, inversion of either entry, and
/// swapping the entries. Each representative is the lexicographically least
/// (by element id) pair in its class; the list is sorted.
///
/// Classes are taken under conjugation by G only, so when G has outer
/// automorphisms the result can contain several representatives of one
/// automorphism class. Throws std::length_error when the number of subgroup
/// pairs exceeds `max_subgroup_pairs`.
std::vector<GeneratorPair> pair_reps(const GroupTable& group,
                                     std::size_t max_subgroup_pairs = 20'000'000);

}  // namespace hgcage
