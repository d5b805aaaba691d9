#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "hgcage/graph.hpp"
#include "hgcage/group_table.hpp"
#include "hgcage/permutation.hpp"

namespace hgcage {

struct WordGirthOptions {
  /// Longest half-word explored; girths up to 2 * cap are found.
  std::size_t cap = 40;
  /// Upper bound on stored elements per side before giving up.
  std::size_t max_states = 1u << 24;
};

/// Shortest alternating relator of a pair of order-3 permutations.
struct WordGirth {
  /// Even length of the shortest word x1 y2 x3 y4 ... = 1 with x in {a, a^-1}
  /// and y in {b, b^-1}; nullopt when none exists within the cap or budget.
  std::optional<std::size_t> girth;
  /// The relator over {a, A, b, B}, capitals denoting inverses.
  std::string witness;
  /// Elements stored across both sides of the search.
  std::size_t states = 0;
  /// True when the search stopped on max_states rather than the cap.
  bool budget_exhausted = false;
};

/// Girth of the 3-Cayley hypergraph of <a, b> with connection set {a, b},
/// computed without enumerating the group.
///
/// Words of length h starting with an a-letter are grown on one side and
/// words of length h starting with a b-letter on the other; the first h with
/// a common element u = v gives the relator u v^-1 of length 2h. Both sides
/// hold at most 2^h elements, so girth 32 needs about 2 * 65536 states.
/// Throws std::invalid_argument unless a and b have order 3, equal degree and
/// generate distinct cyclic subgroups.
WordGirth alternating_word_girth(const Permutation& a, const Permutation& b,
                                 const WordGirthOptions& options = {});

/// Product of a word over {a, A, b, B}.
Permutation evaluate_word(std::string_view word, const Permutation& a, const Permutation& b);

/// Dual of the 3-Cayley hypergraph: left cosets of <a> (vertices 0..|G|/3-1)
/// and of <b> (the next |G|/3), one edge {x<a>, x<b>} per element x. Cosets are
/// numbered by their least element id. Throws std::invalid_argument if a or b
/// is not an order-3 element of the group, or <a> and <b> intersect.
Graph dual_cubic_graph(const GroupTable& group, const Permutation& a, const Permutation& b);

}  // namespace hgcage
