#include "hgcage/word_girth.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>
#include <vector>

#include "hgcage/perm_index.hpp"

namespace hgcage {
namespace {

struct Letter {
  Permutation value;
  char symbol;
};

/// Alternating words of one starting type, grouped by length. Elements are
/// deduplicated within a length, keeping the first word that reached them.
class WordTree {
 public:
  WordTree(std::size_t degree, std::array<const std::array<Letter, 2>*, 2> types)
      : degree_(degree), types_(types) {}

  void seed() {
    levels_.emplace_back(degree_);
    parents_.emplace_back();
    symbols_.emplace_back();
    for (const auto& letter : *types_[0]) {
      if (levels_[0].insert(letter.value.images()).second) {
        parents_[0].push_back(0);
        symbols_[0].push_back(letter.symbol);
      }
    }
  }

  /// Appends the next length; letters alternate starting with types_[0].
  void grow() {
    const std::size_t depth = levels_.size();  // next word length is depth + 1
    const auto& letters = *types_[depth % 2];
    const PermIndex& prev = levels_.back();
    PermIndex next(degree_);
    next.reserve(2 * prev.size());
    std::vector<std::uint32_t> parents;
    std::vector<char> symbols;
    std::vector<Point> product(degree_);
    for (std::uint32_t id = 0; id < prev.size(); ++id) {
      const auto w = prev.at(id);
      for (const auto& letter : letters) {
        const auto x = letter.value.images();
        for (std::size_t p = 0; p < degree_; ++p) product[p] = x[w[p]];
        if (next.insert(product).second) {
          parents.push_back(id);
          symbols.push_back(letter.symbol);
        }
      }
    }
    levels_.push_back(std::move(next));
    parents_.push_back(std::move(parents));
    symbols_.push_back(std::move(symbols));
  }

  const PermIndex& last() const { return levels_.back(); }

  std::string word(std::uint32_t id) const {
    std::string out;
    for (std::size_t level = levels_.size(); level-- > 0;) {
      out.push_back(symbols_[level][id]);
      id = parents_[level][id];
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  std::size_t degree_;
  std::array<const std::array<Letter, 2>*, 2> types_;
  std::vector<PermIndex> levels_;
  std::vector<std::vector<std::uint32_t>> parents_;
  std::vector<std::vector<char>> symbols_;
};

std::string inverse_word(std::string_view word) {
  std::string out(word.rbegin(), word.rend());
  for (char& c : out) {
    c = std::islower(static_cast<unsigned char>(c)) ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
                                                    : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

void check_pair(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("a and b have different degrees");
  if (element_order(a) != 3 || element_order(b) != 3) {
    throw std::invalid_argument("a and b must both have order 3");
  }
  if (b == a || b == a.inverse()) throw std::invalid_argument("a and b generate the same cyclic subgroup");
}

}  // namespace

WordGirth alternating_word_girth(const Permutation& a, const Permutation& b, const WordGirthOptions& options) {
  check_pair(a, b);
  const std::array<Letter, 2> alpha{{{a, 'a'}, {a.inverse(), 'A'}}};
  const std::array<Letter, 2> beta{{{b, 'b'}, {b.inverse(), 'B'}}};

  WordTree from_a(a.degree(), {&alpha, &beta});
  WordTree from_b(a.degree(), {&beta, &alpha});
  from_a.seed();
  from_b.seed();

  WordGirth result;
  result.states = from_a.last().size() + from_b.last().size();
  for (std::size_t half = 1; half <= options.cap; ++half) {
    if (half > 1) {
      if (result.states + 2 * (from_a.last().size() + from_b.last().size()) > 2 * options.max_states) {
        result.budget_exhausted = true;
        return result;
      }
      from_a.grow();
      from_b.grow();
      result.states += from_a.last().size() + from_b.last().size();
    }
    const PermIndex& left = from_a.last();
    const PermIndex& right = from_b.last();
    for (std::uint32_t id = 0; id < left.size(); ++id) {
      if (const auto match = right.find(left.at(id))) {
        result.girth = 2 * half;
        result.witness = from_a.word(id) + inverse_word(from_b.word(*match));
        return result;
      }
    }
  }
  return result;
}

Permutation evaluate_word(std::string_view word, const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("a and b have different degrees");
  const Permutation a_inv = a.inverse();
  const Permutation b_inv = b.inverse();
  Permutation result(a.degree());
  for (char c : word) {
    switch (c) {
      case 'a': result = result * a; break;
      case 'A': result = result * a_inv; break;
      case 'b': result = result * b; break;
      case 'B': result = result * b_inv; break;
      default: throw std::invalid_argument(std::string("bad letter '") + c + "' in word");
    }
  }
  return result;
}

Graph dual_cubic_graph(const GroupTable& group, const Permutation& a, const Permutation& b) {
  check_pair(a, b);
  if (!group.contains(a) || !group.contains(b)) throw std::invalid_argument("a and b must lie in the group");
  if (group.order() % 3 != 0) throw std::invalid_argument("group order is not divisible by 3");

  auto coset_labels = [&group](const Permutation& s) {
    const auto step = group.right_multiplication(s);
    constexpr VertexId kUnset = static_cast<VertexId>(-1);
    std::vector<VertexId> label(group.order(), kUnset);
    VertexId next = 0;
    for (ElementId x = 0; x < group.order(); ++x) {
      if (label[x] != kUnset) continue;
      for (ElementId y = x; label[y] == kUnset; y = step[y]) label[y] = next;
      ++next;
    }
    return label;
  };
  const auto black = coset_labels(a);
  const auto white = coset_labels(b);
  const auto offset = static_cast<VertexId>(group.order() / 3);

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(group.order());
  for (ElementId x = 0; x < group.order(); ++x) edges.emplace_back(black[x], offset + white[x]);
  return Graph(2 * group.order() / 3, edges);
}

}  // namespace hgcage
