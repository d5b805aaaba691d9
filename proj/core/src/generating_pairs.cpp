#include "hgcage/generating_pairs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hgcage {
namespace {

bool has_order_three(std::span<const Point> images) {
  bool identity = true;
  for (std::size_t p = 0; p < images.size(); ++p) {
    if (images[images[images[p]]] != p) return false;
    if (images[p] != p) identity = false;
  }
  return !identity;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    // Keep the smaller index as root so roots are the least members.
    if (y < x) std::swap(x, y);
    parent_[y] = x;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<ElementId> order_three_elements(const GroupTable& group) {
  std::vector<ElementId> result;
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (has_order_three(group.images(static_cast<ElementId>(x)))) {
      result.push_back(static_cast<ElementId>(x));
    }
  }
  return result;
}

std::size_t generated_order(const GroupTable& group, ElementId a, ElementId b) {
  const auto as = group.images(a);
  const auto bs = group.images(b);
  std::vector<bool> seen(group.order(), false);
  std::vector<ElementId> frontier{GroupTable::identity()};
  seen[GroupTable::identity()] = true;
  std::vector<Point> product(group.degree());
  std::size_t count = 1;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const auto xs = group.images(frontier[head]);
    for (const auto& gen : {as, bs}) {
      for (std::size_t p = 0; p < product.size(); ++p) product[p] = gen[xs[p]];
      const ElementId y = *group.find(product);
      if (!seen[y]) {
        seen[y] = true;
        frontier.push_back(y);
        ++count;
      }
    }
  }
  return count;
}

std::vector<GeneratorPair> pair_reps(const GroupTable& group, std::size_t max_subgroup_pairs) {
  const auto threes = order_three_elements(group);

  // Each cyclic subgroup of order 3 is labelled by its least non-identity id.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> subgroup_of(group.order(), kNone);
  std::vector<ElementId> labels;
  for (ElementId x : threes) {
    if (subgroup_of[x] != kNone) continue;
    const ElementId x2 = group.inverse(x);
    subgroup_of[x] = subgroup_of[x2] = labels.size();
    labels.push_back(std::min(x, x2));
  }
  const std::size_t k = labels.size();
  if (k < 2) return {};
  if (k * (k - 1) / 2 > max_subgroup_pairs) {
    throw std::length_error("too many order-3 subgroup pairs for exhaustive orbit computation");
  }

  // Conjugation action of each generator on the subgroups.
  std::vector<std::vector<std::size_t>> action;
  std::vector<Point> conj(group.degree());
  for (const auto& g : group.generators()) {
    const auto gs = g.images();
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto xs = group.images(labels[i]);
      // g^-1 x g maps g(p) to g(x(p)).
      for (std::size_t p = 0; p < conj.size(); ++p) conj[gs[p]] = gs[xs[p]];
      perm[i] = subgroup_of[*group.find(conj)];
    }
    action.push_back(std::move(perm));
  }

  // Triangular index of the unordered pair {i, j}, increasing in (i, j).
  auto pair_index = [k](std::size_t i, std::size_t j) {
    if (j < i) std::swap(i, j);
    return i * (2 * k - i - 1) / 2 + (j - i - 1);
  };
  DisjointSets orbits(k * (k - 1) / 2);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      for (const auto& perm : action) orbits.unite(pair_index(i, j), pair_index(perm[i], perm[j]));
    }
  }

  // Labels are ascending, so the orbit root (least pair index) is the
  // lexicographically least element-id pair of its class.
  std::vector<GeneratorPair> result;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const std::size_t idx = pair_index(i, j);
      if (orbits.find(idx) != idx) continue;
      if (generated_order(group, labels[i], labels[j]) != group.order()) continue;
      result.push_back({group.element(labels[i]), group.element(labels[j])});
    }
  }
  return result;
}

}  // namespace hgcage
