#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hgcage/perm_index.hpp"
#include "hgcage/permutation.hpp"

namespace hgcage {

using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultEnumerationCap = 3'000'000;

/// Thrown when breadth-first closure would exceed the enumeration cap.
class GroupTooLarge : public std::runtime_error {
 public:
  explicit GroupTooLarge(std::size_t cap);
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// A fully enumerated permutation group.
///
/// Elements are numbered in breadth-first order from the identity (id 0) by
/// right multiplication with the generators. Storage is a PermIndex, so
/// groups of a few million elements on under a hundred points fit in memory.
class GroupTable {
 public:
  /// Breadth-first closure of `generators`; throws GroupTooLarge past `cap`.
  static GroupTable generate(std::vector<Permutation> generators,
                             std::size_t cap = kDefaultEnumerationCap);

  std::size_t order() const noexcept { return index_.size(); }
  std::size_t degree() const noexcept { return index_.degree(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  static constexpr ElementId identity() noexcept { return 0; }

  std::span<const Point> images(ElementId id) const { return index_.at(id); }
  Permutation element(ElementId id) const;

  std::optional<ElementId> find(std::span<const Point> images) const { return index_.find(images); }
  std::optional<ElementId> find(const Permutation& p) const { return find(p.images()); }
  bool contains(const Permutation& p) const { return find(p).has_value(); }

  /// Id of `x * generators()[gen]`, recorded during enumeration.
  ElementId step(std::size_t gen, ElementId x) const { return steps_[gen][x]; }

  ElementId multiply(ElementId x, ElementId y) const;
  ElementId inverse(ElementId x) const;

  /// The map x -> x * s over all elements; throws if s is not in the group.
  std::vector<ElementId> right_multiplication(const Permutation& s) const;

  std::uint64_t element_order(ElementId x) const;

 private:
  GroupTable(std::vector<Permutation> generators, std::size_t degree)
      : generators_(std::move(generators)), index_(degree) {}

  std::vector<Permutation> generators_;
  PermIndex index_;
  std::vector<std::vector<ElementId>> steps_;
};

/// Convenience wrapper matching the free-function style of the rest of the API.
inline GroupTable generate_group(std::vector<Permutation> generators,
                                 std::size_t cap = kDefaultEnumerationCap) {
  return GroupTable::generate(std::move(generators), cap);
}

}  // namespace hgcage
