#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hgcage/permutation.hpp"

namespace hgcage {

/// Insert-only set of same-degree permutations, numbered in insertion order.
/// Images live in one flat array; the index is open addressing with linear
/// probing at load factor <= 1/2.
class PermIndex {
 public:
  explicit PermIndex(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return size_; }

  std::span<const Point> at(std::uint32_t id) const {
    return {storage_.data() + static_cast<std::size_t>(id) * degree_, degree_};
  }

  /// Returns (id, inserted).
  std::pair<std::uint32_t, bool> insert(std::span<const Point> images);
  std::optional<std::uint32_t> find(std::span<const Point> images) const;

  void reserve(std::size_t count);
  void shrink_to_fit() { storage_.shrink_to_fit(); }

 private:
  void rehash(std::size_t slot_count);

  std::size_t degree_;
  std::size_t size_ = 0;
  std::vector<Point> storage_;
  std::vector<std::uint32_t> slots_;
};

}  // namespace hgcage
