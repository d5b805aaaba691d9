#include "hgcage/perm_index.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hgcage {
namespace {

constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

}  // namespace

PermIndex::PermIndex(std::size_t degree) : degree_(degree), slots_(64, kEmpty) {}

void PermIndex::reserve(std::size_t count) {
  storage_.reserve(count * degree_);
  std::size_t slots = slots_.size();
  while (slots < 2 * count) slots *= 2;
  if (slots != slots_.size()) rehash(slots);
}

void PermIndex::rehash(std::size_t slot_count) {
  std::vector<std::uint32_t> fresh(slot_count, kEmpty);
  const std::size_t mask = slot_count - 1;
  for (std::size_t id = 0; id < size_; ++id) {
    std::size_t slot = hash_images(at(static_cast<std::uint32_t>(id))) & mask;
    while (fresh[slot] != kEmpty) slot = (slot + 1) & mask;
    fresh[slot] = static_cast<std::uint32_t>(id);
  }
  slots_ = std::move(fresh);
}

std::pair<std::uint32_t, bool> PermIndex::insert(std::span<const Point> images) {
  if (images.size() != degree_) throw std::invalid_argument("degree mismatch in PermIndex");
  if (size_ + 1 >= kEmpty) throw std::length_error("PermIndex is full");
  if ((size_ + 1) * 2 > slots_.size()) rehash(slots_.size() * 2);
  const std::size_t mask = slots_.size() - 1;
  std::size_t slot = hash_images(images) & mask;
  while (slots_[slot] != kEmpty) {
    const std::uint32_t candidate = slots_[slot];
    if (std::equal(images.begin(), images.end(), storage_.begin() + candidate * degree_)) {
      return {candidate, false};
    }
    slot = (slot + 1) & mask;
  }
  const auto id = static_cast<std::uint32_t>(size_);
  slots_[slot] = id;
  storage_.insert(storage_.end(), images.begin(), images.end());
  ++size_;
  return {id, true};
}

std::optional<std::uint32_t> PermIndex::find(std::span<const Point> images) const {
  if (images.size() != degree_) return std::nullopt;
  const std::size_t mask = slots_.size() - 1;
  std::size_t slot = hash_images(images) & mask;
  while (slots_[slot] != kEmpty) {
    const std::uint32_t candidate = slots_[slot];
    if (std::equal(images.begin(), images.end(), storage_.begin() + candidate * degree_)) {
      return candidate;
    }
    slot = (slot + 1) & mask;
  }
  return std::nullopt;
}

}  // namespace hgcage
