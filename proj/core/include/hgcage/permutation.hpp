#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hgcage {

/// Points are stored 0-based; all text input and output uses 1-based points.
using Point = std::uint16_t;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A permutation of {1..n} stored as its dense image sequence.
///
/// Products follow the right-action convention used by GAP and the cycle
/// notation in the record tables: `p * q` applies `p` first, then `q`.
class Permutation {
 public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// Takes 0-based images; throws std::invalid_argument unless they form a
  /// bijection on {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const noexcept { return images_.size(); }
  /// 0-based image of a 0-based point.
  Point operator[](std::size_t point) const { return images_[point]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;

  /// Disjoint cycles of length >= 2, 0-based, each starting at its least point,
  /// ordered by least point.
  std::vector<std::vector<Point>> cycles() const;

  /// Canonical 1-based cycle notation, "()" for the identity.
  std::string to_string() const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Parses a product of disjoint cycles such as "(1,2,3)(4,5)" or "()".
/// Whitespace (including line breaks) between tokens is ignored.
Permutation parse_perm(std::string_view text, std::size_t degree);

/// Least k >= 1 with p^k = 1, i.e. the lcm of the cycle lengths.
std::uint64_t element_order(const Permutation& p);

std::size_t hash_images(std::span<const Point> images) noexcept;

}  // namespace hgcage

template <>
struct std::hash<hgcage::Permutation> {
  std::size_t operator()(const hgcage::Permutation& p) const noexcept {
    return hgcage::hash_images(p.images());
  }
};
