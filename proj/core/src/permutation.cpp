#include "hgcage/permutation.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace hgcage {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > std::numeric_limits<Point>::max()) {
    throw std::invalid_argument("permutation degree too large");
  }
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point image : images_) {
    if (image >= images_.size() || seen[image]) {
      throw std::invalid_argument("image sequence is not a bijection");
    }
    seen[image] = true;
  }
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation result(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    result.images_[images_[i]] = static_cast<Point>(i);
  }
  return result;
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? 0ULL - static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result(degree());
  while (e != 0) {
    if (e & 1ULL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> visited(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (std::size_t p = start; !visited[p]; p = images_[p]) {
      visited[p] = true;
      cycle.push_back(static_cast<Point>(p));
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i != 0) out << ',';
      out << cycle[i] + 1;
    }
    out << ')';
  }
  return out.str();
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.degree() != rhs.degree()) {
    throw std::invalid_argument("cannot compose permutations of different degree");
  }
  Permutation result(lhs.degree());
  for (std::size_t i = 0; i < lhs.images_.size(); ++i) {
    result.images_[i] = rhs.images_[lhs.images_[i]];
  }
  return result;
}

Permutation parse_perm(std::string_view text, std::size_t degree) {
  if (degree == 0 || degree > std::numeric_limits<Point>::max()) {
    throw ParseError("permutation degree out of range");
  }
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError(what + " at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
  };

  skip_space();
  if (pos == text.size()) throw fail("empty permutation");

  while (true) {
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    skip_space();
    std::vector<Point> cycle;
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      continue;
    }
    while (true) {
      skip_space();
      std::size_t begin = pos;
      unsigned long long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<unsigned long long>(text[pos] - '0');
        if (value > degree) value = degree + 1;  // saturate; reported below
        ++pos;
      }
      if (pos == begin) throw fail("expected a point");
      if (value == 0 || value > degree) {
        throw fail("point out of range 1.." + std::to_string(degree));
      }
      const auto point = static_cast<Point>(value - 1);
      if (used[point]) throw fail("repeated point " + std::to_string(value));
      used[point] = true;
      cycle.push_back(point);
      skip_space();
      if (pos == text.size()) throw fail("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      throw fail("expected ',' or ')'");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t order = 1;
  for (const auto& cycle : p.cycles()) {
    const std::uint64_t len = cycle.size();
    const std::uint64_t g = std::gcd(order, len);
    if (order / g > std::numeric_limits<std::uint64_t>::max() / len) {
      throw std::overflow_error("element order exceeds 64 bits");
    }
    order = order / g * len;
  }
  return order;
}

std::size_t hash_images(std::span<const Point> images) noexcept {
  // 64-bit FNV-1a over the points, followed by a final avalanche.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Point p : images) {
    h ^= p;
    h *= 0x100000001b3ULL;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

}  // namespace hgcage
