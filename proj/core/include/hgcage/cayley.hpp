#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgcage/group_table.hpp"
#include "hgcage/hypergraph.hpp"
#include "hgcage/permutation.hpp"

namespace hgcage {

/// t-Cayley hypergraph data: hyperedges {g, gs, ..., gs^(t-1)} for g in G,
/// s in the connection set.
struct CayleySpec {
  const GroupTable& group;
  std::vector<Permutation> connection_set;
  unsigned t = 3;
};

enum class ViolationKind {
  kBadUniformity,       // t < 2
  kNotInGroup,
  kIdentity,
  kOrderMismatch,       // order(s) != t
  kDuplicateSubgroup,   // <s> = <s'> for two entries
  kNotGenerating,
};

struct Violation {
  ViolationKind kind;
  std::size_t index;  // position in the connection set, or 0 when global
  std::string message;
};

std::vector<Violation> validate_spec(const CayleySpec& spec);

class InvalidCayleySpec : public std::invalid_argument {
 public:
  explicit InvalidCayleySpec(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Vertices are group element ids. Each hyperedge is a left coset g<s>,
/// listed once (by its least element id), grouped by connection-set entry.
/// The result is |S|-regular and t-uniform with |S||G|/t hyperedges.
/// Throws InvalidCayleySpec when validate_spec reports anything.
Hypergraph t_cayley(const CayleySpec& spec);

}  // namespace hgcage
