#include "hgcage/cayley.hpp"

#include <algorithm>

namespace hgcage {
namespace {

std::string describe(const std::vector<Violation>& violations) {
  std::string text = "invalid Cayley input:";
  for (const auto& v : violations) text += " " + v.message + ";";
  return text;
}

/// Ids of <s> \ {1}, sorted.
std::vector<ElementId> cyclic_subgroup(const GroupTable& group, const Permutation& s) {
  std::vector<ElementId> ids;
  for (Permutation p = s; !p.is_identity(); p = p * s) ids.push_back(*group.find(p));
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

InvalidCayleySpec::InvalidCayleySpec(std::vector<Violation> violations)
    : std::invalid_argument(describe(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate_spec(const CayleySpec& spec) {
  std::vector<Violation> out;
  const auto& group = spec.group;
  if (spec.t < 2) out.push_back({ViolationKind::kBadUniformity, 0, "t must be at least 2"});

  std::vector<std::vector<ElementId>> subgroups;
  std::vector<std::size_t> members;  // entries that passed the per-element checks
  for (std::size_t i = 0; i < spec.connection_set.size(); ++i) {
    const auto& s = spec.connection_set[i];
    const std::string label = "entry " + std::to_string(i + 1) + " " +
                              (s.degree() == group.degree() ? s.to_string() : std::string("?"));
    if (s.degree() != group.degree() || !group.contains(s)) {
      out.push_back({ViolationKind::kNotInGroup, i, label + ": not a group element"});
      continue;
    }
    if (s.is_identity()) {
      out.push_back({ViolationKind::kIdentity, i, label + ": identity"});
      continue;
    }
    const auto order = element_order(s);
    if (order != spec.t) {
      out.push_back({ViolationKind::kOrderMismatch, i,
                     label + ": order mismatch (" + std::to_string(order) + " != t=" + std::to_string(spec.t) + ")"});
      continue;
    }
    auto sub = cyclic_subgroup(group, s);
    for (std::size_t j = 0; j < subgroups.size(); ++j) {
      if (subgroups[j] == sub) {
        out.push_back({ViolationKind::kDuplicateSubgroup, i,
                       label + ": duplicate cyclic subgroup (same as entry " + std::to_string(members[j] + 1) + ")"});
        break;
      }
    }
    subgroups.push_back(std::move(sub));
    members.push_back(i);
  }

  if (out.empty()) {
    std::vector<std::vector<ElementId>> steps;
    for (const auto& s : spec.connection_set) steps.push_back(group.right_multiplication(s));
    std::vector<bool> seen(group.order(), false);
    std::vector<ElementId> frontier{GroupTable::identity()};
    seen[GroupTable::identity()] = true;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      for (const auto& step : steps) {
        const ElementId y = step[frontier[head]];
        if (!seen[y]) {
          seen[y] = true;
          frontier.push_back(y);
        }
      }
    }
    if (frontier.size() != group.order()) {
      out.push_back({ViolationKind::kNotGenerating, 0,
                     "connection set generates a subgroup of order " + std::to_string(frontier.size()) +
                         " < " + std::to_string(group.order())});
    }
  }
  return out;
}

Hypergraph t_cayley(const CayleySpec& spec) {
  if (auto violations = validate_spec(spec); !violations.empty()) {
    throw InvalidCayleySpec(std::move(violations));
  }
  const auto& group = spec.group;
  std::vector<std::vector<VertexId>> edges;
  edges.reserve(spec.connection_set.size() * group.order() / spec.t);
  for (const auto& s : spec.connection_set) {
    const auto step = group.right_multiplication(s);
    std::vector<bool> covered(group.order(), false);
    for (ElementId g = 0; g < group.order(); ++g) {
      if (covered[g]) continue;
      std::vector<VertexId> coset;
      for (ElementId x = g; !covered[x]; x = step[x]) {
        covered[x] = true;
        coset.push_back(x);
      }
      edges.push_back(std::move(coset));
    }
  }
  return Hypergraph(group.order(), std::move(edges));
}

}  // namespace hgcage
