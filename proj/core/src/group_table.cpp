#include "hgcage/group_table.hpp"

#include <string>

namespace hgcage {

GroupTooLarge::GroupTooLarge(std::size_t cap)
    : std::runtime_error("group order exceeds enumeration cap " + std::to_string(cap)),
      cap_(cap) {}

GroupTable GroupTable::generate(std::vector<Permutation> generators, std::size_t cap) {
  if (generators.empty()) {
    throw std::invalid_argument("at least one generator is required");
  }
  const std::size_t degree = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw std::invalid_argument("generators have different degrees");
    }
  }
  if (cap == 0 || cap >= 0xffffffffU) {
    throw std::invalid_argument("enumeration cap out of range");
  }

  GroupTable table(std::move(generators), degree);
  table.steps_.resize(table.generators_.size());
  table.index_.insert(Permutation::identity(degree).images());

  std::vector<Point> current(degree);
  std::vector<Point> scratch(degree);
  for (std::size_t x = 0; x < table.order(); ++x) {
    // Inserts may reallocate the index storage, so work from a copy.
    const auto xs = table.images(static_cast<ElementId>(x));
    current.assign(xs.begin(), xs.end());
    for (std::size_t gi = 0; gi < table.generators_.size(); ++gi) {
      const auto gen = table.generators_[gi].images();
      for (std::size_t p = 0; p < degree; ++p) scratch[p] = gen[current[p]];
      const auto [id, inserted] = table.index_.insert(scratch);
      if (inserted && table.order() > cap) throw GroupTooLarge(cap);
      table.steps_[gi].push_back(id);
    }
  }
  table.index_.shrink_to_fit();
  return table;
}

Permutation GroupTable::element(ElementId id) const {
  const auto imgs = images(id);
  return Permutation(std::vector<Point>(imgs.begin(), imgs.end()));
}

ElementId GroupTable::multiply(ElementId x, ElementId y) const {
  const auto xs = images(x);
  const auto ys = images(y);
  std::vector<Point> product(degree());
  for (std::size_t p = 0; p < product.size(); ++p) product[p] = ys[xs[p]];
  return *find(product);
}

ElementId GroupTable::inverse(ElementId x) const {
  const auto xs = images(x);
  std::vector<Point> inv(degree());
  for (std::size_t p = 0; p < inv.size(); ++p) inv[xs[p]] = static_cast<Point>(p);
  return *find(inv);
}

std::vector<ElementId> GroupTable::right_multiplication(const Permutation& s) const {
  if (!contains(s)) {
    throw std::invalid_argument("permutation " + s.to_string() + " is not in the group");
  }
  for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
    if (generators_[gi] == s) return steps_[gi];
  }
  std::vector<ElementId> result(order());
  std::vector<Point> product(degree());
  const auto ss = s.images();
  for (std::size_t x = 0; x < order(); ++x) {
    const auto xs = images(static_cast<ElementId>(x));
    for (std::size_t p = 0; p < product.size(); ++p) product[p] = ss[xs[p]];
    result[x] = *find(product);
  }
  return result;
}

std::uint64_t GroupTable::element_order(ElementId x) const {
  return hgcage::element_order(element(x));
}

}  // namespace hgcage
