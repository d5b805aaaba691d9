#include "hgcage/search.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "hgcage/generator_file.hpp"
#include "hgcage/word_girth.hpp"

namespace hgcage {
namespace {

bool better(const RecordEntry& lhs, const RecordEntry& rhs) {
  if (lhs.dual_order != rhs.dual_order) return lhs.dual_order < rhs.dual_order;
  if (lhs.pair.a != rhs.pair.a) return lhs.pair.a < rhs.pair.a;
  return lhs.pair.b < rhs.pair.b;
}

/// Seeded sample of generating order-3 pairs, for groups too large for
/// exhaustive orbit computation.
std::vector<GeneratorPair> sample_pairs(const GroupTable& group, std::size_t budget, std::mt19937_64& rng) {
  const auto threes = order_three_elements(group);
  std::vector<GeneratorPair> pairs;
  if (threes.size() < 2) return pairs;
  std::uniform_int_distribution<std::size_t> pick(0, threes.size() - 1);
  const std::size_t attempts = 16 * budget;
  for (std::size_t i = 0; i < attempts && pairs.size() < budget; ++i) {
    const ElementId a = threes[pick(rng)];
    const ElementId b = threes[pick(rng)];
    if (a == b || b == group.inverse(a)) continue;
    if (generated_order(group, a, b) != group.order()) continue;
    pairs.push_back({group.element(a), group.element(b)});
  }
  return pairs;
}

}  // namespace

SearchResult search_driver(const std::vector<CatalogEntry>& catalog, const SearchOptions& options) {
  SearchResult result;
  std::map<std::size_t, RecordEntry> best;
  std::mt19937_64 rng(options.seed);

  for (const auto& entry : catalog) {
    try {
      const auto group = GroupTable::generate(entry.generators, options.max_order);
      std::vector<GeneratorPair> pairs;
      try {
        pairs = pair_reps(group);
        if (pairs.size() > options.pair_budget) {
          std::vector<GeneratorPair> sampled;
          std::sample(pairs.begin(), pairs.end(), std::back_inserter(sampled), options.pair_budget, rng);
          pairs = std::move(sampled);
        }
      } catch (const std::length_error&) {
        pairs = sample_pairs(group, options.pair_budget, rng);
      }

      for (const auto& pair : pairs) {
        const auto girth = alternating_word_girth(pair.a, pair.b, {.cap = options.word_cap});
        if (!girth.girth || *girth.girth < options.min_girth) continue;
        RecordEntry candidate{*girth.girth, 2 * group.order() / 3, group.order(), entry.name, pair};
        auto it = best.find(candidate.girth);
        if (it == best.end()) {
          best.emplace(candidate.girth, std::move(candidate));
        } else if (better(candidate, it->second)) {
          it->second = std::move(candidate);
        }
      }
    } catch (const std::exception& e) {
      result.failures.push_back({entry.name, e.what()});
    }
  }
  for (auto& [girth, record] : best) result.records.push_back(std::move(record));
  return result;
}

std::vector<std::filesystem::path> catalog_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& item : std::filesystem::directory_iterator(dir)) {
    if (item.is_regular_file()) files.push_back(item.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

SearchResult search_driver(const std::vector<std::filesystem::path>& catalog, const SearchOptions& options) {
  std::vector<std::filesystem::path> files;
  for (const auto& path : catalog) {
    if (std::filesystem::is_directory(path)) {
      const auto inner = catalog_files(path);
      files.insert(files.end(), inner.begin(), inner.end());
    } else {
      files.push_back(path);
    }
  }
  std::vector<CatalogEntry> entries;
  SearchResult load_failures;
  for (const auto& file : files) {
    try {
      auto gens = read_generator_file(file);
      if (gens.generators.empty()) throw ParseError("no generators");
      entries.push_back({file.filename().string(), std::move(gens.generators)});
    } catch (const std::exception& e) {
      load_failures.failures.push_back({file.filename().string(), e.what()});
    }
  }
  auto result = search_driver(entries, options);
  result.failures.insert(result.failures.begin(), load_failures.failures.begin(), load_failures.failures.end());
  return result;
}

std::string format_pair(const GeneratorPair& pair) { return pair.a.to_string() + ";" + pair.b.to_string(); }

void write_records(std::ostream& out, const std::vector<RecordEntry>& records) {
  for (const auto& r : records) {
    out << r.girth << ' ' << r.dual_order << ' ' << r.group << ' ' << format_pair(r.pair) << '\n';
  }
}

}  // namespace hgcage
