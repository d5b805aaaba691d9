#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "hgcage/generating_pairs.hpp"
#include "hgcage/group_table.hpp"
#include "hgcage/permutation.hpp"

namespace hgcage {

/// A group to search, given by permutation generators.
struct CatalogEntry {
  std::string name;
  std::vector<Permutation> generators;
};

/// Best 2-regular 3-uniform Cayley hypergraph found for one girth.
struct RecordEntry {
  std::size_t girth = 0;
  std::size_t dual_order = 0;  // 2|G|/3, the order of the dual cubic graph
  std::size_t group_order = 0;
  std::string group;
  GeneratorPair pair;
};

struct SearchFailure {
  std::string group;
  std::string reason;
};

struct SearchOptions {
  std::size_t max_order = 2'000'000;  // enumeration cap per group
  std::size_t min_girth = 0;          // records below this girth are dropped
  std::size_t pair_budget = 4096;     // pairs evaluated per group
  std::uint64_t seed = 0;
  std::size_t word_cap = 40;
};

struct SearchResult {
  std::vector<RecordEntry> records;  // one per girth, ascending
  std::vector<SearchFailure> failures;
};

/// For each group: enumerate it, take pair representatives (or a seeded
/// sample of at most pair_budget pairs when there are too many), compute each
/// pair's alternating-word girth, and keep the best pair per girth. Ties go
/// to the smaller dual order, then to the lexicographically least pair.
/// Per-group failures are recorded and do not stop the search.
SearchResult search_driver(const std::vector<CatalogEntry>& catalog, const SearchOptions& options = {});

/// Loads every generator file in `catalog` (or in a directory, sorted by file
/// name) and runs the search.
SearchResult search_driver(const std::vector<std::filesystem::path>& catalog, const SearchOptions& options = {});

/// Generator files under `dir`, sorted by name.
std::vector<std::filesystem::path> catalog_files(const std::filesystem::path& dir);

/// "<a>;<b>" in cycle notation.
std::string format_pair(const GeneratorPair& pair);

/// "<girth> <dual_order> <group> <pair>" per record.
void write_records(std::ostream& out, const std::vector<RecordEntry>& records);

}  // namespace hgcage
