#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "hgcage/permutation.hpp"

namespace hgcage {

/// Contents of a generator file: `degree <n>` followed by one permutation in
/// cycle notation per line. Lines starting with '#' are comments.
struct GeneratorFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<std::string> comments;
};

GeneratorFile read_generator_file(std::istream& in);
GeneratorFile read_generator_file(const std::filesystem::path& path);
void write_generator_file(std::ostream& out, const GeneratorFile& file);

}  // namespace hgcage
