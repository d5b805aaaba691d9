#include "hgcage/generator_file.hpp"

#include <fstream>
#include <sstream>

namespace hgcage {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

GeneratorFile read_generator_file(std::istream& in) {
  GeneratorFile file;
  std::string line;
  std::size_t line_no = 0;
  bool have_degree = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      file.comments.emplace_back(trim(body.substr(1)));
      continue;
    }
    if (!have_degree) {
      std::istringstream header{std::string(body)};
      std::string keyword;
      long long degree = 0;
      std::string rest;
      if (!(header >> keyword >> degree) || keyword != "degree" || degree <= 0 || (header >> rest)) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'degree <n>'");
      }
      file.degree = static_cast<std::size_t>(degree);
      have_degree = true;
      continue;
    }
    try {
      file.generators.push_back(parse_perm(body, file.degree));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_degree) throw ParseError("generator file has no 'degree <n>' line");
  return file;
}

GeneratorFile read_generator_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return read_generator_file(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_generator_file(std::ostream& out, const GeneratorFile& file) {
  for (const auto& c : file.comments) out << "# " << c << '\n';
  out << "degree " << file.degree << '\n';
  for (const auto& g : file.generators) out << g.to_string() << '\n';
}

}  // namespace hgcage
