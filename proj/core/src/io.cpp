#include "hgcage/io.hpp"

#include <fstream>
#include <sstream>

#include "hgcage/permutation.hpp"

namespace hgcage {
namespace {

/// Yields the whitespace-separated integer fields of each non-comment line.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<long long>& fields) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      fields.clear();
      std::istringstream ss(line);
      std::string token;
      while (ss >> token) {
        std::size_t used = 0;
        long long value = 0;
        try {
          value = std::stoll(token, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != token.size()) fail("expected an integer, got '" + token + "'");
        fields.push_back(value);
      }
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line_no_) + ": " + what);
  }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::pair<std::size_t, std::size_t> read_header(LineReader& reader) {
  std::vector<long long> fields;
  if (!reader.next(fields)) throw ParseError("missing '<n> <m>' header");
  if (fields.size() != 2 || fields[0] < 0 || fields[1] < 0) reader.fail("expected '<n> <m>'");
  return {static_cast<std::size_t>(fields[0]), static_cast<std::size_t>(fields[1])};
}

VertexId to_vertex(const LineReader& reader, long long id, std::size_t n) {
  if (id < 1 || static_cast<std::size_t>(id) > n) {
    reader.fail("vertex " + std::to_string(id) + " out of range 1.." + std::to_string(n));
  }
  return static_cast<VertexId>(id - 1);
}

void write_header(std::ostream& out, const std::vector<std::string>& header) {
  for (const auto& line : header) out << "# " << line << '\n';
}

template <typename T>
T read_file(const std::filesystem::path& path, T (*reader)(std::istream&)) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return reader(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
  LineReader reader(in);
  const auto [n, m] = read_header(reader);
  std::vector<std::vector<VertexId>> edges;
  std::vector<long long> fields;
  for (std::size_t e = 0; e < m; ++e) {
    if (!reader.next(fields)) throw ParseError("expected " + std::to_string(m) + " hyperedges, got " + std::to_string(e));
    std::vector<VertexId> members;
    for (long long id : fields) members.push_back(to_vertex(reader, id, n));
    edges.push_back(std::move(members));
  }
  if (reader.next(fields)) reader.fail("trailing data after " + std::to_string(m) + " hyperedges");
  try {
    return Hypergraph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Graph read_graph(std::istream& in) {
  LineReader reader(in);
  const auto [n, m] = read_header(reader);
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<long long> fields;
  for (std::size_t e = 0; e < m; ++e) {
    if (!reader.next(fields)) throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(e));
    if (fields.size() != 2) reader.fail("expected '<u> <v>'");
    edges.emplace_back(to_vertex(reader, fields[0], n), to_vertex(reader, fields[1], n));
  }
  if (reader.next(fields)) reader.fail("trailing data after " + std::to_string(m) + " edges");
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Hypergraph read_hypergraph(const std::filesystem::path& path) {
  return read_file<Hypergraph>(path, &read_hypergraph);
}

Graph read_graph(const std::filesystem::path& path) { return read_file<Graph>(path, &read_graph); }

void write_hypergraph(std::ostream& out, const Hypergraph& h, const std::vector<std::string>& header) {
  write_header(out, header);
  out << h.order() << ' ' << h.size() << '\n';
  for (const auto& members : h.edges()) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i != 0) out << ' ';
      out << members[i] + 1;
    }
    out << '\n';
  }
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& header) {
  write_header(out, header);
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace hgcage
