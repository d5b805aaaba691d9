#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "hgcage/graph.hpp"
#include "hgcage/hypergraph.hpp"

namespace hgcage {

// Text formats, 1-based ids, '#' lines are comments:
//   hypergraph: "<n> <m>" then m lines, each the vertex ids of one hyperedge
//   graph:      "<n> <m>" then m lines "<u> <v>", each edge once

Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph(const std::filesystem::path& path);
Graph read_graph(std::istream& in);
Graph read_graph(const std::filesystem::path& path);

/// `header` lines are written first as '#' comments.
void write_hypergraph(std::ostream& out, const Hypergraph& h, const std::vector<std::string>& header = {});
void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& header = {});

}  // namespace hgcage
