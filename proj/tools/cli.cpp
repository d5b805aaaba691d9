#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hgcage/cayley.hpp"
#include "hgcage/excision.hpp"
#include "hgcage/generator_file.hpp"
#include "hgcage/girth.hpp"
#include "hgcage/io.hpp"
#include "hgcage/moore.hpp"
#include "hgcage/search.hpp"
#include "hgcage/word_girth.hpp"

namespace hgcage::cli {
namespace fs = std::filesystem;

std::vector<std::string> RunManifest::header() const {
  std::vector<std::string> lines{"hgcage " + subcommand};
  for (const auto& [key, value] : parameters) lines.push_back(key + " = " + value);
  return lines;
}

namespace {

/// Input errors that map to kDataError.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes to `path`, or to `fallback` when path is empty or "-".
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw DataError("cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }
  bool is_file() const { return file_ != nullptr; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

fs::path data_dir(const std::string& override_dir) {
  if (!override_dir.empty()) return override_dir;
  if (const char* env = std::getenv("HGCAGE_DATA_DIR")) return env;
  return HGCAGE_DATA_DIR;
}

std::string format_witness_graph(const std::vector<std::uint32_t>& witness) {
  std::ostringstream s;
  for (std::size_t i = 0; i < witness.size(); ++i) s << (i ? " " : "") << witness[i] + 1;
  return s.str();
}

/// Vertex ids plain, hyperedge ids (1-based, file order) prefixed with 'e'.
std::string format_witness_berge(const std::vector<std::uint32_t>& witness) {
  std::ostringstream s;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    s << (i ? " " : "") << (i % 2 ? "e" : "") << witness[i] + 1;
  }
  return s.str();
}

void print_girth(std::ostream& out, const GirthCertificate& cert, bool berge) {
  if (!cert.found()) {
    out << "girth above-cap\n";
    return;
  }
  out << "girth " << *cert.girth << '\n';
  out << "witness " << (berge ? format_witness_berge(cert.witness) : format_witness_graph(cert.witness)) << '\n';
}

std::vector<Permutation> load_generators(const std::string& path) {
  auto file = read_generator_file(fs::path(path));
  if (file.generators.empty()) throw DataError(path + ": no generators");
  return std::move(file.generators);
}

// ---------------------------------------------------------------------------

struct MooreArgs {
  unsigned g = 5;
  unsigned dmin = 2, dmax = 8, rmin = 2, rmax = 8;
  std::string format = "text";
};

int run_moore(const MooreArgs& a, std::ostream& out) {
  write_moore_table(out, a.dmin, a.dmax, a.rmin, a.rmax, a.g,
                    a.format == "csv" ? TableFormat::kCsv : TableFormat::kText);
  return kOk;
}

struct GirthArgs {
  std::string hypergraph;
  std::string graph;
  std::size_t cap = 0;
};

int run_girth(const GirthArgs& a, std::ostream& out) {
  const std::size_t cap = a.cap == 0 ? kNoGirthCap : a.cap;
  if (!a.hypergraph.empty()) {
    const auto h = read_hypergraph(fs::path(a.hypergraph));
    const auto profile = degree_profile(h);
    out << "order " << h.order() << '\n' << "hyperedges " << h.size() << '\n';
    out << "degree " << (profile.degree ? std::to_string(*profile.degree) : "irregular") << '\n';
    out << "uniformity " << (profile.uniformity ? std::to_string(*profile.uniformity) : "non-uniform") << '\n';
    out << "linear " << (is_linear(h) ? "yes" : "no") << '\n';
    print_girth(out, berge_girth(h, cap), true);
  } else {
    const auto g = read_graph(fs::path(a.graph));
    out << "order " << g.order() << '\n' << "edges " << g.size() << '\n';
    print_girth(out, graph_girth(g, cap), false);
  }
  return kOk;
}

struct CayleyArgs {
  std::string group;
  unsigned t = 3;
  std::string out;
  bool check_linear = false;
  std::size_t cap = kDefaultEnumerationCap;
};

int run_cayley(const CayleyArgs& a, const RunManifest& manifest, std::ostream& out, std::ostream& err) {
  auto gens = load_generators(a.group);
  const auto group = GroupTable::generate(gens, a.cap);
  const CayleySpec spec{group, gens, a.t};
  if (const auto violations = validate_spec(spec); !violations.empty()) {
    for (const auto& v : violations) err << "violation: " << v.message << '\n';
    return kDataError;
  }
  const auto h = t_cayley(spec);
  auto header = manifest.header();
  header.push_back("group order " + std::to_string(group.order()));
  std::optional<bool> linear;
  if (a.check_linear) {
    linear = is_linear(h);
    header.push_back(std::string("linear ") + (*linear ? "yes" : "no"));
  }
  Output sink(a.out, out);
  write_hypergraph(*sink, h, header);
  if (sink.is_file()) {
    out << "order " << h.order() << '\n' << "hyperedges " << h.size() << '\n';
    if (linear) out << "linear " << (*linear ? "yes" : "no") << '\n';
  }
  return kOk;
}

struct DualArgs {
  std::string hypergraph;
  std::string out;
};

int run_dual(const DualArgs& a, const RunManifest& manifest, std::ostream& out) {
  const auto h = read_hypergraph(fs::path(a.hypergraph));
  Hypergraph d;
  try {
    d = dual(h);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
  Output sink(a.out, out);
  write_hypergraph(*sink, d, manifest.header());
  return kOk;
}

struct WordGirthArgs {
  std::string group;
  std::size_t cap = 40;
  std::size_t max_states = WordGirthOptions{}.max_states;
};

int run_word_girth(const WordGirthArgs& a, std::ostream& out) {
  const auto gens = load_generators(a.group);
  if (gens.size() != 2) throw DataError(a.group + ": expected exactly two generators a and b");
  WordGirth result;
  try {
    result = alternating_word_girth(gens[0], gens[1], {.cap = a.cap, .max_states = a.max_states});
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
  if (!result.girth) {
    out << "girth above-cap\n";
  } else {
    out << "girth " << *result.girth << '\n' << "witness " << result.witness << '\n';
  }
  out << "states " << result.states << '\n';
  return kOk;
}

struct SearchArgs {
  std::vector<std::string> catalog;
  std::size_t max_order = 2'000'000;
  std::size_t min_girth = 0;
  std::size_t budget = SearchOptions{}.pair_budget;
  std::uint64_t seed = 0;
  std::size_t word_cap = 40;
  std::string out;
};

int run_search(const SearchArgs& a, const RunManifest& manifest, std::ostream& out, std::ostream& err) {
  std::vector<fs::path> paths(a.catalog.begin(), a.catalog.end());
  for (const auto& p : paths) {
    if (!fs::exists(p)) throw DataError("catalog path does not exist: " + p.string());
  }
  const auto result = search_driver(paths, {.max_order = a.max_order,
                                            .min_girth = a.min_girth,
                                            .pair_budget = a.budget,
                                            .seed = a.seed,
                                            .word_cap = a.word_cap});
  Output sink(a.out, out);
  for (const auto& line : manifest.header()) *sink << "# " << line << '\n';
  write_records(*sink, result.records);
  for (const auto& f : result.failures) err << "skipped " << f.group << ": " << f.reason << '\n';
  return kOk;
}

struct ExciseArgs {
  std::string graph;
  std::size_t min_girth = 0;
  std::uint64_t seed = 0;
  std::size_t budget = GreedyOptions{}.budget;
  std::size_t attempts = GreedyOptions{}.tree_attempts;
  std::string out;
  std::string log;
};

int run_excise(const ExciseArgs& a, const RunManifest& manifest, std::ostream& out) {
  const auto g = read_graph(fs::path(a.graph));
  ExcisionRun result;
  try {
    result = excise_greedy(g, a.min_girth, {.seed = a.seed, .budget = a.budget, .tree_attempts = a.attempts});
  } catch (const ExcisionError& e) {
    throw DataError(e.what());
  }
  const auto girth = graph_girth(result.graph);

  auto header = manifest.header();
  header.push_back("order " + std::to_string(result.graph.order()));
  header.push_back("girth " + (girth.found() ? std::to_string(*girth.girth) : std::string("none")));
  Output sink(a.out, out);
  write_graph(*sink, result.graph, header);

  Output log(a.log.empty() ? std::string() : a.log, out);
  if (a.log.empty() && !sink.is_file()) return kOk;  // stdout already holds the graph
  std::size_t order = g.order();
  *log << "input order " << g.order() << " girth " << result.input_girth << '\n';
  for (std::size_t i = 0; i < result.steps.size(); ++i) {
    const auto& step = result.steps[i];
    order -= step.removed.size();
    *log << "step " << i + 1 << (step.tree_depth ? " ball depth " + std::to_string(step.tree_depth) : " four-tree")
         << " removed " << step.removed.size() << " order " << order << '\n';
    *log << "  removed";
    for (VertexId v : step.removed) *log << ' ' << v + 1;
    *log << "\n  added";
    for (const auto& [u, v] : step.added) *log << ' ' << u + 1 << '-' << v + 1;
    *log << '\n';
  }
  *log << "output order " << result.graph.order() << " girth "
       << (girth.found() ? std::to_string(*girth.girth) : std::string("none")) << '\n';
  return kOk;
}

struct VerifyArgs {
  unsigned record = 24;
  std::string data;
  std::size_t cap = kDefaultEnumerationCap;
  std::size_t bfs_max = 200'000;
  std::string graph_out;
};

/// Reads "# expect <key> <value>" comment lines.
std::map<std::string, std::size_t> expectations(const GeneratorFile& file) {
  std::map<std::string, std::size_t> out;
  for (const auto& c : file.comments) {
    std::istringstream line(c);
    std::string word, key;
    std::size_t value = 0;
    if (line >> word >> key >> value && word == "expect") out[key] = value;
  }
  return out;
}

int run_verify(const VerifyArgs& a, const RunManifest& manifest, std::ostream& out) {
  const fs::path path = data_dir(a.data) / "records" / ("girth" + std::to_string(a.record) + ".txt");
  if (!fs::exists(path)) throw DataError("no bundled record for girth " + std::to_string(a.record) + " at " + path.string());
  const auto file = read_generator_file(path);
  auto expect = expectations(file);
  for (const char* key : {"order", "girth", "dual_order"}) {
    if (!expect.count(key)) throw DataError(path.string() + ": missing '# expect " + key + "' line");
  }
  bool ok = true;
  auto report = [&](bool pass, const std::string& what) {
    out << (pass ? "PASS " : "FAIL ") << what << '\n';
    ok = ok && pass;
  };

  out << "record girth " << a.record << " (" << path.filename().string() << ")\n";
  const auto& gens = file.generators;
  bool orders_ok = gens.size() == 2;
  for (const auto& g : gens) orders_ok = orders_ok && element_order(g) == 3;
  report(orders_ok, "generators: two elements of order 3");
  if (!orders_ok) return kCheckFailed;

  const auto word = alternating_word_girth(gens[0], gens[1], {.cap = expect["girth"]});
  report(word.girth == expect["girth"],
         "alternating-word girth " + (word.girth ? std::to_string(*word.girth) : std::string("above-cap")) +
             " (expected " + std::to_string(expect["girth"]) + ")");
  const bool relator_ok = word.girth && evaluate_word(word.witness, gens[0], gens[1]).is_identity();
  report(relator_ok, "relator " + (word.girth ? word.witness : std::string("-")) + " evaluates to the identity");

  if (expect["order"] > a.cap) {
    out << "SKIP group order " << expect["order"] << " exceeds enumeration cap " << a.cap << '\n';
    return ok ? kOk : kCheckFailed;
  }
  std::optional<GroupTable> group;
  try {
    group.emplace(GroupTable::generate(gens, a.cap));
  } catch (const GroupTooLarge&) {
    report(false, "group order exceeds enumeration cap " + std::to_string(a.cap));
    return kCheckFailed;
  }
  report(group->order() == expect["order"],
         "group order " + std::to_string(group->order()) + " (expected " + std::to_string(expect["order"]) + ")");
  const std::size_t dual_order = 2 * group->order() / 3;
  report(dual_order == expect["dual_order"], "dual graph order " + std::to_string(dual_order) + " (expected " +
                                                 std::to_string(expect["dual_order"]) + ")");

  if (group->order() > a.bfs_max) {
    out << "SKIP dual graph construction: group order above --bfs-max " << a.bfs_max << '\n';
    return ok ? kOk : kCheckFailed;
  }
  const auto graph = dual_cubic_graph(*group, gens[0], gens[1]);
  report(graph.order() == expect["dual_order"] && graph.is_regular(3),
         "constructed dual graph is cubic of order " + std::to_string(graph.order()));
  const auto bfs = graph_girth(graph, expect["girth"]);
  const bool bfs_ok = bfs.girth == expect["girth"] && verify_graph_cycle(graph, bfs.witness, *bfs.girth);
  report(bfs_ok, "dual graph girth by BFS " + (bfs.girth ? std::to_string(*bfs.girth) : std::string("above-cap")));
  if (!a.graph_out.empty()) {
    Output sink(a.graph_out, out);
    write_graph(*sink, graph, manifest.header());
  }
  return ok ? kOk : kCheckFailed;
}

template <typename T>
std::string to_text(const T& value) {
  std::ostringstream s;
  s << value;
  return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley hypergraphs, Moore bounds and cubic graphs of large girth", "hgcage"};
  app.require_subcommand(1);

  MooreArgs moore;
  auto* moore_cmd = app.add_subcommand("moore", "print naive and dual-improved Moore bounds");
  moore_cmd->add_option("--g", moore.g, "girth")->required()->check(CLI::Range(3u, 64u));
  moore_cmd->add_option("--dmin", moore.dmin, "least degree")->check(CLI::Range(2u, 1000u));
  moore_cmd->add_option("--dmax", moore.dmax, "largest degree")->check(CLI::Range(2u, 1000u));
  moore_cmd->add_option("--rmin", moore.rmin, "least uniformity")->check(CLI::Range(2u, 1000u));
  moore_cmd->add_option("--rmax", moore.rmax, "largest uniformity")->check(CLI::Range(2u, 1000u));
  moore_cmd->add_option("--format", moore.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

  GirthArgs girth;
  auto* girth_cmd = app.add_subcommand("girth", "Berge girth of a hypergraph or girth of a graph");
  auto* hyper_opt = girth_cmd->add_option("--hypergraph", girth.hypergraph, "hypergraph file");
  auto* graph_opt = girth_cmd->add_option("--graph", girth.graph, "graph file");
  hyper_opt->excludes(graph_opt);
  girth_cmd->add_option("--cap", girth.cap, "largest cycle length searched (0 = no cap)");

  CayleyArgs cayley;
  auto* cayley_cmd = app.add_subcommand("cayley", "build the t-Cayley hypergraph of a generator file");
  cayley_cmd->add_option("--group", cayley.group, "generator file; the generators form S")->required();
  cayley_cmd->add_option("--t", cayley.t, "hyperedge size")->check(CLI::Range(2u, 1000u));
  cayley_cmd->add_option("--out", cayley.out, "output hypergraph file (default stdout)");
  cayley_cmd->add_flag("--check-linear", cayley.check_linear, "report whether the result is linear");
  cayley_cmd->add_option("--cap", cayley.cap, "group enumeration cap");

  DualArgs dual_args;
  auto* dual_cmd = app.add_subcommand("dual", "dual hypergraph");
  dual_cmd->add_option("--hypergraph", dual_args.hypergraph, "hypergraph file")->required();
  dual_cmd->add_option("--out", dual_args.out, "output hypergraph file (default stdout)");

  WordGirthArgs word;
  auto* word_cmd = app.add_subcommand("word-girth", "girth of 3-Cay(<a,b>, {a,b}) by alternating words");
  word_cmd->add_option("--group", word.group, "generator file holding a and b")->required();
  word_cmd->add_option("--cap", word.cap, "longest half-word explored");
  word_cmd->add_option("--max-states", word.max_states, "stored elements per side before giving up");

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "best pair per girth over a catalog of groups");
  search_cmd->add_option("--catalog", search.catalog, "generator files or directories")->required();
  search_cmd->add_option("--max-order", search.max_order, "group enumeration cap");
  search_cmd->add_option("--min-girth", search.min_girth, "drop records below this girth");
  search_cmd->add_option("--budget", search.budget, "pairs evaluated per group");
  search_cmd->add_option("--seed", search.seed, "sampling seed");
  search_cmd->add_option("--word-cap", search.word_cap, "longest half-word explored");
  search_cmd->add_option("--out", search.out, "record file (default stdout)");

  ExciseArgs excise;
  auto* excise_cmd = app.add_subcommand("excise", "shrink a cubic graph by tree excision");
  excise_cmd->add_option("--graph", excise.graph, "cubic graph file")->required();
  excise_cmd->add_option("--min-girth", excise.min_girth, "girth to preserve")->required()->check(CLI::Range(3, 1000));
  excise_cmd->add_option("--seed", excise.seed, "root and tree-order seed");
  excise_cmd->add_option("--budget", excise.budget, "backtracking nodes per excision");
  excise_cmd->add_option("--attempts", excise.attempts, "4-vertex trees tried");
  excise_cmd->add_option("--out", excise.out, "output graph file (default stdout)");
  excise_cmd->add_option("--log", excise.log, "step log file (default stdout when --out is set)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify-record", "check a bundled record generator pair");
  verify_cmd->add_option("--record", verify.record, "record girth (24, 28, 30 or 32)")->required();
  verify_cmd->add_option("--data-dir", verify.data, "directory holding records/");
  verify_cmd->add_option("--cap", verify.cap, "group enumeration cap");
  verify_cmd->add_option("--bfs-max", verify.bfs_max, "largest group order for building the dual graph");
  verify_cmd->add_option("--graph-out", verify.graph_out, "write the dual cubic graph here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (girth_cmd->parsed() && girth.hypergraph.empty() && girth.graph.empty()) {
      throw CLI::RequiredError("--hypergraph or --graph");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  // Record every option that was given, in a stable order.
  RunManifest manifest;
  CLI::App* active = app.get_subcommands().front();
  manifest.subcommand = active->get_name();
  for (const CLI::Option* opt : active->get_options()) {
    if (opt->get_name() == "--help" || opt->count() == 0) continue;
    std::string value;
    for (const auto& r : opt->results()) value += (value.empty() ? "" : " ") + r;
    manifest.parameters[opt->get_name()] = opt->get_type_size() == 0 ? "true" : value;
  }

  try {
    if (moore_cmd->parsed()) return run_moore(moore, out);
    if (girth_cmd->parsed()) return run_girth(girth, out);
    if (cayley_cmd->parsed()) return run_cayley(cayley, manifest, out, err);
    if (dual_cmd->parsed()) return run_dual(dual_args, manifest, out);
    if (word_cmd->parsed()) return run_word_girth(word, out);
    if (search_cmd->parsed()) return run_search(search, manifest, out, err);
    if (excise_cmd->parsed()) return run_excise(excise, manifest, out);
    if (verify_cmd->parsed()) return run_verify(verify, manifest, out);
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const GroupTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}

}  // namespace hgcage::cli
