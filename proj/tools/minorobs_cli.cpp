// minorobs: command-line front end for the graph-minor toolkit.
//
// Exit codes everywhere: 0 = success / affirmative verdict, 1 = negative
// verdict, 2 = usage or input error. "-" means standard input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "minorobs/canonical.hpp"
#include "minorobs/catalog.hpp"
#include "minorobs/codec.hpp"
#include "minorobs/decomposition.hpp"
#include "minorobs/minors.hpp"
#include "minorobs/recognition.hpp"
#include "minorobs/verify.hpp"

namespace {

using nlohmann::json;
using namespace minorobs;

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

// Input is either graph6 lines or a single edge-list block headed "n <k>".
std::vector<Graph> parse_graph_input(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty()) return {};
  if (lines.front().rfind("n ", 0) == 0) return {parse_edge_list(text)};
  std::vector<Graph> graphs;
  graphs.reserve(lines.size());
  for (const std::string& g6 : lines) graphs.push_back(decode_graph6(g6));
  return graphs;
}

Graph resolve_pattern(const std::string& text) {
  try {
    return build_catalog().lookup(text);
  } catch (const std::out_of_range&) {
    return decode_graph6(text);
  }
}

int run_check(const std::string& class_name, const std::string& input,
              bool witness) {
  std::vector<Graph> graphs = parse_graph_input(read_all(input));
  bool all_members = true;
  for (const Graph& g : graphs) {
    bool member;
    std::optional<int> apex;
    if (class_name == "pseudoforest") {
      member = is_pseudoforest(g);
    } else {
      member = is_apex_pseudoforest(g);
      if (member) apex = apex_pseudoforest_witness(g);
    }
    std::cout << encode_graph6(g) << (member ? " MEMBER" : " NONMEMBER");
    if (member && witness && apex) std::cout << " apex=" << *apex;
    std::cout << "\n";
    all_members = all_members && member;
  }
  return all_members ? 0 : 1;
}

int run_minor(const std::string& host_text, const std::string& pattern_text,
              bool topological, bool witness) {
  Graph host = decode_graph6(host_text);
  Graph pattern = resolve_pattern(pattern_text);
  if (topological) {
    auto embedding = contains_topological_minor(host, pattern);
    if (!embedding) {
      std::cout << "NOT-FOUND\n";
      return 1;
    }
    std::cout << "FOUND\n";
    if (witness) {
      for (std::size_t a = 0; a < embedding->branch_vertices.size(); ++a)
        std::cout << "branch " << a << ": " << embedding->branch_vertices[a]
                  << "\n";
      auto pattern_edges = pattern.edges();
      for (std::size_t i = 0; i < pattern_edges.size(); ++i) {
        std::cout << "path " << pattern_edges[i].first << "-"
                  << pattern_edges[i].second << ":";
        for (int v : embedding->paths[i]) std::cout << " " << v;
        std::cout << "\n";
      }
    }
    return 0;
  }
  auto embedding = contains_minor(host, pattern);
  if (!embedding) {
    std::cout << "NOT-FOUND\n";
    return 1;
  }
  std::cout << "FOUND\n";
  if (witness)
    for (std::size_t a = 0; a < embedding->branch_sets.size(); ++a) {
      std::cout << "branch " << a << ":";
      for (int v : embedding->branch_sets[a]) std::cout << " " << v;
      std::cout << "\n";
    }
  return 0;
}

json trace_to_json(const TriconnectedDecomposition::TraceNode& node) {
  json out;
  out["graph"] = encode_graph6(node.graph);
  out["separator"] = node.separator;
  json children = json::array();
  for (const auto& child : node.children)
    children.push_back(trace_to_json(child));
  out["children"] = std::move(children);
  return out;
}

int run_decompose(const std::string& mode, const std::string& input) {
  std::vector<Graph> graphs = parse_graph_input(read_all(input));
  bool all_affirmative = true;
  for (const Graph& g : graphs) {
    json out;
    out["input"] = encode_graph6(g);
    if (mode == "blocks") {
      out["cut_vertices"] = cut_vertices(g);
      std::vector<std::string> block_g6;
      for (const Graph& block : blocks(g))
        block_g6.push_back(encode_graph6(block));
      out["blocks"] = block_g6;
    } else if (mode == "triconnected") {
      TriconnectedDecomposition decomposition = triconnected_components(g);
      std::vector<std::string> member_g6;
      for (const Graph& member : decomposition.members)
        member_g6.push_back(encode_graph6(member));
      out["members"] = member_g6;
      out["trace"] = trace_to_json(decomposition.trace);
    } else {
      auto certificate = wheel_certificate(g);
      if (!certificate) {
        out["certificate"] = nullptr;
        all_affirmative = false;
      } else {
        json steps = json::array();
        for (const WheelStep& step : certificate->steps) {
          if (step.kind == WheelStep::Kind::kEdgeAddition)
            steps.push_back({{"op", "add-edge"}, {"u", step.u}, {"v", step.v}});
          else
            steps.push_back({{"op", "split"},
                             {"vertex", step.vertex},
                             {"side_a", step.side_a},
                             {"side_b", step.side_b}});
        }
        out["certificate"] = {{"base_r", certificate->base_r},
                              {"steps", std::move(steps)}};
      }
    }
    std::cout << out.dump() << "\n";
  }
  return all_affirmative ? 0 : 1;
}

int run_catalog_export(const std::string& format) {
  ObstructionCatalog catalog = build_catalog();
  ExportFormat value = format == "g6"    ? ExportFormat::kGraph6
                       : format == "dot" ? ExportFormat::kDot
                                         : ExportFormat::kEdgeList;
  std::cout << export_catalog(catalog, value);
  return 0;
}

int run_verify_catalog(int equivalence_n, int search_n, int fuzz, int jobs,
                       const std::string& graphs_file) {
  ObstructionCatalog catalog = build_catalog();
  VerifyOptions options;
  options.equivalence_n = equivalence_n;
  options.search_n = search_n;
  options.fuzz_count = fuzz;
  options.jobs = jobs;
  VerificationReport report = verify_catalog(catalog, options);
  if (!graphs_file.empty()) {
    std::istringstream in(read_all(graphs_file));
    std::vector<Graph> external = read_graph6_lines(in);
    report.checks.push_back(
        equivalence_check_over(apex_pseudoforest_class(), catalog.graphs(),
                               external, "equivalence-external", jobs));
  }
  std::cout << report.machine_lines() << report.to_text();
  return report.all_passed() ? 0 : 1;
}

int run_search(const std::string& class_name, int max_n, bool connected,
               bool prune, int jobs) {
  const ClassPredicate& cls = class_name == "pseudoforest"
                                  ? pseudoforest_class()
                                  : apex_pseudoforest_class();
  SearchOptions options{connected, prune, jobs};
  for (const CanonicalForm& form : search_obstructions(cls, max_n, options))
    std::cout << form.bytes << "\n";
  return 0;
}

int run_convert(const std::string& from, const std::string& to,
                const std::string& input) {
  std::string text = read_all(input);
  std::vector<Graph> graphs;
  if (from == "g6") {
    std::istringstream in(text);
    graphs = read_graph6_lines(in);
  } else {
    graphs.push_back(parse_edge_list(text));
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (to == "g6")
      std::cout << encode_graph6(graphs[i]) << "\n";
    else if (to == "edges")
      std::cout << write_edge_list(graphs[i]);
    else
      std::cout << write_dot(graphs[i], "g" + std::to_string(i));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph-minor toolkit: recognition, minors, decompositions and "
               "obstruction verification for apex-pseudoforests"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand(
      "check", "Class membership of graphs from a file or stdin");
  std::string check_class, check_input = "-";
  bool check_witness = false;
  check->add_option("--class", check_class, "Graph class")
      ->required()
      ->check(CLI::IsMember({"pseudoforest", "apex-pseudoforest"}));
  check->add_option("--input", check_input, "graph6 lines or an edge list");
  check->add_flag("--witness", check_witness, "print the apex vertex");

  auto* minor = app.add_subcommand("minor", "Minor containment test");
  std::string minor_host, minor_pattern;
  bool minor_topological = false, minor_witness = false;
  minor->add_option("--host", minor_host, "host graph (graph6)")->required();
  minor
      ->add_option("--pattern", minor_pattern,
                   "pattern graph (graph6 or catalog name like O3_2)")
      ->required();
  minor->add_flag("--topological", minor_topological,
                  "search for a topological minor instead");
  minor->add_flag("--witness", minor_witness, "print the embedding");

  auto* decompose =
      app.add_subcommand("decompose", "Connectivity decompositions as JSON");
  std::string decompose_mode, decompose_input = "-";
  decompose->add_option("--mode", decompose_mode, "decomposition kind")
      ->required()
      ->check(CLI::IsMember({"blocks", "triconnected", "wheel-certificate"}));
  decompose->add_option("--input", decompose_input,
                        "graph6 lines or an edge list");

  auto* catalog = app.add_subcommand("catalog", "The obstruction catalog");
  catalog->require_subcommand(1);
  auto* catalog_export =
      catalog->add_subcommand("export", "Write all 33 entries");
  std::string export_format = "g6";
  catalog_export->add_option("--format", export_format, "output format")
      ->check(CLI::IsMember({"g6", "dot", "edges"}));

  auto* verify = app.add_subcommand(
      "verify-catalog", "Machine-check every catalog invariant");
  int verify_equivalence_n = 0, verify_search_n = 0, verify_fuzz = 2000,
      verify_jobs = 1;
  std::string verify_graphs;
  verify->add_option("--equivalence-n", verify_equivalence_n,
                     "exhaustive equivalence sweep up to this order");
  verify->add_option("--search-n", verify_search_n,
                     "from-scratch obstruction search up to this order");
  verify->add_option("--fuzz", verify_fuzz, "random equivalence samples");
  verify->add_option("--jobs", verify_jobs, "worker threads");
  verify->add_option("--graphs", verify_graphs,
                     "external graph6 stream for the equivalence check");

  auto* search = app.add_subcommand("search-obstructions",
                                    "Exhaustive obstruction search");
  std::string search_class;
  int search_max_n = 0, search_jobs = 1;
  bool search_connected = false, search_prune = false;
  search->add_option("--class", search_class, "Graph class")
      ->required()
      ->check(CLI::IsMember({"pseudoforest", "apex-pseudoforest"}));
  search->add_option("--max-n", search_max_n, "largest vertex count")
      ->required()
      ->check(CLI::Range(1, 10));
  search->add_flag("--connected", search_connected,
                   "restrict to connected graphs");
  search->add_flag("--prune", search_prune,
                   "skip bridged / min-degree-1 graphs (theorem-check mode)");
  search->add_option("--jobs", search_jobs, "worker threads");

  auto* convert = app.add_subcommand("convert", "Translate between formats");
  std::string convert_from, convert_to, convert_input = "-";
  convert->add_option("--from", convert_from, "input format")
      ->required()
      ->check(CLI::IsMember({"g6", "edges"}));
  convert->add_option("--to", convert_to, "output format")
      ->required()
      ->check(CLI::IsMember({"g6", "edges", "dot"}));
  convert->add_option("--input", convert_input, "file or -");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed())
      return run_check(check_class, check_input, check_witness);
    if (minor->parsed())
      return run_minor(minor_host, minor_pattern, minor_topological,
                       minor_witness);
    if (decompose->parsed()) return run_decompose(decompose_mode, decompose_input);
    if (catalog->parsed()) return run_catalog_export(export_format);
    if (verify->parsed())
      return run_verify_catalog(verify_equivalence_n, verify_search_n,
                                verify_fuzz, verify_jobs, verify_graphs);
    if (search->parsed())
      return run_search(search_class, search_max_n, search_connected,
                        search_prune, search_jobs);
    if (convert->parsed())
      return run_convert(convert_from, convert_to, convert_input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
