#include <doctest.h>

#include <sstream>

#include "minorobs/canonical.hpp"
#include "minorobs/catalog.hpp"
#include "minorobs/codec.hpp"
#include "minorobs/decomposition.hpp"
#include "minorobs/recognition.hpp"
#include "minorobs/verify.hpp"
#include "oracles.hpp"

using namespace minorobs;

namespace {

Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Graph butterfly() {
  return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

Graph prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                   {0, 3}, {1, 4}, {2, 5}});
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text) lines += c == '\n';
  return lines;
}

}  // namespace

TEST_CASE("shape of the catalog") {
  ObstructionCatalog catalog = build_catalog();
  CHECK(catalog.size() == 33);

  int sizes[4] = {0, 0, 0, 0};
  for (const CatalogEntry& entry : catalog.entries())
    ++sizes[entry.connectivity_class];
  CHECK(sizes[0] == 3);
  CHECK(sizes[1] == 12);
  CHECK(sizes[2] == 15);
  CHECK(sizes[3] == 3);
}

TEST_CASE("identified members") {
  ObstructionCatalog catalog = build_catalog();
  CHECK(isomorphic(catalog.lookup("O0_1"),
                   Graph::disjoint_union(diamond(), diamond())));
  CHECK(isomorphic(catalog.lookup("O0_2"),
                   Graph::disjoint_union(butterfly(), butterfly())));
  CHECK(isomorphic(catalog.lookup("O0_3"),
                   Graph::disjoint_union(diamond(), butterfly())));
  CHECK(isomorphic(catalog.lookup("O3_1"), prism()));
  CHECK(isomorphic(catalog.lookup("O3_2"), Graph::complete_bipartite(3, 3)));
  CHECK(isomorphic(catalog.lookup("O3_3"),
                   Graph::complete(5).delete_edge(3, 4)));

  CHECK(catalog.lookup("O0_1").vertex_count() == 8);
  CHECK(catalog.lookup("O0_1").edge_count() == 10);
  CHECK(catalog.lookup("O0_2").vertex_count() == 10);
  CHECK(catalog.lookup("O0_2").edge_count() == 12);

  CHECK_THROWS_AS((void)catalog.lookup("O9_9"), std::out_of_range);
}

TEST_CASE("exports") {
  ObstructionCatalog catalog = build_catalog();

  std::string g6 = export_catalog(catalog, ExportFormat::kGraph6);
  CHECK(count_lines(g6) == 33);
  std::istringstream in(g6);
  std::vector<Graph> decoded = read_graph6_lines(in);
  REQUIRE(decoded.size() == 33);
  for (std::size_t i = 0; i < decoded.size(); ++i)
    CHECK(decoded[i] == catalog.entries()[i].graph);

  std::string dot = export_catalog(catalog, ExportFormat::kDot);
  CHECK(dot.find("graph O0_1 {") != std::string::npos);
  CHECK(dot.find("graph O3_3 {") != std::string::npos);

  std::string edges = export_catalog(catalog, ExportFormat::kEdgeList);
  CHECK(edges.find("# O2_15\n") != std::string::npos);
  CHECK(edges.find("n 10\n") != std::string::npos);  // O0_2 block
}

TEST_CASE("full invariant suite passes") {
  VerifyOptions options;
  options.fuzz_count = 200;
  options.jobs = 2;
  VerificationReport report = verify_catalog(build_catalog(), options);
  for (const VerificationCheck& check : report.checks)
    CHECK_MESSAGE(check.passed, check.name);
  CHECK(report.all_passed());
  CHECK(report.machine_lines().find("CHECK is-obstruction PASS") !=
        std::string::npos);
}

TEST_CASE("a corrupted catalog is caught") {
  ObstructionCatalog good = build_catalog();

  // Replace O2_5 by C6, an apex-pseudoforest (and a minor of many entries,
  // so the antichain breaks too; its connectivity happens to stay 2).
  std::vector<CatalogEntry> entries = good.entries();
  for (CatalogEntry& entry : entries)
    if (entry.name == "O2_5") entry.graph = Graph::cycle(6);
  VerifyOptions options;
  options.fuzz_count = 0;
  VerificationReport report =
      verify_catalog(ObstructionCatalog(std::move(entries)), options);
  CHECK(!report.all_passed());
  bool obstruction_failed = false, antichain_failed = false;
  for (const VerificationCheck& check : report.checks) {
    if (check.name == "is-obstruction" && !check.passed) {
      obstruction_failed = true;
      CHECK(check.counterexamples ==
            std::vector<std::string>{encode_graph6(Graph::cycle(6))});
    }
    if (check.name == "antichain" && !check.passed) antichain_failed = true;
    if (!check.passed && check.counterexamples.empty())
      CHECK(!check.note.empty());  // a failure always explains itself
  }
  CHECK(obstruction_failed);
  CHECK(antichain_failed);

  // Drop an entry: the count check fires.
  entries = good.entries();
  entries.pop_back();
  report = verify_catalog(ObstructionCatalog(std::move(entries)), options);
  bool count_failed = false;
  for (const VerificationCheck& check : report.checks)
    if (check.name == "entry-count" && !check.passed) count_failed = true;
  CHECK(count_failed);
}

TEST_CASE("declared connectivity matches the structure") {
  ObstructionCatalog catalog = build_catalog();
  for (const CatalogEntry& entry : catalog.entries())
    CHECK(vertex_connectivity(entry.graph) == entry.connectivity_class);
}

TEST_CASE("entries stay minimal two steps down") {
  // Slow-path reconfirmation: not just every one-step minor but every
  // two-step minor of every entry is an apex-pseudoforest, independent of
  // the one-step machinery used by is_obstruction.
  ObstructionCatalog catalog = build_catalog();
  for (const CatalogEntry& entry : catalog.entries()) {
    CHECK(!is_apex_pseudoforest(entry.graph));
    for (const Graph& one : oracles::raw_one_step_minors(entry.graph)) {
      CHECK(is_apex_pseudoforest(one));
      for (const Graph& two : oracles::raw_one_step_minors(one))
        CHECK(is_apex_pseudoforest(two));
    }
  }
}
