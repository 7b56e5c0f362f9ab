#include "minorobs/verify.hpp"

#include <atomic>
#include <chrono>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "minorobs/codec.hpp"
#include "minorobs/decomposition.hpp"

namespace minorobs {

namespace {

constexpr std::size_t kMaxCounterexamples = 16;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

VerificationCheck make_check(const std::string& name, bool passed,
                             std::vector<std::string> counterexamples,
                             std::string note, const Stopwatch& watch) {
  if (counterexamples.size() > kMaxCounterexamples) {
    note += (note.empty() ? "" : "; ") + std::string("showing ") +
            std::to_string(kMaxCounterexamples) + " of " +
            std::to_string(counterexamples.size()) + " counterexamples";
    counterexamples.resize(kMaxCounterexamples);
  }
  return {name, passed, std::move(counterexamples), std::move(note),
          watch.seconds()};
}

bool is_obstruction_candidate(const Graph& g, const ClassPredicate& cls,
                              bool prune) {
  if (prune && (g.min_degree() < 2 || has_bridge(g))) return false;
  return is_obstruction(g, cls);
}

}  // namespace

bool VerificationReport::all_passed() const {
  for (const VerificationCheck& check : checks)
    if (!check.passed) return false;
  return true;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const VerificationCheck& check : checks) {
    out << (check.passed ? "PASS" : "FAIL") << "  " << check.name;
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2fs", check.elapsed_seconds);
    out << "  (" << buffer << ")";
    if (!check.note.empty()) out << "  " << check.note;
    out << "\n";
    for (const std::string& g6 : check.counterexamples)
      out << "      counterexample " << g6 << "\n";
  }
  out << (all_passed() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  return out.str();
}

std::string VerificationReport::machine_lines() const {
  std::ostringstream out;
  for (const VerificationCheck& check : checks) {
    out << "CHECK " << check.name << (check.passed ? " PASS" : " FAIL");
    for (const std::string& g6 : check.counterexamples) out << " " << g6;
    out << "\n";
  }
  return out.str();
}

void parallel_for_index(std::int64_t count, int jobs,
                        const std::function<void(std::int64_t)>& fn) {
  if (jobs <= 1 || count < 2) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  constexpr std::int64_t kBatch = 64;
  auto worker = [&] {
    for (;;) {
      std::int64_t begin = next.fetch_add(kBatch);
      if (begin >= count) return;
      std::int64_t end = std::min(begin + kBatch, count);
      for (std::int64_t i = begin; i < end; ++i) fn(i);
    }
  };
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
  for (std::thread& thread : threads) thread.join();
}

std::set<CanonicalForm> search_obstructions(const ClassPredicate& cls,
                                            int max_n,
                                            const SearchOptions& options) {
  if (!cls.is_minor_closed)
    throw std::invalid_argument(
        "search_obstructions needs a minor-closed class");
  if (max_n < 1 || max_n > GraphEnumerator::kMaxLevel)
    throw std::out_of_range("search_obstructions: max_n outside [1, 10]");

  std::set<CanonicalForm> found;
  GraphEnumerator enumerator(options.connected_only);
  for (int n = 1; n <= max_n; ++n) {
    const std::vector<std::string>& forms = enumerator.level(n);
    std::vector<char> verdict(forms.size(), 0);
    parallel_for_index(
        static_cast<std::int64_t>(forms.size()), options.jobs,
        [&](std::int64_t i) {
          verdict[i] = is_obstruction_candidate(decode_graph6(forms[i]), cls,
                                                options.prune);
        });
    for (std::size_t i = 0; i < forms.size(); ++i)
      if (verdict[i]) found.insert(CanonicalForm{forms[i]});
  }
  return found;
}

std::set<CanonicalForm> compose_disconnected(
    const std::vector<Graph>& base_obstructions, int k) {
  if (k < 1) throw std::invalid_argument("compose_disconnected: k < 1");
  std::set<CanonicalForm> out;
  if (base_obstructions.empty()) return out;

  ClassPredicate base{
      "excl(base)",
      [base_obstructions](const Graph& g) {
        return !contains_any_minor(g, base_obstructions).has_value();
      },
      true};
  ClassPredicate apex{
      "k-apex(excl(base))",
      [base, k](const Graph& g) { return is_k_apex(g, base, k); }, true};

  // Multisets of k+1 parts, each part one of the base obstructions.
  std::vector<int> pick;
  auto recurse = [&](auto&& self, int start, int remaining) -> void {
    if (remaining == 0) {
      Graph candidate;
      for (int index : pick)
        candidate = Graph::disjoint_union(candidate, base_obstructions[index]);
      if (is_obstruction(candidate, apex))
        out.insert(canonical_form(candidate));
      return;
    }
    for (int i = start; i < static_cast<int>(base_obstructions.size()); ++i) {
      pick.push_back(i);
      self(self, i, remaining - 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0, k + 1);
  return out;
}

VerificationCheck equivalence_check_over(const ClassPredicate& cls,
                                         const std::vector<Graph>& patterns,
                                         const std::vector<Graph>& graphs,
                                         const std::string& check_name,
                                         int jobs) {
  Stopwatch watch;
  std::vector<char> violation(graphs.size(), 0);
  parallel_for_index(static_cast<std::int64_t>(graphs.size()), jobs,
                     [&](std::int64_t i) {
                       const Graph& g = graphs[i];
                       bool member = cls.test(g);
                       bool minor_free =
                           !contains_any_minor(g, patterns).has_value();
                       violation[i] = member != minor_free;
                     });
  std::vector<std::string> counterexamples;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    if (violation[i]) counterexamples.push_back(encode_graph6(graphs[i]));
  bool passed = counterexamples.empty();
  return make_check(check_name, passed, std::move(counterexamples),
                    "graphs checked: " + std::to_string(graphs.size()),
                    watch);
}

VerificationCheck equivalence_check(const ClassPredicate& cls,
                                    const std::vector<Graph>& patterns,
                                    int n_max, int jobs) {
  Stopwatch watch;
  GraphEnumerator enumerator(false);
  std::vector<std::string> counterexamples;
  std::int64_t total = 0;
  for (int n = 1; n <= n_max; ++n) {
    const std::vector<std::string>& forms = enumerator.level(n);
    total += static_cast<std::int64_t>(forms.size());
    std::vector<char> violation(forms.size(), 0);
    parallel_for_index(
        static_cast<std::int64_t>(forms.size()), jobs, [&](std::int64_t i) {
          Graph g = decode_graph6(forms[i]);
          violation[i] =
              cls.test(g) != !contains_any_minor(g, patterns).has_value();
        });
    for (std::size_t i = 0; i < forms.size(); ++i)
      if (violation[i]) counterexamples.push_back(forms[i]);
  }
  bool passed = counterexamples.empty();
  return make_check("equivalence-n" + std::to_string(n_max), passed,
                    std::move(counterexamples),
                    "graphs checked: " + std::to_string(total), watch);
}

namespace {

Graph random_graph(std::mt19937& rng) {
  std::uniform_int_distribution<int> order_dist(1, 9);
  std::uniform_real_distribution<double> p_dist(0.1, 0.8);
  int n = order_dist(rng);
  double p = p_dist(rng);
  std::bernoulli_distribution edge_dist(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge_dist(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace

VerificationReport verify_catalog(const ObstructionCatalog& catalog,
                                  const VerifyOptions& options) {
  VerificationReport report;
  const auto& entries = catalog.entries();
  const ClassPredicate& apex_cls = apex_pseudoforest_class();

  {
    Stopwatch watch;
    bool ok = entries.size() == 33;
    report.checks.push_back(make_check(
        "entry-count", ok, {},
        "expected 33, got " + std::to_string(entries.size()), watch));
  }

  {
    Stopwatch watch;
    int sizes[4] = {0, 0, 0, 0};
    for (const CatalogEntry& entry : entries)
      if (entry.connectivity_class >= 0 && entry.connectivity_class <= 3)
        ++sizes[entry.connectivity_class];
    bool ok = sizes[0] == 3 && sizes[1] == 12 && sizes[2] == 15 &&
              sizes[3] == 3;
    std::ostringstream note;
    note << "class sizes " << sizes[0] << "/" << sizes[1] << "/" << sizes[2]
         << "/" << sizes[3] << ", expected 3/12/15/3";
    report.checks.push_back(
        make_check("class-sizes", ok, {}, note.str(), watch));
  }

  {
    Stopwatch watch;
    std::vector<std::string> duplicates;
    std::set<CanonicalForm> forms;
    for (const CatalogEntry& entry : entries)
      if (!forms.insert(canonical_form(entry.graph)).second)
        duplicates.push_back(encode_graph6(entry.graph));
    bool ok = duplicates.empty();
    report.checks.push_back(make_check("pairwise-nonisomorphic", ok,
                                       std::move(duplicates), "", watch));
  }

  {
    Stopwatch watch;
    std::vector<std::string> bad;
    std::string note;
    for (const CatalogEntry& entry : entries)
      if (vertex_connectivity(entry.graph) != entry.connectivity_class) {
        bad.push_back(encode_graph6(entry.graph));
        note += (note.empty() ? "" : ", ") + entry.name;
      }
    bool ok = bad.empty();
    report.checks.push_back(
        make_check("connectivity-class", ok, std::move(bad),
                   note.empty() ? "" : "wrong class: " + note, watch));
  }

  {
    Stopwatch watch;
    std::vector<std::string> bad;
    std::string note;
    std::vector<char> verdict(entries.size(), 0);
    parallel_for_index(static_cast<std::int64_t>(entries.size()),
                       options.jobs, [&](std::int64_t i) {
                         verdict[i] =
                             is_obstruction(entries[i].graph, apex_cls);
                       });
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (!verdict[i]) {
        bad.push_back(encode_graph6(entries[i].graph));
        note += (note.empty() ? "" : ", ") + entries[i].name;
      }
    bool ok = bad.empty();
    report.checks.push_back(
        make_check("is-obstruction", ok, std::move(bad),
                   note.empty() ? "" : "not minor-minimal non-members: " + note,
                   watch));
  }

  {
    Stopwatch watch;
    std::vector<std::string> bad;
    std::string note;
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (std::size_t j = 0; j < entries.size(); ++j) {
        if (i == j) continue;
        if (contains_minor(entries[i].graph, entries[j].graph)) {
          bad.push_back(encode_graph6(entries[j].graph));
          note += (note.empty() ? "" : ", ") + entries[j].name + "<=" +
                  entries[i].name;
        }
      }
    bool ok = bad.empty();
    report.checks.push_back(
        make_check("antichain", ok, std::move(bad), note, watch));
  }

  {
    Stopwatch watch;
    std::vector<std::string> degree_bad, bridge_bad, simplicial_bad;
    for (const CatalogEntry& entry : entries) {
      const Graph& g = entry.graph;
      if (!g.is_connected()) continue;
      if (g.min_degree() < 2) degree_bad.push_back(encode_graph6(g));
      if (has_bridge(g)) bridge_bad.push_back(encode_graph6(g));
      for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 2 && !is_simplicial(g, v)) {
          simplicial_bad.push_back(encode_graph6(g));
          break;
        }
    }
    bool degree_ok = degree_bad.empty();
    bool bridge_ok = bridge_bad.empty();
    bool simplicial_ok = simplicial_bad.empty();
    report.checks.push_back(make_check("connected-min-degree-2", degree_ok,
                                       std::move(degree_bad), "", watch));
    report.checks.push_back(make_check("connected-bridgeless", bridge_ok,
                                       std::move(bridge_bad), "", watch));
    report.checks.push_back(
        make_check("connected-degree2-simplicial", simplicial_ok,
                   std::move(simplicial_bad), "", watch));
  }

  // Recompute obs(pseudoforest) from scratch, then use it to rebuild the
  // disconnected entries by composition.
  std::vector<Graph> pseudoforest_obstructions;
  {
    Stopwatch watch;
    std::set<CanonicalForm> found = search_obstructions(
        pseudoforest_class(), 6, SearchOptions{false, false, options.jobs});
    Graph diamond(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    Graph butterfly(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    std::set<CanonicalForm> expected{canonical_form(diamond),
                                     canonical_form(butterfly)};
    bool ok = found == expected;
    std::vector<std::string> bad;
    if (!ok)
      for (const CanonicalForm& form : found)
        if (!expected.contains(form)) bad.push_back(form.bytes);
    for (const CanonicalForm& form : found)
      pseudoforest_obstructions.push_back(decode_graph6(form.bytes));
    report.checks.push_back(make_check(
        "obs-pseudoforest", ok, std::move(bad),
        "found " + std::to_string(found.size()) + " obstructions, expected 2",
        watch));
  }

  {
    Stopwatch watch;
    std::set<CanonicalForm> composed =
        compose_disconnected(pseudoforest_obstructions, 1);
    std::set<CanonicalForm> disconnected_entries;
    for (const CatalogEntry& entry : entries)
      if (entry.connectivity_class == 0)
        disconnected_entries.insert(canonical_form(entry.graph));
    bool ok = composed == disconnected_entries;
    std::vector<std::string> bad;
    if (!ok) {
      for (const CanonicalForm& form : composed)
        if (!disconnected_entries.contains(form)) bad.push_back(form.bytes);
      for (const CanonicalForm& form : disconnected_entries)
        if (!composed.contains(form)) bad.push_back(form.bytes);
    }
    report.checks.push_back(make_check(
        "compose-disconnected", ok, std::move(bad),
        "composed " + std::to_string(composed.size()) + " graphs, expected 3",
        watch));
  }

  if (options.fuzz_count > 0) {
    Stopwatch watch;
    std::mt19937 rng(options.fuzz_seed);
    std::vector<Graph> samples;
    samples.reserve(options.fuzz_count);
    for (int i = 0; i < options.fuzz_count; ++i)
      samples.push_back(random_graph(rng));
    VerificationCheck check = equivalence_check_over(
        apex_cls, catalog.graphs(), samples,
        "equivalence-fuzz-" + std::to_string(options.fuzz_count),
        options.jobs);
    report.checks.push_back(std::move(check));
  }

  if (options.equivalence_n > 0)
    report.checks.push_back(equivalence_check(
        apex_cls, catalog.graphs(), options.equivalence_n, options.jobs));

  if (options.search_n > 0) {
    Stopwatch watch;
    std::set<CanonicalForm> found = search_obstructions(
        apex_cls, options.search_n,
        SearchOptions{true, false, options.jobs});
    std::set<CanonicalForm> expected;
    for (const CatalogEntry& entry : entries)
      if (entry.graph.vertex_count() <= options.search_n &&
          entry.graph.is_connected())
        expected.insert(canonical_form(entry.graph));
    bool ok = found == expected;
    std::vector<std::string> bad;
    if (!ok) {
      for (const CanonicalForm& form : found)
        if (!expected.contains(form)) bad.push_back(form.bytes);
      for (const CanonicalForm& form : expected)
        if (!found.contains(form)) bad.push_back(form.bytes);
    }
    report.checks.push_back(make_check(
        "search-n" + std::to_string(options.search_n), ok, std::move(bad),
        "found " + std::to_string(found.size()) + " connected obstructions, " +
            "catalog holds " + std::to_string(expected.size()) +
            " at this size",
        watch));
  }

  return report;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty()) continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

}  // namespace minorobs
