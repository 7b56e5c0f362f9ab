#ifndef MINOROBS_VERIFY_HPP
#define MINOROBS_VERIFY_HPP

#include <functional>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "minorobs/catalog.hpp"
#include "minorobs/enumerate.hpp"
#include "minorobs/graph.hpp"
#include "minorobs/minors.hpp"
#include "minorobs/recognition.hpp"

namespace minorobs {

struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::vector<std::string> counterexamples;  // graph6, possibly truncated
  std::string note;                          // e.g. count mismatch details
  double elapsed_seconds = 0.0;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool all_passed() const;
  std::string to_text() const;
  /// One "CHECK <name> PASS|FAIL [counterexample-g6...]" line per check.
  std::string machine_lines() const;
};

struct SearchOptions {
  bool connected_only = false;
  /// Skip graphs with minimum degree < 2 or a bridge. Sound only for the
  /// final theorem-check mode on connected obstructions; default off so the
  /// search stays assumption-free.
  bool prune = false;
  int jobs = 1;
};

/// All obstructions of cls with at most max_n vertices (max_n <= 10),
/// deduplicated by canonical form.
std::set<CanonicalForm> search_obstructions(const ClassPredicate& cls,
                                            int max_n,
                                            const SearchOptions& options = {});

/// Candidate disconnected obstructions of the k-apex closure of the class
/// excluding base_obstructions: disjoint unions of k+1 of the base
/// obstructions, filtered through is_obstruction. The filter class is
/// derived from the base list itself.
std::set<CanonicalForm> compose_disconnected(
    const std::vector<Graph>& base_obstructions, int k);

/// Zero violations of: cls.test(G) iff no pattern is a minor of G, over
/// every graph with at most n_max vertices.
VerificationCheck equivalence_check(const ClassPredicate& cls,
                                    const std::vector<Graph>& patterns,
                                    int n_max, int jobs = 1);

/// Same equivalence over an explicit graph list (external graph6 sources).
VerificationCheck equivalence_check_over(const ClassPredicate& cls,
                                         const std::vector<Graph>& patterns,
                                         const std::vector<Graph>& graphs,
                                         const std::string& check_name,
                                         int jobs = 1);

struct VerifyOptions {
  int equivalence_n = 0;  // 0 = skip the exhaustive equivalence sweep
  int search_n = 0;       // 0 = skip the from-scratch obstruction search
  int fuzz_count = 2000;  // random graphs for the equivalence fuzz
  unsigned fuzz_seed = 20250808;
  int jobs = 1;
};

/// Every catalog invariant as a named check: entry and class counts,
/// pairwise non-isomorphism, connectivity classes, obstruction property,
/// the minor antichain, the structural facts about connected obstructions
/// (min degree, bridgelessness, simplicial degree-2 vertices), recomputed
/// pseudoforest obstructions, the disconnected composition, an equivalence
/// fuzz, and optionally the exhaustive sweeps.
VerificationReport verify_catalog(const ObstructionCatalog& catalog,
                                  const VerifyOptions& options = {});

/// One graph per nonempty line.
std::vector<Graph> read_graph6_lines(std::istream& in);

/// Deterministic work distribution helper: runs fn(i) for every index in
/// [0, count) across `jobs` threads. Callers collect results in per-index
/// slots, so the outcome does not depend on scheduling.
void parallel_for_index(std::int64_t count, int jobs,
                        const std::function<void(std::int64_t)>& fn);

}  // namespace minorobs

#endif
