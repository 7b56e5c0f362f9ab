#ifndef MINOROBS_MINORS_HPP
#define MINOROBS_MINORS_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "minorobs/canonical.hpp"
#include "minorobs/graph.hpp"
#include "minorobs/recognition.hpp"

namespace minorobs {

/// Branch-set witness for H <= G: one nonempty host vertex set per pattern
/// vertex. Sets are pairwise disjoint, each induces a connected subgraph,
/// and every pattern edge has a host edge between the two sets.
struct MinorEmbedding {
  std::vector<std::vector<int>> branch_sets;  // indexed by pattern vertex

  bool valid_for(const Graph& host, const Graph& pattern) const;
};

/// Subdivision witness: an injective branch-vertex map plus one host path
/// per pattern edge (endpoints included), the paths pairwise internally
/// disjoint and internally avoiding every branch vertex.
struct TopologicalEmbedding {
  std::vector<int> branch_vertices;        // indexed by pattern vertex
  std::vector<std::vector<int>> paths;     // indexed like pattern.edges()

  bool valid_for(const Graph& host, const Graph& pattern) const;
};

/// Deterministic branch-set search. Pattern vertices are placed component
/// by component (larger components first) in a most-constrained order;
/// candidate branch sets grow from single host vertices, pruned by vertex
/// budget, required adjacency to already-placed sets, and degree capacity.
/// Returned embeddings are revalidated before they leave the search.
std::optional<MinorEmbedding> contains_minor(const Graph& host,
                                             const Graph& pattern);

/// First hit over patterns ordered by ascending vertex count (ties by edge
/// count, then list position). Returns the original list index.
std::optional<std::pair<int, MinorEmbedding>> contains_any_minor(
    const Graph& host, const std::vector<Graph>& patterns);

std::optional<TopologicalEmbedding> contains_topological_minor(
    const Graph& host, const Graph& pattern);

/// Isomorphism-deduplicated single-step minors: every edge deletion, every
/// edge contraction, and the deletion of each isolated vertex.
std::set<CanonicalForm> one_step_minors(const Graph& g);

/// True iff g is outside cls but every proper one-step minor is inside.
/// Requires cls.is_minor_closed (one-step minimality is only meaningful,
/// and transitively sufficient, for minor-closed classes).
bool is_obstruction(const Graph& g, const ClassPredicate& cls);

}  // namespace minorobs

#endif
