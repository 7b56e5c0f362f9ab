#ifndef MINOROBS_CANONICAL_HPP
#define MINOROBS_CANONICAL_HPP

#include <compare>
#include <string>
#include <vector>

#include "minorobs/graph.hpp"

namespace minorobs {

/// Canonical form of a small graph: the graph6 encoding whose adjacency
/// bit string is lexicographically minimal over all vertex orderings.
/// Two graphs have equal forms iff they are isomorphic, and the form
/// doubles as a storage key.
struct CanonicalForm {
  std::string bytes;

  auto operator<=>(const CanonicalForm&) const = default;
};

inline constexpr int kMaxCanonicalVertices = 16;

/// Exact minimal-labeling search. The ordering is grown position by
/// position; at each position only vertices producing the minimal next
/// adjacency column are explored (ties branch), with interchangeable
/// twin vertices collapsed and subtrees that fall behind the best known
/// string cut. Rejects graphs with more than 16 vertices.
CanonicalForm canonical_form(const Graph& g);

/// The graph relabeled into its canonical ordering.
Graph canonical_graph(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace minorobs

#endif
