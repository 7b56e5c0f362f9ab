#ifndef MINOROBS_RECOGNITION_HPP
#define MINOROBS_RECOGNITION_HPP

#include <functional>
#include <optional>
#include <string>

#include "minorobs/graph.hpp"

namespace minorobs {

/// A named graph-class membership test. is_minor_closed is an assertion by
/// whoever builds the predicate; obstruction search requires it.
struct ClassPredicate {
  std::string name;
  std::function<bool(const Graph&)> test;
  bool is_minor_closed = false;
};

/// A pseudoforest has at most one cycle per connected component,
/// equivalently |E(C)| <= |V(C)| for every component C.
bool is_pseudoforest(const Graph& g);

/// Member of P^(1): some set of at most one vertex deletes to a pseudoforest.
bool is_apex_pseudoforest(const Graph& g);

/// Smallest vertex whose deletion leaves a pseudoforest, if any. The empty
/// graph is a member with no witness vertex.
std::optional<int> apex_pseudoforest_witness(const Graph& g);

/// Exhaustive test over all vertex subsets of size <= k.
bool is_k_apex(const Graph& g, const ClassPredicate& base, int k);

const ClassPredicate& pseudoforest_class();
const ClassPredicate& apex_pseudoforest_class();

}  // namespace minorobs

#endif
