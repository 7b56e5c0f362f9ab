#ifndef MINOROBS_DECOMPOSITION_HPP
#define MINOROBS_DECOMPOSITION_HPP

#include <optional>
#include <vector>

#include "minorobs/graph.hpp"

namespace minorobs {

/// True iff deleting S strictly increases the number of components.
bool is_separator(const Graph& g, const std::vector<int>& separator);

std::vector<int> cut_vertices(const Graph& g);

/// An edge whose deletion increases the number of components.
bool has_bridge(const Graph& g);

/// The neighborhood of v induces a clique.
bool is_simplicial(const Graph& g, int v);

/// Maximal biconnected subgraphs; an isolated vertex yields a K1 block and
/// a bridge a K2 block. Each block is returned re-densified.
std::vector<Graph> blocks(const Graph& g);

/// kappa(G) by exhaustive separator enumeration: 0 for disconnected graphs
/// and n-1 for complete ones. Exponential in principle, meant for the small
/// graphs this project works on.
int vertex_connectivity(const Graph& g);

bool is_triconnected(const Graph& g);

/// One graph per component V_i of G \ S: the subgraph induced by V_i plus S
/// with all missing edges inside S added.
std::vector<Graph> augmented_components(const Graph& g,
                                        const std::vector<int>& separator);

/// How the recursion picks among minimum-size separators. Lexicographic
/// minimum is the shipping behavior; the others exist to probe whether the
/// resulting multiset depends on the choice.
enum class SeparatorChoice { kLexMin, kLexMax };

/// Recursive decomposition on separators of size <= 2 down to graphs that
/// are triconnected or cliques on at most 3 vertices. A disconnected input
/// splits on the empty separator first. The trace records every split so
/// the decomposition can be replayed.
struct TriconnectedDecomposition {
  struct TraceNode {
    Graph graph;
    std::vector<int> separator;     // in this node's labeling; empty at leaves
    std::vector<TraceNode> children;
  };

  std::vector<Graph> members;  // multiset, in trace (depth-first) order
  TraceNode trace;
};

TriconnectedDecomposition triconnected_components(
    const Graph& g, SeparatorChoice choice = SeparatorChoice::kLexMin);

/// r such that g is isomorphic to the r-wheel, if any.
std::optional<int> is_wheel(const Graph& g);

/// The P_v-split: v is replaced by adjacent vertices v_A, v_B covering the
/// neighborhood partition (A, B), |A|, |B| >= 2. In the result the survivors
/// keep their relative order, v_A is vertex n-1 and v_B is vertex n.
Graph split_vertex(const Graph& g, int v, const std::vector<int>& side_a,
                   const std::vector<int>& side_b);

/// One forward step of a wheel growth sequence, expressed in the labels of
/// the replay graph it applies to.
struct WheelStep {
  enum class Kind { kEdgeAddition, kSplit };
  Kind kind;
  int u = -1, v = -1;              // kEdgeAddition
  int vertex = -1;                 // kSplit
  std::vector<int> side_a, side_b;
};

/// Tutte wheel-growth certificate: replaying `steps` from wheel(base_r)
/// yields a graph isomorphic to the certified one.
struct WheelCertificate {
  int base_r = 0;
  std::vector<WheelStep> steps;
};

/// A certificate exists iff g is triconnected. The search walks backwards,
/// at each stage removing an edge or undoing a split while staying
/// triconnected, until a wheel remains; Tutte's theorem guarantees such a
/// move always exists, so the walk never backtracks.
std::optional<WheelCertificate> wheel_certificate(const Graph& g);

Graph replay_certificate(const WheelCertificate& certificate);

}  // namespace minorobs

#endif
