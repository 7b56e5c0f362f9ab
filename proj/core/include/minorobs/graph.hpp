#ifndef MINOROBS_GRAPH_HPP
#define MINOROBS_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace minorobs {

/// Immutable simple undirected graph on vertices 0..n-1, n <= 62.
///
/// Adjacency is kept as one 64-bit neighbor mask per vertex, so every
/// structural query is a handful of word operations. All "mutating"
/// operations return a fresh graph; results of vertex-removing operations
/// are re-densified to 0..n'-1 keeping the relative order of surviving ids.
class Graph {
 public:
  static constexpr int kMaxVertices = 62;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  static Graph complete(int r);
  static Graph complete_bipartite(int r1, int r2);
  static Graph cycle(int r);   // r >= 3
  static Graph wheel(int r);   // r >= 3; rim is 0..r-1, hub is vertex r
  static Graph disjoint_union(const Graph& g1, const Graph& g2);

  int vertex_count() const { return n_; }
  int edge_count() const;

  bool adjacent(int u, int v) const;
  std::uint64_t neighbor_mask(int v) const;
  std::vector<int> neighbors(int v) const;
  int degree(int v) const;
  int min_degree() const;  // 0 for the empty graph
  std::uint64_t vertex_mask() const;

  /// Edges as pairs (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  Graph delete_vertex(int v) const;
  Graph delete_edge(int u, int v) const;

  /// Contracts {u, v}; the merged vertex takes the slot of min(u, v) and
  /// parallel edges collapse. Ids above max(u, v) shift down by one.
  Graph contract_edge(int u, int v) const;

  Graph with_edge(int u, int v) const;

  /// Copy with one extra vertex n adjacent to the masked vertices.
  Graph with_vertex(std::uint64_t neighbors) const;

  /// Induced subgraph on S; vertices are relabeled by ascending original id.
  Graph induced(const std::vector<int>& vertices) const;
  Graph induced_mask(std::uint64_t mask) const;

  bool is_connected() const;
  std::vector<std::vector<int>> components() const;
  std::vector<std::uint64_t> component_masks() const;

  /// Number of edges inside a vertex mask.
  int edges_within(std::uint64_t mask) const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

}  // namespace minorobs

#endif
