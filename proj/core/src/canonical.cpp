#include "minorobs/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "minorobs/codec.hpp"

namespace minorobs {

namespace {

// Search state for the minimal-ordering walk. Columns are the per-position
// adjacency words of the graph6 upper triangle: position d contributes the
// d-bit value whose MSB is adjacency to position 0.
struct LabelSearch {
  int n = 0;
  std::array<std::uint32_t, kMaxCanonicalVertices> adj{};
  std::array<int, kMaxCanonicalVertices> order{};
  std::array<std::uint32_t, kMaxCanonicalVertices> best_cols{};
  std::array<int, kMaxCanonicalVertices> best_order{};
  bool have_best = false;
  unsigned best_generation = 0;

  // prefix_equal: the columns chosen so far coincide with the current best
  // string. Once a new best is recorded inside a child subtree, the running
  // prefix of every open ancestor matches it again, which the generation
  // counter detects.
  void extend(int depth, std::uint32_t used, bool prefix_equal) {
    if (depth == n) {
      std::copy_n(order.begin(), n, best_order.begin());
      have_best = true;
      ++best_generation;
      return;
    }

    std::uint32_t min_col = ~std::uint32_t{0};
    std::array<int, kMaxCanonicalVertices> ties{};
    int tie_count = 0;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1) continue;
      std::uint32_t col = 0;
      for (int i = 0; i < depth; ++i)
        col = col << 1 | ((adj[order[i]] >> v) & 1);
      if (col < min_col) {
        min_col = col;
        tie_count = 0;
      }
      if (col == min_col) ties[tie_count++] = v;
    }

    bool child_equal = false;
    if (have_best && prefix_equal) {
      if (min_col > best_cols[depth]) return;
      child_equal = min_col == best_cols[depth];
    }
    best_cols[depth] = min_col;  // valid whenever a leaf below records a best

    std::uint32_t skipped = 0;  // twin representatives already explored
    for (int t = 0; t < tie_count; ++t) {
      int v = ties[t];
      bool twin_seen = false;
      for (std::uint32_t m = skipped; m && !twin_seen; m &= m - 1) {
        int u = std::countr_zero(m);
        std::uint32_t pair = (std::uint32_t{1} << u) | (std::uint32_t{1} << v);
        twin_seen = ((adj[u] ^ adj[v]) & ~pair) == 0;
      }
      if (twin_seen) continue;
      skipped |= std::uint32_t{1} << v;
      order[depth] = v;
      unsigned before = best_generation;
      extend(depth + 1, used | (std::uint32_t{1} << v), child_equal);
      if (best_generation != before) child_equal = true;
    }
  }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  int n = g.vertex_count();
  if (n > kMaxCanonicalVertices)
    throw std::invalid_argument("canonical_form: graphs above " +
                                std::to_string(kMaxCanonicalVertices) +
                                " vertices are not supported");
  if (n <= 1) return g;

  LabelSearch search;
  search.n = n;
  for (int v = 0; v < n; ++v)
    search.adj[v] = static_cast<std::uint32_t>(g.neighbor_mask(v));
  search.extend(0, 0, true);

  // best_order[i] = original vertex placed at canonical position i.
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count()));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(search.best_order[i], search.best_order[j]))
        edges.emplace_back(i, j);
  return Graph(n, edges);
}

CanonicalForm canonical_form(const Graph& g) {
  return CanonicalForm{encode_graph6(canonical_graph(g))};
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.vertex_count(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace minorobs
