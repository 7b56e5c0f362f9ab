#include "minorobs/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace minorobs {

namespace {

void check_order(int n) {
  if (n < 0 || n > Graph::kMaxVertices)
    throw std::out_of_range("graph order " + std::to_string(n) +
                            " outside [0, 62]");
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  check_order(n);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge rejected");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, std::vector<std::pair<int, int>>(edges)) {}

Graph Graph::complete(int r) {
  if (r < 1) throw std::invalid_argument("complete(r) needs r >= 1");
  Graph g(r);
  for (int v = 0; v < r; ++v)
    g.adj_[v] = ((std::uint64_t{1} << r) - 1) & ~(std::uint64_t{1} << v);
  return g;
}

Graph Graph::complete_bipartite(int r1, int r2) {
  if (r1 < 1 || r2 < 1)
    throw std::invalid_argument("complete_bipartite needs both parts >= 1");
  Graph g(r1 + r2);
  std::uint64_t left = (std::uint64_t{1} << r1) - 1;
  std::uint64_t right = ((std::uint64_t{1} << (r1 + r2)) - 1) & ~left;
  for (int v = 0; v < r1; ++v) g.adj_[v] = right;
  for (int v = r1; v < r1 + r2; ++v) g.adj_[v] = left;
  return g;
}

Graph Graph::cycle(int r) {
  if (r < 3) throw std::invalid_argument("cycle(r) needs r >= 3");
  Graph g(r);
  for (int v = 0; v < r; ++v) {
    int w = (v + 1) % r;
    g.adj_[v] |= std::uint64_t{1} << w;
    g.adj_[w] |= std::uint64_t{1} << v;
  }
  return g;
}

Graph Graph::wheel(int r) {
  if (r < 3) throw std::invalid_argument("wheel(r) needs r >= 3");
  Graph g = cycle(r);
  g.n_ = r + 1;
  g.adj_.push_back((std::uint64_t{1} << r) - 1);
  for (int v = 0; v < r; ++v) g.adj_[v] |= std::uint64_t{1} << r;
  return g;
}

Graph Graph::disjoint_union(const Graph& g1, const Graph& g2) {
  check_order(g1.n_ + g2.n_);
  Graph g(g1.n_ + g2.n_);
  for (int v = 0; v < g1.n_; ++v) g.adj_[v] = g1.adj_[v];
  for (int v = 0; v < g2.n_; ++v) g.adj_[g1.n_ + v] = g2.adj_[v] << g1.n_;
  return g;
}

int Graph::edge_count() const {
  int total = 0;
  for (auto mask : adj_) total += std::popcount(mask);
  return total / 2;
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

std::uint64_t Graph::neighbor_mask(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (std::uint64_t m = adj_[v]; m; m &= m - 1)
    out.push_back(std::countr_zero(m));
  return out;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = kMaxVertices + 1;
  for (auto mask : adj_) best = std::min(best, std::popcount(mask));
  return best;
}

std::uint64_t Graph::vertex_mask() const {
  return n_ == 0 ? 0 : (std::uint64_t{1} << n_) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (std::uint64_t m = adj_[u] >> (u + 1) << (u + 1); m; m &= m - 1)
      out.emplace_back(u, std::countr_zero(m));
  return out;
}

Graph Graph::delete_vertex(int v) const {
  check_vertex(v);
  std::uint64_t keep = vertex_mask() & ~(std::uint64_t{1} << v);
  return induced_mask(keep);
}

Graph Graph::delete_edge(int u, int v) const {
  if (!adjacent(u, v)) throw std::invalid_argument("delete_edge: edge absent");
  Graph g = *this;
  g.adj_[u] &= ~(std::uint64_t{1} << v);
  g.adj_[v] &= ~(std::uint64_t{1} << u);
  return g;
}

Graph Graph::contract_edge(int u, int v) const {
  if (!adjacent(u, v)) throw std::invalid_argument("contract_edge: edge absent");
  if (u > v) std::swap(u, v);
  Graph merged = *this;
  std::uint64_t joint = (adj_[u] | adj_[v]) &
                        ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v);
  merged.adj_[u] = joint;
  for (std::uint64_t m = joint; m; m &= m - 1) {
    int w = std::countr_zero(m);
    merged.adj_[w] |= std::uint64_t{1} << u;
    merged.adj_[w] &= ~(std::uint64_t{1} << v);
  }
  merged.adj_[v] = 0;
  return merged.induced_mask(vertex_mask() & ~(std::uint64_t{1} << v));
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("with_edge: loop rejected");
  Graph g = *this;
  g.adj_[u] |= std::uint64_t{1} << v;
  g.adj_[v] |= std::uint64_t{1} << u;
  return g;
}

Graph Graph::with_vertex(std::uint64_t neighbors) const {
  check_order(n_ + 1);
  if (neighbors & ~vertex_mask())
    throw std::out_of_range("with_vertex: neighbor outside graph");
  Graph g = *this;
  g.n_ = n_ + 1;
  g.adj_.push_back(neighbors);
  for (std::uint64_t m = neighbors; m; m &= m - 1)
    g.adj_[std::countr_zero(m)] |= std::uint64_t{1} << n_;
  return g;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  std::uint64_t mask = 0;
  for (int v : vertices) {
    check_vertex(v);
    mask |= std::uint64_t{1} << v;
  }
  return induced_mask(mask);
}

Graph Graph::induced_mask(std::uint64_t mask) const {
  if (mask & ~vertex_mask())
    throw std::out_of_range("induced_mask: vertex id out of range");
  std::vector<int> old_ids;
  for (std::uint64_t m = mask; m; m &= m - 1)
    old_ids.push_back(std::countr_zero(m));
  Graph g(static_cast<int>(old_ids.size()));
  for (std::size_t i = 0; i < old_ids.size(); ++i)
    for (std::size_t j = i + 1; j < old_ids.size(); ++j)
      if ((adj_[old_ids[i]] >> old_ids[j]) & 1) {
        g.adj_[i] |= std::uint64_t{1} << j;
        g.adj_[j] |= std::uint64_t{1} << i;
      }
  return g;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m; m &= m - 1)
      next |= adj_[std::countr_zero(m)];
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == vertex_mask();
}

std::vector<std::uint64_t> Graph::component_masks() const {
  std::vector<std::uint64_t> out;
  std::uint64_t remaining = vertex_mask();
  while (remaining) {
    std::uint64_t seen = remaining & (~remaining + 1);  // lowest set bit
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m; m &= m - 1)
        next |= adj_[std::countr_zero(m)];
      frontier = next & ~seen;
      seen |= frontier;
    }
    out.push_back(seen);
    remaining &= ~seen;
  }
  return out;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask : component_masks()) {
    std::vector<int> comp;
    for (std::uint64_t m = mask; m; m &= m - 1)
      comp.push_back(std::countr_zero(m));
    out.push_back(std::move(comp));
  }
  return out;
}

int Graph::edges_within(std::uint64_t mask) const {
  int total = 0;
  for (std::uint64_t m = mask; m; m &= m - 1)
    total += std::popcount(adj_[std::countr_zero(m)] & mask);
  return total / 2;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex id " + std::to_string(v) +
                            " outside [0, " + std::to_string(n_) + ")");
}

}  // namespace minorobs
