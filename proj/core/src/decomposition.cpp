#include "minorobs/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace minorobs {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::uint64_t to_mask(const Graph& g, const std::vector<int>& vertices) {
  std::uint64_t mask = 0;
  for (int v : vertices) {
    if (v < 0 || v >= g.vertex_count())
      throw std::out_of_range("vertex id outside graph");
    mask |= bit(v);
  }
  return mask;
}

int component_count_within(const Graph& g, std::uint64_t alive) {
  int count = 0;
  std::uint64_t remaining = alive;
  while (remaining) {
    std::uint64_t seen = remaining & (~remaining + 1);
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m; m &= m - 1)
        next |= g.neighbor_mask(std::countr_zero(m));
      frontier = next & alive & ~seen;
      seen |= frontier;
    }
    ++count;
    remaining &= ~seen;
  }
  return count;
}

bool mask_is_separator(const Graph& g, std::uint64_t separator) {
  std::uint64_t alive = g.vertex_mask() & ~separator;
  return component_count_within(g, alive) >
         component_count_within(g, g.vertex_mask());
}

bool has_separator_of_size(const Graph& g, int size, std::uint64_t* found,
                           bool lex_max) {
  // Subset masks in ascending numeric order visit sorted-id tuples in
  // lexicographic order, so the first hit is the lex-min choice.
  int n = g.vertex_count();
  std::vector<int> pick(size);
  bool any = false;
  auto recurse = [&](auto&& self, int start, int depth) -> bool {
    if (depth == size) {
      std::uint64_t mask = 0;
      for (int v : pick) mask |= bit(v);
      if (mask_is_separator(g, mask)) {
        if (found) *found = mask;
        any = true;
        return !lex_max;  // lex-max keeps scanning, remembers the last hit
      }
      return false;
    }
    for (int v = start; v <= n - (size - depth); ++v) {
      pick[depth] = v;
      if (self(self, v + 1, depth + 1)) return true;
    }
    return false;
  };
  recurse(recurse, 0, 0);
  return any;
}

}  // namespace

bool is_separator(const Graph& g, const std::vector<int>& separator) {
  return mask_is_separator(g, to_mask(g, separator));
}

std::vector<int> cut_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (mask_is_separator(g, bit(v))) out.push_back(v);
  return out;
}

bool has_bridge(const Graph& g) {
  int base = component_count_within(g, g.vertex_mask());
  for (auto [u, v] : g.edges()) {
    Graph without = g.delete_edge(u, v);
    if (component_count_within(without, without.vertex_mask()) > base)
      return true;
  }
  return false;
}

bool is_simplicial(const Graph& g, int v) {
  std::uint64_t nbrs = g.neighbor_mask(v);
  for (std::uint64_t m = nbrs; m; m &= m - 1) {
    int u = std::countr_zero(m);
    if ((g.neighbor_mask(u) & nbrs) != (nbrs & ~bit(u))) return false;
  }
  return true;
}

std::vector<Graph> blocks(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> depth(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::uint64_t> block_masks;

  auto dfs = [&](auto&& self, int v, int d) -> void {
    depth[v] = low[v] = d;
    for (int w : g.neighbors(v)) {
      if (depth[w] < 0) {
        parent[w] = v;
        edge_stack.emplace_back(v, w);
        self(self, w, d + 1);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= depth[v]) {
          // v closes a block; pop its edges.
          std::uint64_t mask = 0;
          std::pair<int, int> top;
          do {
            top = edge_stack.back();
            edge_stack.pop_back();
            mask |= bit(top.first) | bit(top.second);
          } while (top != std::make_pair(v, w));
          block_masks.push_back(mask);
        }
      } else if (w != parent[v] && depth[w] < depth[v]) {
        edge_stack.emplace_back(v, w);
        low[v] = std::min(low[v], depth[w]);
      }
    }
  };

  for (int v = 0; v < n; ++v) {
    if (depth[v] >= 0) continue;
    if (g.degree(v) == 0) {
      block_masks.push_back(bit(v));
      depth[v] = 0;
      continue;
    }
    dfs(dfs, v, 0);
  }

  std::vector<Graph> out;
  out.reserve(block_masks.size());
  for (std::uint64_t mask : block_masks) out.push_back(g.induced_mask(mask));
  return out;
}

int vertex_connectivity(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return 0;
  if (!g.is_connected()) return 0;
  for (int size = 1; size <= n - 2; ++size)
    if (has_separator_of_size(g, size, nullptr, false)) return size;
  return n - 1;
}

bool is_triconnected(const Graph& g) {
  if (g.vertex_count() < 4 || !g.is_connected()) return false;
  return !has_separator_of_size(g, 1, nullptr, false) &&
         !has_separator_of_size(g, 2, nullptr, false);
}

std::vector<Graph> augmented_components(const Graph& g,
                                        const std::vector<int>& separator) {
  std::uint64_t sep_mask = to_mask(g, separator);
  std::uint64_t alive = g.vertex_mask() & ~sep_mask;

  std::vector<std::uint64_t> comp_masks;
  std::uint64_t remaining = alive;
  while (remaining) {
    std::uint64_t seen = remaining & (~remaining + 1);
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m; m &= m - 1)
        next |= g.neighbor_mask(std::countr_zero(m));
      frontier = next & alive & ~seen;
      seen |= frontier;
    }
    comp_masks.push_back(seen);
    remaining &= ~seen;
  }

  std::vector<Graph> out;
  for (std::uint64_t comp : comp_masks) {
    std::uint64_t union_mask = comp | sep_mask;
    Graph augmented = g.induced_mask(union_mask);
    // Separator vertices sit at their rank within the sorted union.
    std::vector<int> sep_positions;
    for (std::uint64_t m = sep_mask; m; m &= m - 1) {
      int original = std::countr_zero(m);
      sep_positions.push_back(
          std::popcount(union_mask & (bit(original) - 1)));
    }
    for (std::size_t i = 0; i < sep_positions.size(); ++i)
      for (std::size_t j = i + 1; j < sep_positions.size(); ++j)
        if (!augmented.adjacent(sep_positions[i], sep_positions[j]))
          augmented = augmented.with_edge(sep_positions[i], sep_positions[j]);
    out.push_back(std::move(augmented));
  }
  return out;
}

namespace {

bool is_small_clique(const Graph& g) {
  int n = g.vertex_count();
  return n <= 3 && g.edge_count() == n * (n - 1) / 2;
}

void decompose(const Graph& g, SeparatorChoice choice,
               TriconnectedDecomposition::TraceNode& node,
               std::vector<Graph>& members) {
  node.graph = g;
  if (is_small_clique(g) || is_triconnected(g)) {
    members.push_back(g);
    return;
  }

  std::vector<int> separator;
  if (g.is_connected()) {
    std::uint64_t found = 0;
    if (!has_separator_of_size(g, 1, &found,
                               choice == SeparatorChoice::kLexMax) &&
        !has_separator_of_size(g, 2, &found,
                               choice == SeparatorChoice::kLexMax))
      throw std::logic_error("no small separator in a non-triconnected graph");
    for (std::uint64_t m = found; m; m &= m - 1)
      separator.push_back(std::countr_zero(m));
  }
  node.separator = separator;
  for (const Graph& child : augmented_components(g, separator)) {
    node.children.emplace_back();
    decompose(child, choice, node.children.back(), members);
  }
}

}  // namespace

TriconnectedDecomposition triconnected_components(const Graph& g,
                                                  SeparatorChoice choice) {
  TriconnectedDecomposition result;
  decompose(g, choice, result.trace, result.members);
  return result;
}

std::optional<int> is_wheel(const Graph& g) {
  int n = g.vertex_count();
  if (n < 4) return std::nullopt;
  for (int hub = 0; hub < n; ++hub) {
    if (g.degree(hub) != n - 1) continue;
    Graph rim = g.delete_vertex(hub);
    bool two_regular = true;
    for (int v = 0; v < rim.vertex_count() && two_regular; ++v)
      two_regular = rim.degree(v) == 2;
    if (two_regular && rim.is_connected()) return n - 1;
  }
  return std::nullopt;
}

Graph split_vertex(const Graph& g, int v, const std::vector<int>& side_a,
                   const std::vector<int>& side_b) {
  if (v < 0 || v >= g.vertex_count())
    throw std::out_of_range("split_vertex: vertex outside graph");
  if (g.degree(v) < 4)
    throw std::invalid_argument("split_vertex: vertex degree below 4");
  if (side_a.size() < 2 || side_b.size() < 2)
    throw std::invalid_argument("split_vertex: both sides need >= 2 vertices");
  std::uint64_t mask_a = to_mask(g, side_a);
  std::uint64_t mask_b = to_mask(g, side_b);
  if (mask_a & mask_b)
    throw std::invalid_argument("split_vertex: sides overlap");
  if ((mask_a | mask_b) != g.neighbor_mask(v))
    throw std::invalid_argument(
        "split_vertex: sides must partition the neighborhood");

  int n = g.vertex_count();
  auto relabel = [&](int w) { return w < v ? w : w - 1; };
  std::vector<std::pair<int, int>> edges;
  for (auto [x, y] : g.edges())
    if (x != v && y != v) edges.emplace_back(relabel(x), relabel(y));
  int vertex_a = n - 1, vertex_b = n;
  for (std::uint64_t m = mask_a; m; m &= m - 1)
    edges.emplace_back(relabel(std::countr_zero(m)), vertex_a);
  for (std::uint64_t m = mask_b; m; m &= m - 1)
    edges.emplace_back(relabel(std::countr_zero(m)), vertex_b);
  edges.emplace_back(vertex_a, vertex_b);
  return Graph(n + 1, edges);
}

namespace {

// Backward moves of the Tutte walk, recorded against concrete graph values.
struct BackwardMove {
  bool contraction;
  int u, v;  // labels of the larger graph
};

// Explicit isomorphism from a wheel-shaped graph onto Graph::wheel(r):
// result[w] is the position of vertex w, rim first, hub last.
std::vector<int> wheel_alignment(const Graph& g, int r) {
  int n = g.vertex_count();
  int hub = -1;
  for (int v = 0; v < n && hub < 0; ++v) {
    if (g.degree(v) != n - 1) continue;
    Graph rim = g.delete_vertex(v);
    bool ok = rim.is_connected();
    for (int w = 0; w < rim.vertex_count() && ok; ++w)
      ok = rim.degree(w) == 2;
    if (ok) hub = v;
  }
  if (hub < 0) throw std::logic_error("wheel_alignment: not a wheel");

  std::vector<int> map(n, -1);
  map[hub] = r;
  int start = hub == 0 ? 1 : 0;
  int previous = -1, current = start;
  for (int position = 0; position < r; ++position) {
    map[current] = position;
    int next = -1;
    for (int w : g.neighbors(current)) {
      if (w == hub || w == previous) continue;
      if (map[w] >= 0) continue;
      if (next < 0) next = w;  // smallest id first, fixes the direction
    }
    previous = current;
    if (next >= 0) current = next;
  }
  return map;
}

}  // namespace

std::optional<WheelCertificate> wheel_certificate(const Graph& g) {
  if (!is_triconnected(g)) return std::nullopt;

  std::vector<Graph> chain{g};
  std::vector<BackwardMove> moves;
  while (!is_wheel(chain.back())) {
    const Graph& current = chain.back();
    bool stepped = false;
    for (auto [u, v] : current.edges()) {
      Graph smaller = current.delete_edge(u, v);
      if (is_triconnected(smaller)) {
        moves.push_back({false, u, v});
        chain.push_back(std::move(smaller));
        stepped = true;
        break;
      }
    }
    if (!stepped) {
      for (auto [u, v] : current.edges()) {
        if (current.degree(u) < 3 || current.degree(v) < 3) continue;
        std::uint64_t common = current.neighbor_mask(u) &
                               current.neighbor_mask(v);
        if (common) continue;  // contraction would merge parallel edges
        Graph smaller = current.contract_edge(u, v);
        if (is_triconnected(smaller)) {
          moves.push_back({true, u, v});
          chain.push_back(std::move(smaller));
          stepped = true;
          break;
        }
      }
    }
    if (!stepped)
      throw std::logic_error(
          "tutte walk stuck on a triconnected non-wheel graph");
  }

  int base_r = *is_wheel(chain.back());
  WheelCertificate certificate{base_r, {}};

  // Forward pass: express every move in the labels of the replayed graph.
  // alignment[w] = replay label of vertex w of chain[i].
  std::vector<int> alignment = wheel_alignment(chain.back(), base_r);
  for (int i = static_cast<int>(moves.size()) - 1; i >= 0; --i) {
    const BackwardMove& move = moves[i];
    if (!move.contraction) {
      certificate.steps.push_back(WheelStep{WheelStep::Kind::kEdgeAddition,
                                            alignment[move.u],
                                            alignment[move.v],
                                            -1,
                                            {},
                                            {}});
      continue;  // same vertex set, alignment unchanged
    }

    const Graph& larger = chain[i];          // before the contraction
    int x = std::min(move.u, move.v), y = std::max(move.u, move.v);
    auto contracted_label = [&](int w) { return w < y ? w : w - 1; };
    int replay_vertex = alignment[contracted_label(x)];

    WheelStep step{WheelStep::Kind::kSplit, -1, -1, replay_vertex, {}, {}};
    for (int w : larger.neighbors(x))
      if (w != y) step.side_a.push_back(alignment[contracted_label(w)]);
    for (int w : larger.neighbors(y))
      if (w != x) step.side_b.push_back(alignment[contracted_label(w)]);
    std::sort(step.side_a.begin(), step.side_a.end());
    std::sort(step.side_b.begin(), step.side_b.end());

    // split_vertex relabels: survivors shift down past replay_vertex, then
    // v_A and v_B take the top two labels.
    int replay_order = chain[i + 1].vertex_count();
    std::vector<int> next_alignment(larger.vertex_count());
    for (int w = 0; w < larger.vertex_count(); ++w) {
      if (w == x) {
        next_alignment[w] = replay_order - 1;  // v_A
      } else if (w == y) {
        next_alignment[w] = replay_order;  // v_B
      } else {
        int image = alignment[contracted_label(w)];
        next_alignment[w] = image - (image > replay_vertex ? 1 : 0);
      }
    }
    alignment = std::move(next_alignment);
    certificate.steps.push_back(std::move(step));
  }
  return certificate;
}

Graph replay_certificate(const WheelCertificate& certificate) {
  Graph current = Graph::wheel(certificate.base_r);
  for (const WheelStep& step : certificate.steps) {
    if (step.kind == WheelStep::Kind::kEdgeAddition) {
      if (current.adjacent(step.u, step.v))
        throw std::invalid_argument("replay: edge already present");
      current = current.with_edge(step.u, step.v);
    } else {
      current = split_vertex(current, step.vertex, step.side_a, step.side_b);
    }
  }
  return current;
}

}  // namespace minorobs
