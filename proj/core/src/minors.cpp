#include "minorobs/minors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace minorobs {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

bool connected_mask(const Graph& g, std::uint64_t mask) {
  if (mask == 0) return false;
  std::uint64_t seen = mask & (~mask + 1);
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m; m &= m - 1)
      next |= g.neighbor_mask(std::countr_zero(m));
    frontier = next & mask & ~seen;
    seen |= frontier;
  }
  return seen == mask;
}

std::uint64_t neighborhood_of_mask(const Graph& g, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::uint64_t m = mask; m; m &= m - 1)
    out |= g.neighbor_mask(std::countr_zero(m));
  return out & ~mask;
}

int betti_number(const Graph& g) {
  return g.edge_count() - g.vertex_count() +
         static_cast<int>(g.component_masks().size());
}

// A branch set of size m has at most (sum of the m largest host degrees)
// - 2(m-1) edges leaving it, since connectivity consumes m-1 internal
// edges. Spare host vertices bound m.
int max_branch_degree(const Graph& host, int spare) {
  std::vector<int> degrees;
  for (int v = 0; v < host.vertex_count(); ++v)
    degrees.push_back(host.degree(v));
  std::sort(degrees.rbegin(), degrees.rend());
  int best = 0, prefix = 0;
  for (int m = 1; m <= spare + 1 && m <= host.vertex_count(); ++m) {
    prefix += degrees[m - 1];
    best = std::max(best, prefix - 2 * (m - 1));
  }
  return best;
}

int largest_component_size(const Graph& g) {
  int best = 0;
  for (auto mask : g.component_masks())
    best = std::max(best, std::popcount(mask));
  return best;
}

bool passes_minor_filters(const Graph& host, const Graph& pattern) {
  if (pattern.vertex_count() > host.vertex_count()) return false;
  if (pattern.edge_count() > host.edge_count()) return false;
  if (pattern.vertex_count() == 0) return true;
  if (betti_number(pattern) > betti_number(host)) return false;
  if (largest_component_size(pattern) > largest_component_size(host))
    return false;
  int spare = host.vertex_count() - pattern.vertex_count();
  std::vector<int> pattern_degrees;
  for (int v = 0; v < pattern.vertex_count(); ++v)
    pattern_degrees.push_back(pattern.degree(v));
  std::sort(pattern_degrees.rbegin(), pattern_degrees.rend());
  if (pattern_degrees[0] > max_branch_degree(host, spare)) return false;
  if (spare == 0) {
    // Branch sets are singletons, so the host must dominate degree by degree.
    std::vector<int> host_degrees;
    for (int v = 0; v < host.vertex_count(); ++v)
      host_degrees.push_back(host.degree(v));
    std::sort(host_degrees.rbegin(), host_degrees.rend());
    for (std::size_t i = 0; i < pattern_degrees.size(); ++i)
      if (pattern_degrees[i] > host_degrees[i]) return false;
  }
  return true;
}

// Placement order: pattern components by descending size (ties by smallest
// vertex id), inside a component most-placed-neighbors first so adjacency
// constraints bind as early as possible.
std::vector<int> placement_order(const Graph& pattern) {
  auto comps = pattern.components();
  std::stable_sort(comps.begin(), comps.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.front() < b.front();
                   });
  std::vector<int> order;
  std::vector<char> placed(pattern.vertex_count(), 0);
  for (const auto& comp : comps) {
    for (std::size_t step = 0; step < comp.size(); ++step) {
      int chosen = -1, chosen_links = -1, chosen_degree = -1;
      for (int v : comp) {
        if (placed[v]) continue;
        int links = 0;
        for (int w : pattern.neighbors(v)) links += placed[w];
        if (step == 0) links = 0;
        if (links > chosen_links ||
            (links == chosen_links && pattern.degree(v) > chosen_degree)) {
          chosen = v;
          chosen_links = links;
          chosen_degree = pattern.degree(v);
        }
      }
      placed[chosen] = 1;
      order.push_back(chosen);
    }
  }
  return order;
}

struct MinorSearch {
  const Graph& host;
  const Graph& pattern;
  std::vector<int> order;            // placement step -> pattern vertex
  std::vector<std::uint64_t> branch;  // placement step -> host mask
  std::uint64_t used = 0;

  bool place(int step) {
    int h = pattern.vertex_count();
    if (step == h) return true;
    int a = order[step];

    std::vector<std::uint64_t> required;  // earlier branch sets a must touch
    for (int j = 0; j < step; ++j)
      if (pattern.adjacent(order[j], a)) required.push_back(branch[j]);
    int future_degree = pattern.degree(a) - static_cast<int>(required.size());

    std::uint64_t free = host.vertex_mask() & ~used;
    int budget = std::popcount(free) - (h - step - 1);
    if (budget <= 0) return false;

    for (std::uint64_t seeds = free; seeds; seeds &= seeds - 1) {
      int s = std::countr_zero(seeds);
      // Seeding at the set minimum enumerates each candidate exactly once.
      std::uint64_t forbidden = free & (bit(s) - 1);
      if (grow(step, bit(s), forbidden, free, budget, required,
               future_degree))
        return true;
    }
    return false;
  }

  bool grow(int step, std::uint64_t set, std::uint64_t forbidden,
            std::uint64_t free, int budget,
            const std::vector<std::uint64_t>& required, int future_degree) {
    std::uint64_t reach = neighborhood_of_mask(host, set);
    bool satisfied = true;
    for (std::uint64_t req : required)
      if (!(reach & req)) {
        satisfied = false;
        break;
      }
    if (satisfied &&
        std::popcount(reach & free & ~set) >= future_degree) {
      branch[step] = set;
      used |= set;
      if (place(step + 1)) return true;
      used &= ~set;
    }

    if (std::popcount(set) == budget) return false;
    std::uint64_t extensions = reach & free & ~forbidden;
    for (std::uint64_t m = extensions; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (grow(step, set | bit(v), forbidden, free, budget, required,
               future_degree))
        return true;
      forbidden |= bit(v);
    }
    return false;
  }
};

void check_embedding(const MinorEmbedding& embedding, const Graph& host,
                     const Graph& pattern) {
  if (!embedding.valid_for(host, pattern))
    throw std::logic_error("contains_minor produced an invalid embedding");
}

}  // namespace

bool MinorEmbedding::valid_for(const Graph& host, const Graph& pattern) const {
  if (static_cast<int>(branch_sets.size()) != pattern.vertex_count())
    return false;
  std::uint64_t seen = 0;
  std::vector<std::uint64_t> masks;
  for (const auto& set : branch_sets) {
    if (set.empty()) return false;
    std::uint64_t mask = 0;
    for (int v : set) {
      if (v < 0 || v >= host.vertex_count()) return false;
      mask |= bit(v);
    }
    if (mask & seen) return false;  // overlap or duplicate inside a set
    if (std::popcount(mask) != static_cast<int>(set.size())) return false;
    if (!connected_mask(host, mask)) return false;
    seen |= mask;
    masks.push_back(mask);
  }
  for (auto [a, b] : pattern.edges())
    if (!(neighborhood_of_mask(host, masks[a]) & masks[b])) return false;
  return true;
}

std::optional<MinorEmbedding> contains_minor(const Graph& host,
                                             const Graph& pattern) {
  if (host == pattern) {
    MinorEmbedding identity;
    for (int v = 0; v < pattern.vertex_count(); ++v)
      identity.branch_sets.push_back({v});
    return identity;
  }
  if (!passes_minor_filters(host, pattern)) return std::nullopt;
  if (pattern.vertex_count() == 0) return MinorEmbedding{};

  MinorSearch search{host, pattern, placement_order(pattern),
                     std::vector<std::uint64_t>(pattern.vertex_count(), 0)};
  if (!search.place(0)) return std::nullopt;

  MinorEmbedding embedding;
  embedding.branch_sets.resize(pattern.vertex_count());
  for (int step = 0; step < pattern.vertex_count(); ++step) {
    auto& set = embedding.branch_sets[search.order[step]];
    for (std::uint64_t m = search.branch[step]; m; m &= m - 1)
      set.push_back(std::countr_zero(m));
  }
  check_embedding(embedding, host, pattern);
  return embedding;
}

std::optional<std::pair<int, MinorEmbedding>> contains_any_minor(
    const Graph& host, const std::vector<Graph>& patterns) {
  std::vector<int> by_size(patterns.size());
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(), [&](int a, int b) {
    if (patterns[a].vertex_count() != patterns[b].vertex_count())
      return patterns[a].vertex_count() < patterns[b].vertex_count();
    return patterns[a].edge_count() < patterns[b].edge_count();
  });
  for (int index : by_size)
    if (auto embedding = contains_minor(host, patterns[index]))
      return std::make_pair(index, std::move(*embedding));
  return std::nullopt;
}

namespace {

struct TopologicalSearch {
  const Graph& host;
  const Graph& pattern;
  std::vector<std::pair<int, int>> pattern_edges;
  std::vector<int> image;          // pattern vertex -> host vertex
  std::uint64_t image_mask = 0;
  std::uint64_t internals = 0;     // interior vertices of accepted paths
  std::vector<std::vector<int>> paths;

  bool assign(int next) {
    if (next == pattern.vertex_count()) return route(0);
    // Candidates in ascending order; a branch vertex needs host degree at
    // least its pattern degree to feed that many disjoint paths.
    for (int v = 0; v < host.vertex_count(); ++v) {
      if (image_mask & bit(v)) continue;
      if (host.degree(v) < pattern.degree(next)) continue;
      image[next] = v;
      image_mask |= bit(v);
      if (assign(next + 1)) return true;
      image_mask &= ~bit(v);
    }
    return false;
  }

  bool route(int edge_index) {
    if (edge_index == static_cast<int>(pattern_edges.size())) return true;
    auto [a, b] = pattern_edges[edge_index];
    std::vector<int> path{image[a]};
    return extend_path(edge_index, path, bit(image[a]), image[b]);
  }

  bool extend_path(int edge_index, std::vector<int>& path,
                   std::uint64_t on_path, int target) {
    int tip = path.back();
    if (tip == target) {
      std::uint64_t interior = on_path & ~bit(path.front()) & ~bit(target);
      internals |= interior;
      paths.push_back(path);
      if (route(edge_index + 1)) return true;
      paths.pop_back();
      internals &= ~interior;
      return false;
    }
    std::uint64_t blocked = internals | on_path | (image_mask & ~bit(target));
    std::uint64_t options = host.neighbor_mask(tip) & ~blocked;
    for (std::uint64_t m = options; m; m &= m - 1) {
      int v = std::countr_zero(m);
      path.push_back(v);
      if (extend_path(edge_index, path, on_path | bit(v), target)) return true;
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

bool TopologicalEmbedding::valid_for(const Graph& host,
                                     const Graph& pattern) const {
  if (static_cast<int>(branch_vertices.size()) != pattern.vertex_count())
    return false;
  std::uint64_t image_mask = 0;
  for (int v : branch_vertices) {
    if (v < 0 || v >= host.vertex_count()) return false;
    if (image_mask & bit(v)) return false;
    image_mask |= bit(v);
  }
  auto pattern_edges = pattern.edges();
  if (paths.size() != pattern_edges.size()) return false;
  std::uint64_t interiors = 0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& path = paths[i];
    if (path.size() < 2) return false;
    if (path.front() != branch_vertices[pattern_edges[i].first] ||
        path.back() != branch_vertices[pattern_edges[i].second])
      return false;
    std::uint64_t on_path = 0;
    for (std::size_t j = 0; j < path.size(); ++j) {
      int v = path[j];
      if (v < 0 || v >= host.vertex_count()) return false;
      if (on_path & bit(v)) return false;
      on_path |= bit(v);
      if (j > 0 && !host.adjacent(path[j - 1], v)) return false;
    }
    std::uint64_t interior = on_path & ~bit(path.front()) & ~bit(path.back());
    if (interior & (image_mask | interiors)) return false;
    interiors |= interior;
  }
  return true;
}

std::optional<TopologicalEmbedding> contains_topological_minor(
    const Graph& host, const Graph& pattern) {
  if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  if (pattern.edge_count() > host.edge_count()) return std::nullopt;

  TopologicalSearch search{host, pattern, pattern.edges(),
                           std::vector<int>(pattern.vertex_count(), -1),
                           0, 0, {}};
  if (!search.assign(0)) return std::nullopt;

  TopologicalEmbedding embedding{search.image, search.paths};
  if (!embedding.valid_for(host, pattern))
    throw std::logic_error(
        "contains_topological_minor produced an invalid embedding");
  return embedding;
}

std::set<CanonicalForm> one_step_minors(const Graph& g) {
  std::set<CanonicalForm> out;
  for (auto [u, v] : g.edges()) {
    out.insert(canonical_form(g.delete_edge(u, v)));
    out.insert(canonical_form(g.contract_edge(u, v)));
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) out.insert(canonical_form(g.delete_vertex(v)));
  return out;
}

bool is_obstruction(const Graph& g, const ClassPredicate& cls) {
  if (!cls.is_minor_closed)
    throw std::invalid_argument(
        "is_obstruction needs a minor-closed class predicate");
  if (cls.test(g)) return false;
  for (auto [u, v] : g.edges()) {
    if (!cls.test(g.delete_edge(u, v))) return false;
    if (!cls.test(g.contract_edge(u, v))) return false;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0 && !cls.test(g.delete_vertex(v))) return false;
  return true;
}

}  // namespace minorobs
