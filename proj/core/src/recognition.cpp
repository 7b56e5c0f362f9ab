#include "minorobs/recognition.hpp"

#include <bit>
#include <stdexcept>

namespace minorobs {

namespace {

// Pseudoforest check on the subgraph induced by `alive`, without building it.
bool pseudoforest_within(const Graph& g, std::uint64_t alive) {
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
    int vertices = std::popcount(seen);
    int edges = 0;
    for (std::uint64_t m = seen; m; m &= m - 1)
      edges += std::popcount(g.neighbor_mask(std::countr_zero(m)) & seen);
    if (edges / 2 > vertices) return false;
    remaining &= ~seen;
  }
  return true;
}

}  // namespace

bool is_pseudoforest(const Graph& g) {
  return pseudoforest_within(g, g.vertex_mask());
}

std::optional<int> apex_pseudoforest_witness(const Graph& g) {
  std::uint64_t all = g.vertex_mask();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (pseudoforest_within(g, all & ~(std::uint64_t{1} << v))) return v;
  return std::nullopt;
}

bool is_apex_pseudoforest(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return apex_pseudoforest_witness(g).has_value();
}

bool is_k_apex(const Graph& g, const ClassPredicate& base, int k) {
  if (k < 0) throw std::invalid_argument("is_k_apex: negative k");
  if (base.test(g)) return true;
  if (k == 0) return false;
  // Subsets of exact size s for s = 1..k; smaller sizes are subsumed since
  // deleting extra vertices from a member keeps membership only for
  // minor-closed bases, which is not assumed here.
  std::vector<int> pick;
  auto try_size = [&](auto&& self, int start, int remaining) -> bool {
    if (remaining == 0) {
      std::uint64_t drop = 0;
      for (int v : pick) drop |= std::uint64_t{1} << v;
      return base.test(g.induced_mask(g.vertex_mask() & ~drop));
    }
    for (int v = start; v <= g.vertex_count() - remaining; ++v) {
      pick.push_back(v);
      if (self(self, v + 1, remaining - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int size = 1; size <= k && size <= g.vertex_count(); ++size)
    if (try_size(try_size, 0, size)) return true;
  return false;
}

const ClassPredicate& pseudoforest_class() {
  static const ClassPredicate cls{"pseudoforest", is_pseudoforest, true};
  return cls;
}

const ClassPredicate& apex_pseudoforest_class() {
  static const ClassPredicate cls{"apex-pseudoforest", is_apex_pseudoforest,
                                  true};
  return cls;
}

}  // namespace minorobs
