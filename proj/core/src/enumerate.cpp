#include "minorobs/enumerate.hpp"

#include <stdexcept>
#include <unordered_set>

#include "minorobs/codec.hpp"

namespace minorobs {

namespace {

// Dedup set storing indices into an external string pool, so each form is
// kept in memory once even at the 10-vertex level.
struct PoolHash {
  const std::vector<std::string>* pool;
  std::size_t operator()(std::uint32_t index) const {
    return std::hash<std::string>{}((*pool)[index]);
  }
};

struct PoolEqual {
  const std::vector<std::string>* pool;
  bool operator()(std::uint32_t a, std::uint32_t b) const {
    return (*pool)[a] == (*pool)[b];
  }
};

}  // namespace

const std::vector<std::string>& GraphEnumerator::level(int n) {
  if (n < 1 || n > kMaxLevel)
    throw std::out_of_range("enumeration level outside [1, 10]");
  while (static_cast<int>(levels_.size()) <= n) {
    int next = static_cast<int>(levels_.size());
    std::vector<std::string> out;
    if (next == 1) {
      out.push_back(encode_graph6(Graph(1)));
    } else {
      const std::vector<std::string>& parents = levels_[next - 1];
      std::unordered_set<std::uint32_t, PoolHash, PoolEqual> seen(
          16, PoolHash{&out}, PoolEqual{&out});
      std::uint64_t mask_count = std::uint64_t{1} << (next - 1);
      for (const std::string& parent_g6 : parents) {
        Graph parent = decode_graph6(parent_g6);
        std::uint64_t first_mask = connected_only_ ? 1 : 0;
        for (std::uint64_t mask = first_mask; mask < mask_count; ++mask) {
          out.push_back(canonical_form(parent.with_vertex(mask)).bytes);
          auto [it, inserted] =
              seen.insert(static_cast<std::uint32_t>(out.size() - 1));
          if (!inserted) out.pop_back();
        }
      }
    }
    levels_.push_back(std::move(out));
  }
  return levels_[n];
}

void GraphEnumerator::for_each(int n,
                               const std::function<void(const Graph&)>& fn) {
  for (const std::string& form : level(n)) fn(decode_graph6(form));
}

EnumerationLevel enumeration_level(int n, bool connected_only) {
  GraphEnumerator enumerator(connected_only);
  EnumerationLevel out{n, {}};
  for (const std::string& form : enumerator.level(n))
    out.forms.insert(CanonicalForm{form});
  return out;
}

void enumerate_graphs(int n, bool connected_only,
                      const std::function<void(const Graph&)>& fn) {
  GraphEnumerator enumerator(connected_only);
  enumerator.for_each(n, fn);
}

std::int64_t known_graph_census(int n) {
  static constexpr std::int64_t counts[] = {1,   1,    2,    4,    11,
                                            34,  156,  1044, 12346, 274668};
  if (n < 0 || n > 9) return -1;
  return counts[n];
}

}  // namespace minorobs
