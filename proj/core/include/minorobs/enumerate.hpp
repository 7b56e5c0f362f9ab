#ifndef MINOROBS_ENUMERATE_HPP
#define MINOROBS_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "minorobs/canonical.hpp"
#include "minorobs/graph.hpp"

namespace minorobs {

/// All isomorphism classes on exactly n vertices, one representative per
/// class, for 1 <= n <= 10.
struct EnumerationLevel {
  int n = 0;
  std::set<CanonicalForm> forms;
};

/// Isomorph-free generation by vertex augmentation: every representative on
/// n-1 vertices is extended by one new vertex with every neighbor subset
/// (every nonempty subset in connected mode) and unseen canonical forms are
/// kept. Levels are cached, so asking for level 9 after level 8 is cheap.
class GraphEnumerator {
 public:
  static constexpr int kMaxLevel = 10;

  explicit GraphEnumerator(bool connected_only)
      : connected_only_(connected_only) {}

  /// Canonical graph6 strings of level n, in deterministic first-seen order.
  const std::vector<std::string>& level(int n);

  void for_each(int n, const std::function<void(const Graph&)>& fn);

  bool connected_only() const { return connected_only_; }

 private:
  bool connected_only_;
  std::vector<std::vector<std::string>> levels_{{}};  // index 0 unused
};

/// One-shot forms of enumerate_graphs, shaped as a level.
EnumerationLevel enumeration_level(int n, bool connected_only);

/// Streams every isomorphism class on n vertices exactly once.
void enumerate_graphs(int n, bool connected_only,
                      const std::function<void(const Graph&)>& fn);

/// Number of simple graphs on n vertices up to isomorphism, 1 <= n <= 9.
/// Returns -1 outside the table. Used as a generator self-test.
std::int64_t known_graph_census(int n);

}  // namespace minorobs

#endif
