#ifndef MINOROBS_CATALOG_HPP
#define MINOROBS_CATALOG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "minorobs/graph.hpp"

namespace minorobs {

struct CatalogEntry {
  std::string name;        // "O<connectivity>_<index>"
  int connectivity_class;  // 0..3
  Graph graph;
};

/// The 33 minor obstructions of the apex-pseudoforests, grouped by vertex
/// connectivity: 3 disconnected ones, 12 with a cut vertex, 15 that are
/// biconnected, 3 that are triconnected. The verify module proves these
/// properties of the embedded data rather than trusting it.
class ObstructionCatalog {
 public:
  explicit ObstructionCatalog(std::vector<CatalogEntry> entries)
      : entries_(std::move(entries)) {}

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Throws std::out_of_range for unknown names.
  const Graph& lookup(std::string_view name) const;
  std::vector<Graph> graphs() const;

 private:
  std::vector<CatalogEntry> entries_;
};

ObstructionCatalog build_catalog();

enum class ExportFormat { kGraph6, kDot, kEdgeList };

/// One record per entry in catalog order: graph6 lines, DOT blocks named
/// after the entries, or "# <name>"-headed edge-list blocks.
std::string export_catalog(const ObstructionCatalog& catalog,
                           ExportFormat format);

}  // namespace minorobs

#endif
