#include "minorobs/catalog.hpp"

#include <sstream>
#include <stdexcept>

#include "minorobs/codec.hpp"

namespace minorobs {

namespace {

struct RawEntry {
  const char* name;
  int connectivity_class;
  int order;
  std::vector<std::pair<int, int>> edges;
};

// Transcribed adjacency data. Class 0 entries are disjoint unions of
// diamonds (K4 minus an edge) and butterflies (two triangles sharing a
// vertex); O3_1 is the triangular prism, O3_2 is K_{3,3} and O3_3 is K5
// minus an edge.
const std::vector<RawEntry>& raw_entries() {
  static const std::vector<RawEntry> entries = {
      {"O0_1", 0, 8,
       {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
        {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}}},
      {"O0_2", 0, 10,
       {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4},
        {5, 6}, {5, 7}, {6, 7}, {7, 8}, {7, 9}, {8, 9}}},
      {"O0_3", 0, 9,
       {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
        {4, 5}, {4, 6}, {5, 6}, {6, 7}, {6, 8}, {7, 8}}},

      {"O1_1", 1, 8,
       {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4},
        {3, 5}, {4, 5}, {5, 6}, {5, 7}, {6, 7}}},
      {"O1_2", 1, 8,
       {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4},
        {3, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}}},
      {"O1_3", 1, 8,
       {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4},
        {3, 5}, {4, 5}, {3, 6}, {5, 6}, {4, 7}, {5, 7}}},
      {"O1_4", 1, 7,
       {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
        {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 6}}},
      {"O1_5", 1, 7,
       {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {2, 5},
        {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}}},
      {"O1_6", 1, 9,
       {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5},
        {4, 5}, {2, 6}, {4, 6}, {2, 7}, {3, 7}, {3, 8}, {4, 8}}},
      {"O1_7", 1, 9,
       {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}, {1, 5},
        {2, 5}, {2, 6}, {3, 6}, {0, 7}, {7, 8}, {0, 8}}},
      {"O1_8", 1, 9,
       {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
        {6, 7}, {6, 8}, {7, 8}, {2, 3}, {1, 8}, {4, 8}}},
      {"O1_9", 1, 9,
       {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
        {6, 7}, {6, 8}, {7, 8}, {2, 3}, {2, 7}, {3, 6}}},
      {"O1_10", 1, 9,
       {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
        {6, 7}, {6, 8}, {7, 8}, {2, 3}, {3, 8}, {2, 8}}},
      {"O1_11", 1, 8,
       {{0, 1}, {1, 2}, {0, 2}, {1, 4}, {2, 3}, {2, 4},
        {3, 4}, {3, 5}, {4, 5}, {1, 6}, {6, 7}, {1, 7}}},
      {"O1_12", 1, 9,
       {{0, 1}, {0, 2}, {1, 2}, {2, 4}, {3, 4}, {2, 3}, {4, 5},
        {4, 6}, {5, 6}, {6, 7}, {6, 8}, {7, 8}, {2, 6}}},

      {"O2_1", 2, 6,
       {{0, 2}, {0, 5}, {0, 3}, {0, 4}, {1, 2},
        {1, 5}, {1, 3}, {1, 4}, {2, 3}, {4, 5}}},
      {"O2_2", 2, 6,
       {{0, 1}, {0, 2}, {1, 2}, {1, 4}, {2, 5},
        {4, 5}, {1, 3}, {3, 5}, {2, 3}, {3, 4}}},
      {"O2_3", 2, 8,
       {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4},
        {2, 5}, {3, 5}, {0, 6}, {2, 6}, {1, 7}, {3, 7}}},
      {"O2_4", 2, 7,
       {{0, 4}, {1, 4}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
        {2, 3}, {0, 5}, {4, 5}, {4, 6}, {1, 6}}},
      {"O2_5", 2, 6,
       {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5},
        {4, 5}, {1, 2}, {3, 4}, {1, 4}, {2, 3}}},
      {"O2_6", 2, 7,
       {{0, 2}, {1, 6}, {3, 6}, {2, 4}, {3, 4}, {0, 1},
        {2, 3}, {0, 3}, {1, 2}, {1, 5}, {5, 6}}},
      {"O2_7", 2, 8,
       {{0, 3}, {1, 4}, {1, 2}, {0, 2}, {2, 3}, {2, 4},
        {3, 5}, {4, 6}, {5, 7}, {6, 7}, {3, 4}, {5, 6}}},
      {"O2_8", 2, 7,
       {{0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 4}, {2, 3},
        {3, 4}, {4, 5}, {3, 5}, {3, 6}, {4, 6}, {2, 6}}},
      {"O2_9", 2, 7,
       {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4},
        {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}}},
      {"O2_10", 2, 8,
       {{0, 1}, {0, 3}, {1, 3}, {1, 5}, {1, 2}, {1, 7}, {2, 5},
        {2, 7}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {5, 6}}},
      {"O2_11", 2, 9,
       {{0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 4}, {2, 3}, {3, 4}, {4, 5},
        {3, 5}, {3, 8}, {4, 8}, {3, 7}, {2, 7}, {4, 6}, {2, 6}}},
      {"O2_12", 2, 8,
       {{0, 3}, {1, 6}, {1, 2}, {0, 2}, {2, 3}, {2, 6},
        {3, 4}, {6, 7}, {4, 5}, {5, 7}, {3, 7}, {4, 7}}},
      {"O2_13", 2, 7,
       {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 5}, {3, 4},
        {3, 6}, {3, 5}, {2, 5}, {4, 6}, {5, 6}}},
      {"O2_14", 2, 9,
       {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
        {6, 7}, {6, 8}, {7, 8}, {2, 3}, {1, 7}, {4, 6}}},
      {"O2_15", 2, 8,
       {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
        {6, 7}, {1, 6}, {4, 6}, {5, 7}, {0, 7}}},

      {"O3_1", 3, 6,
       {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5},
        {3, 5}, {0, 3}, {1, 4}, {2, 5}}},
      {"O3_2", 3, 6,
       {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4},
        {1, 5}, {2, 3}, {2, 4}, {2, 5}}},
      {"O3_3", 3, 5,
       {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
        {1, 3}, {1, 4}, {2, 3}, {2, 4}}},
  };
  return entries;
}

}  // namespace

const Graph& ObstructionCatalog::lookup(std::string_view name) const {
  for (const CatalogEntry& entry : entries_)
    if (entry.name == name) return entry.graph;
  throw std::out_of_range("unknown catalog entry \"" + std::string(name) +
                          "\"");
}

std::vector<Graph> ObstructionCatalog::graphs() const {
  std::vector<Graph> out;
  out.reserve(entries_.size());
  for (const CatalogEntry& entry : entries_) out.push_back(entry.graph);
  return out;
}

ObstructionCatalog build_catalog() {
  std::vector<CatalogEntry> entries;
  entries.reserve(raw_entries().size());
  for (const RawEntry& raw : raw_entries())
    entries.push_back(
        {raw.name, raw.connectivity_class, Graph(raw.order, raw.edges)});
  return ObstructionCatalog(std::move(entries));
}

std::string export_catalog(const ObstructionCatalog& catalog,
                           ExportFormat format) {
  std::ostringstream out;
  for (const CatalogEntry& entry : catalog.entries()) {
    switch (format) {
      case ExportFormat::kGraph6:
        out << encode_graph6(entry.graph) << "\n";
        break;
      case ExportFormat::kDot:
        out << write_dot(entry.graph, entry.name);
        break;
      case ExportFormat::kEdgeList:
        out << "# " << entry.name << "\n" << write_edge_list(entry.graph);
        break;
    }
  }
  return out.str();
}

}  // namespace minorobs
