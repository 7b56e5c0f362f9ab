#include "minorobs/codec.hpp"

#include <cstdint>
#include <sstream>
#include <vector>

namespace minorobs {

namespace {

std::size_t body_bytes(int n) {
  return (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
}

}  // namespace

Graph decode_graph6(std::string_view text) {
  if (text.empty())
    throw CodecError(CodecErrorKind::kBadLength, "graph6: empty input");
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw CodecError(CodecErrorKind::kByteOutOfRange,
                       "graph6: byte " + std::to_string(i) +
                           " outside printable range 63..126");
  }
  if (text[0] == 126)
    throw CodecError(CodecErrorKind::kUnsupportedSize,
                     "graph6: extended size header (n > 62) not supported");
  int n = text[0] - 63;
  if (text.size() != 1 + body_bytes(n))
    throw CodecError(CodecErrorKind::kBadLength,
                     "graph6: expected " + std::to_string(1 + body_bytes(n)) +
                         " bytes for n=" + std::to_string(n) + ", got " +
                         std::to_string(text.size()));

  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  std::size_t total_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((text[1 + bit / 6] - 63) >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
  for (std::size_t pad = total_bits; pad < body_bytes(n) * 6; ++pad) {
    if ((text[1 + pad / 6] - 63) >> (5 - pad % 6) & 1)
      throw CodecError(CodecErrorKind::kNonzeroPadding,
                       "graph6: nonzero padding bit");
  }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out(1 + body_bytes(n), 63);
  out[0] = static_cast<char>(63 + n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.adjacent(i, j)) out[1 + bit / 6] += 1 << (5 - bit % 6);
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    if (n < 0) {
      std::string tag;
      if (!(fields >> tag >> n) || tag != "n" || n < 0 ||
          n > Graph::kMaxVertices || (fields >> tag))
        throw CodecError(CodecErrorKind::kBadHeader,
                         "edge list: expected header \"n <count>\", got \"" +
                             line + "\"");
      continue;
    }
    int u, v;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra))
      throw CodecError(CodecErrorKind::kBadEdge,
                       "edge list: bad edge line \"" + line + "\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw CodecError(CodecErrorKind::kVertexOutOfRange,
                       "edge list: vertex id outside [0, " +
                           std::to_string(n) + ") in \"" + line + "\"");
    if (u == v)
      throw CodecError(CodecErrorKind::kLoop,
                       "edge list: loop at vertex " + std::to_string(u));
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (n < 0)
    throw CodecError(CodecErrorKind::kBadHeader, "edge list: missing header");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (g.adjacent(u, v))
      throw CodecError(CodecErrorKind::kDuplicateEdge,
                       "edge list: duplicate edge " + std::to_string(u) + " " +
                           std::to_string(v));
    g = g.with_edge(u, v);
  }
  return g;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::string write_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace minorobs
