#ifndef MINOROBS_CODEC_HPP
#define MINOROBS_CODEC_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "minorobs/graph.hpp"

namespace minorobs {

/// Failure modes of the text codecs, each reported as a distinct kind so
/// callers (and the CLI) can tell malformed framing from bad payload.
enum class CodecErrorKind {
  kBadLength,        // graph6 byte count does not match the header
  kByteOutOfRange,   // byte outside the printable range 63..126
  kNonzeroPadding,   // trailing pad bits of the last group are not zero
  kUnsupportedSize,  // n > 62 (extended graph6 headers are out of scope)
  kBadHeader,        // edge list header is not "n <count>"
  kBadEdge,          // unparseable edge line
  kDuplicateEdge,
  kLoop,
  kVertexOutOfRange,
};

class CodecError : public std::runtime_error {
 public:
  CodecError(CodecErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  CodecErrorKind kind() const { return kind_; }

 private:
  CodecErrorKind kind_;
};

/// graph6, short form only (n <= 62). Adjacency bits are the upper triangle
/// read column by column: (0,1), (0,2), (1,2), (0,3), ... packed six per
/// byte, most significant bit first, each byte offset by 63.
Graph decode_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// Plain text edge list: a header line "n <vertex-count>" followed by one
/// "i j" line per edge.
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list; edges come out in lexicographic order.
std::string write_edge_list(const Graph& g);

/// Undirected DOT block: graph <name> { i -- j; ... }. Isolated vertices
/// appear as bare node statements so the drawing shows them.
std::string write_dot(const Graph& g, std::string_view name);

}  // namespace minorobs

#endif
