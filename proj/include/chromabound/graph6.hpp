#ifndef CHROMABOUND_GRAPH6_HPP
#define CHROMABOUND_GRAPH6_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chromabound/graph.hpp"

namespace chromabound {

/// graph6 decode failure; offset() is the 0-based byte that could not be used.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(std::size_t offset, const std::string& what);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Largest order written with a single size byte; larger graphs use the
/// 4-byte "~" form.
inline constexpr int kGraph6MaxOrder = 62;

/// Decodes one graph6 line. A trailing '\n' or "\r\n" is tolerated; anything
/// else after the last data byte is an error. The 4-byte size form
/// (leading '~') is read for orders up to kMaxVertices.
Graph parse_graph6(std::string_view text);

/// Encodes with the single-byte size form; throws Graph6Error for n > 62.
std::string to_graph6(const Graph& g);

/// One successfully parsed line of a graph6 stream.
struct Graph6Line {
  std::size_t line_number;  // 1-based
  std::string text;
  Graph graph;
};

/// One line that failed to parse.
struct Graph6LineError {
  std::size_t line_number;
  std::string text;
  std::string message;
};

struct Graph6Stream {
  std::vector<Graph6Line> graphs;
  std::vector<Graph6LineError> errors;
};

/// Reads a whole graph6 stream. Blank lines are ignored and a leading
/// ">>graph6<<" header is stripped from any line that carries it.
Graph6Stream read_graph6_stream(std::istream& in);

}  // namespace chromabound

#endif  // CHROMABOUND_GRAPH6_HPP
