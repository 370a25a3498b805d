#include "chromabound/graph6.hpp"

#include <istream>

namespace chromabound {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxByte = 126;
constexpr std::string_view kHeader = ">>graph6<<";

int data_value(std::string_view text, std::size_t pos) {
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kOffset || c > kMaxByte) {
    throw Graph6Error(pos, "byte value " + std::to_string(c) + " outside [63,126]");
  }
  return c - kOffset;
}

}  // namespace

Graph6Error::Graph6Error(std::size_t offset, const std::string& what)
    : std::runtime_error("graph6 byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

Graph parse_graph6(std::string_view text) {
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error(0, "empty input");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] == '~') {
    if (text.size() > 1 && text[1] == '~') throw Graph6Error(1, "8-byte size form not supported");
    if (text.size() < 4) throw Graph6Error(text.size(), "truncated size field");
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | data_value(text, pos);
    if (n > kMaxVertices) {
      throw Graph6Error(1, "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
    }
  } else {
    n = data_value(text, 0);
    pos = 1;
  }

  const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t data_bytes = (pairs + 5) / 6;
  if (text.size() < pos + data_bytes) {
    throw Graph6Error(text.size(), "expected " + std::to_string(data_bytes) +
                                       " data bytes for order " + std::to_string(n));
  }
  if (text.size() > pos + data_bytes) throw Graph6Error(pos + data_bytes, "trailing bytes");

  std::vector<VertexSet> adj(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t byte = pos + k / 6;
      const int value = data_value(text, byte);
      if ((value >> (5 - k % 6)) & 1) {
        adj[i] |= bit(j);
        adj[j] |= bit(i);
      }
    }
  }
  // Padding bits in the final byte must be zero.
  if (data_bytes > 0) {
    const std::size_t last = pos + data_bytes - 1;
    const int value = data_value(text, last);
    const std::size_t used = pairs - 6 * (data_bytes - 1);
    if (value & ((1 << (6 - used)) - 1)) throw Graph6Error(last, "nonzero padding bits");
  }
  return Graph::from_adjacency(std::move(adj));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= kGraph6MaxOrder) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
  int value = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    const VertexSet nj = g.neighbors(j);
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | static_cast<int>((nj >> i) & 1U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + kOffset));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + kOffset));
  return out;
}

Graph6Stream read_graph6_stream(std::istream& in) {
  Graph6Stream result;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view body = line;
    if (body.starts_with(kHeader)) body.remove_prefix(kHeader.size());
    if (body.empty()) continue;
    try {
      result.graphs.push_back({number, std::string(body), parse_graph6(body)});
    } catch (const std::exception& e) {
      result.errors.push_back({number, std::string(body), e.what()});
    }
  }
  return result;
}

}  // namespace chromabound
