#ifndef CHROMABOUND_GRAPH_HPP
#define CHROMABOUND_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chromabound {

/// Bit set over vertex ids 0..63.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// Raised for malformed graphs and out-of-range vertex arguments.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation is called outside its documented precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when an exact search is asked to run above its configured order.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int popcount(VertexSet s) { return std::popcount(s); }
inline VertexSet bit(int v) { return VertexSet{1} << v; }

/// Simple undirected graph on vertices 0..n-1, stored as neighbour bit sets.
///
/// Instances are immutable once built. Every constructor validates symmetry
/// and rejects loops, so the rest of the library can take both for granted.
class Graph {
 public:
  /// The null graph K0.
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Builds from an edge list. Loops, repeated edges and out-of-range
  /// endpoints are rejected with GraphError.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  /// Builds from neighbour sets; the sets must be symmetric and loop-free.
  static Graph from_adjacency(std::vector<VertexSet> adj);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edges_; }

  VertexSet neighbors(int v) const { return adj_.at(check(v)); }
  int degree(int v) const { return popcount(adj_.at(check(v))); }
  bool adjacent(int u, int v) const { return (neighbors(u) >> check(v)) & 1U; }

  /// Zero for the null graph.
  int min_degree() const;
  int max_degree() const;

  VertexSet all_vertices() const;
  std::vector<int> degrees() const;
  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edge_list() const;

  bool has_isolated_vertex() const;
  bool is_connected() const;
  bool is_complete() const { return 2 * edges_ == order() * (order() - 1); }
  bool is_tree() const { return order() >= 1 && is_connected() && edges_ == order() - 1; }

  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabel(std::span<const int> perm) const;

  /// G - v. Vertices with id greater than v shift down by one.
  Graph delete_vertex(int v) const;

  /// Subgraph induced by `keep`, relabelled in increasing id order.
  Graph induced(VertexSet keep) const;

  /// Connected components ordered by their smallest original vertex id.
  /// Each component keeps the relative order of its original ids.
  std::vector<Graph> components() const;

  bool operator==(const Graph& other) const = default;

 private:
  int check(int v) const;

  std::vector<VertexSet> adj_;
  int edges_ = 0;
};

Graph complement(const Graph& g);

std::string describe(const Graph& g);

}  // namespace chromabound

#endif  // CHROMABOUND_GRAPH_HPP
