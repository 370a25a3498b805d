#include "chromabound/graph.hpp"

#include <algorithm>
#include <sstream>

namespace chromabound {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("graph order " + std::to_string(n) + " outside 0.." +
                     std::to_string(kMaxVertices));
  }
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    if ((g.adj_[u] >> v) & 1U) {
      throw GraphError("repeated edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
    ++g.edges_;
  }
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_adjacency(std::vector<VertexSet> adj) {
  const int n = static_cast<int>(adj.size());
  check_order(n);
  const VertexSet all = n == 64 ? ~VertexSet{0} : (bit(n) - 1);
  int degree_sum = 0;
  for (int u = 0; u < n; ++u) {
    if (adj[u] & ~all) throw GraphError("neighbour id out of range at vertex " + std::to_string(u));
    if ((adj[u] >> u) & 1U) throw GraphError("loop at vertex " + std::to_string(u));
    for (VertexSet s = adj[u]; s; s &= s - 1) {
      const int v = std::countr_zero(s);
      if (!((adj[v] >> u) & 1U)) {
        throw GraphError("asymmetric adjacency between " + std::to_string(u) + " and " +
                         std::to_string(v));
      }
    }
    degree_sum += popcount(adj[u]);
  }
  Graph g;
  g.adj_ = std::move(adj);
  g.edges_ = degree_sum / 2;
  return g;
}

int Graph::check(int v) const {
  if (v < 0 || v >= order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(order()));
  }
  return v;
}

int Graph::min_degree() const {
  int best = order() == 0 ? 0 : kMaxVertices;
  for (VertexSet s : adj_) best = std::min(best, popcount(s));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (VertexSet s : adj_) best = std::max(best, popcount(s));
  return best;
}

VertexSet Graph::all_vertices() const {
  return order() == 64 ? ~VertexSet{0} : (bit(order()) - 1);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d;
  d.reserve(adj_.size());
  for (VertexSet s : adj_) d.push_back(popcount(s));
  return d;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (int u = 0; u < order(); ++u) {
    for (VertexSet s = adj_[u] & ~((bit(u) << 1) - 1); s; s &= s - 1) {
      out.emplace_back(u, std::countr_zero(s));
    }
  }
  return out;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adj_.begin(), adj_.end(), [](VertexSet s) { return s == 0; });
}

bool Graph::is_connected() const {
  if (order() <= 1) return true;
  VertexSet seen = 1;
  VertexSet frontier = 1;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s; s &= s - 1) next |= adj_[std::countr_zero(s)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all_vertices();
}

Graph Graph::relabel(std::span<const int> perm) const {
  const int n = order();
  if (static_cast<int>(perm.size()) != n) throw GraphError("permutation length mismatch");
  VertexSet image = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || ((image >> p) & 1U)) throw GraphError("not a permutation");
    image |= bit(p);
  }
  std::vector<VertexSet> adj(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (VertexSet s = adj_[u]; s; s &= s - 1) adj[perm[u]] |= bit(perm[std::countr_zero(s)]);
  }
  Graph g;
  g.adj_ = std::move(adj);
  g.edges_ = edges_;
  return g;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= all_vertices();
  std::vector<int> new_id(adj_.size(), -1);
  int next = 0;
  for (VertexSet s = keep; s; s &= s - 1) new_id[std::countr_zero(s)] = next++;
  std::vector<VertexSet> adj(static_cast<std::size_t>(next), 0);
  int degree_sum = 0;
  for (VertexSet s = keep; s; s &= s - 1) {
    const int u = std::countr_zero(s);
    for (VertexSet t = adj_[u] & keep; t; t &= t - 1) {
      adj[new_id[u]] |= bit(new_id[std::countr_zero(t)]);
      ++degree_sum;
    }
  }
  Graph g;
  g.adj_ = std::move(adj);
  g.edges_ = degree_sum / 2;
  return g;
}

Graph Graph::delete_vertex(int v) const {
  check(v);
  return induced(all_vertices() & ~bit(v));
}

std::vector<Graph> Graph::components() const {
  std::vector<Graph> out;
  VertexSet unseen = all_vertices();
  while (unseen) {
    VertexSet comp = unseen & (~unseen + 1);
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet s = frontier; s; s &= s - 1) next |= adj_[std::countr_zero(s)];
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(induced(comp));
    unseen &= ~comp;
  }
  return out;
}

Graph complement(const Graph& g) {
  std::vector<VertexSet> adj(static_cast<std::size_t>(g.order()));
  const VertexSet all = g.all_vertices();
  for (int v = 0; v < g.order(); ++v) adj[v] = all & ~g.neighbors(v) & ~bit(v);
  return Graph::from_adjacency(std::move(adj));
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " m=" << g.size() << " E={";
  bool first = true;
  for (auto [u, v] : g.edge_list()) {
    os << (first ? "" : ",") << u << '-' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace chromabound
