#include "chromabound/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

namespace chromabound {

namespace {

void check_limit(const Graph& g, int limit, const char* what) {
  if (g.order() > limit) {
    throw LimitError(std::string(what) + ": order " + std::to_string(g.order()) +
                     " above search limit " + std::to_string(limit));
  }
}

// Greedy clique grown from each vertex in turn; a lower bound on chi.
int greedy_clique(const Graph& g) {
  int best = g.order() > 0 ? 1 : 0;
  for (int v = 0; v < g.order(); ++v) {
    VertexSet candidates = g.neighbors(v);
    int size = 1;
    while (candidates) {
      int pick = -1;
      int pick_score = -1;
      for (VertexSet s = candidates; s; s &= s - 1) {
        const int u = std::countr_zero(s);
        const int score = popcount(g.neighbors(u) & candidates);
        if (score > pick_score) {
          pick = u;
          pick_score = score;
        }
      }
      candidates &= g.neighbors(pick);
      ++size;
    }
    best = std::max(best, size);
  }
  return best;
}

class KColoring {
 public:
  KColoring(const Graph& g, int k) : g_(g), k_(k), colors_(static_cast<std::size_t>(g.order()), 0) {
    order_.resize(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
  }

  bool solve() { return assign(0, 0); }
  const std::vector<int>& colors() const { return colors_; }

 private:
  bool assign(std::size_t idx, int used) {
    if (idx == order_.size()) return true;
    const int v = order_[idx];
    unsigned forbidden = 0;
    for (VertexSet s = g_.neighbors(v); s; s &= s - 1) forbidden |= 1U << colors_[std::countr_zero(s)];
    // New colours are interchangeable: only the first unused one is tried.
    const int top = std::min(k_, used + 1);
    for (int c = 1; c <= top; ++c) {
      if (forbidden & (1U << c)) continue;
      colors_[v] = c;
      if (assign(idx + 1, std::max(used, c))) return true;
    }
    colors_[v] = 0;
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> order_;
  std::vector<int> colors_;
};

// Grundy search over vertex orderings. The first-fit colouring of a prefix is
// all that matters for its completions, so partial colourings are memoised.
class GrundySearch {
 public:
  explicit GrundySearch(const Graph& g)
      : g_(g), n_(g.order()), cap_(g.max_degree() + 1), colors_(static_cast<std::size_t>(n_), 0) {}

  void run() {
    if (n_ == 0) return;
    explore(0, 0);
  }

  int best() const { return best_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (int c : colors_) k = (k << 4) | static_cast<std::uint64_t>(c);
    return k;
  }

  void explore(VertexSet placed, int top) {
    if (best_ == cap_) return;
    if (placed == g_.all_vertices()) {
      if (top > best_) {
        best_ = top;
        witness_ = colors_;
      }
      return;
    }
    int bound = top;
    for (VertexSet s = g_.all_vertices() & ~placed; s; s &= s - 1) {
      bound = std::max(bound, g_.degree(std::countr_zero(s)) + 1);
    }
    if (bound <= best_) return;
    if (!seen_.insert(key()).second) return;

    for (VertexSet s = g_.all_vertices() & ~placed; s; s &= s - 1) {
      const int v = std::countr_zero(s);
      unsigned present = 0;
      for (VertexSet t = g_.neighbors(v) & placed; t; t &= t - 1) {
        present |= 1U << colors_[std::countr_zero(t)];
      }
      const int c = std::countr_one(present >> 1) + 1;
      colors_[v] = c;
      explore(placed | bit(v), std::max(top, c));
      colors_[v] = 0;
      if (best_ == cap_) return;
    }
  }

  const Graph& g_;
  int n_;
  int cap_;
  std::vector<int> colors_;
  std::vector<int> witness_;
  std::unordered_set<std::uint64_t> seen_;
  int best_ = 0;
};

class CompleteColoringSearch {
 public:
  CompleteColoringSearch(const Graph& g, int k)
      : g_(g), k_(k), colors_(static_cast<std::size_t>(g.order()), 0) {
    order_.resize(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) all_pairs_ |= pair_bit(i, j);
  }

  bool solve() { return assign(0, 0, 0, 0); }
  const std::vector<int>& colors() const { return colors_; }

 private:
  std::uint64_t pair_bit(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::uint64_t{1} << ((b - 1) * (b - 2) / 2 + (a - 1));
  }

  // `covered` holds realised colour pairs, `inner_edges` counts edges with
  // both ends coloured.
  bool assign(std::size_t idx, int used, std::uint64_t covered, int inner_edges) {
    const int remaining = static_cast<int>(order_.size() - idx);
    if (used + remaining < k_) return false;
    const int missing = std::popcount(all_pairs_ & ~covered);
    if (missing > g_.size() - inner_edges) return false;
    if (idx == order_.size()) return used == k_ && missing == 0;

    const int v = order_[idx];
    VertexSet coloured_nb = 0;
    unsigned forbidden = 0;
    for (VertexSet s = g_.neighbors(v); s; s &= s - 1) {
      const int u = std::countr_zero(s);
      if (colors_[u]) {
        coloured_nb |= bit(u);
        forbidden |= 1U << colors_[u];
      }
    }
    const int top = std::min(k_, used + 1);
    for (int c = 1; c <= top; ++c) {
      if (forbidden & (1U << c)) continue;
      std::uint64_t next = covered;
      for (VertexSet s = coloured_nb; s; s &= s - 1) next |= pair_bit(c, colors_[std::countr_zero(s)]);
      colors_[v] = c;
      if (assign(idx + 1, std::max(used, c), next, inner_edges + popcount(coloured_nb))) return true;
    }
    colors_[v] = 0;
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> order_;
  std::vector<int> colors_;
  std::uint64_t all_pairs_ = 0;
};

}  // namespace

Coloring Coloring::from_colors(std::vector<int> colors) {
  int k = 0;
  for (int c : colors) {
    if (c < 1) throw ContractError("colour " + std::to_string(c) + " below 1");
    k = std::max(k, c);
  }
  std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
  for (int c : colors) used[c] = true;
  for (int c = 1; c <= k; ++c) {
    if (!used[c]) throw ContractError("colour " + std::to_string(c) + " unused below maximum");
  }
  return {std::move(colors), k};
}

std::string_view to_string(ColoringClass c) {
  switch (c) {
    case ColoringClass::proper: return "proper";
    case ColoringClass::complete: return "complete";
    case ColoringClass::grundy: return "grundy";
  }
  return "unknown";
}

bool validate(const Graph& g, const Coloring& c, ColoringClass cls) {
  if (static_cast<int>(c.colors.size()) != g.order()) {
    throw ContractError("colouring assigns " + std::to_string(c.colors.size()) +
                        " vertices, graph has " + std::to_string(g.order()));
  }
  for (int col : c.colors) {
    if (col < 1) throw ContractError("vertex without a colour");
  }
  for (auto [u, v] : g.edge_list()) {
    if (c.colors[u] == c.colors[v]) return false;
  }
  if (cls == ColoringClass::complete) {
    const int k = *std::max_element(c.colors.begin(), c.colors.end());
    std::vector<std::vector<bool>> met(static_cast<std::size_t>(k) + 1,
                                       std::vector<bool>(static_cast<std::size_t>(k) + 1, false));
    for (auto [u, v] : g.edge_list()) {
      met[c.colors[u]][c.colors[v]] = true;
      met[c.colors[v]][c.colors[u]] = true;
    }
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j)
        if (!met[i][j]) return false;
  }
  if (cls == ColoringClass::grundy) {
    for (int v = 0; v < g.order(); ++v) {
      std::vector<bool> seen(static_cast<std::size_t>(c.colors[v]), false);
      for (VertexSet s = g.neighbors(v); s; s &= s - 1) {
        const int cu = c.colors[std::countr_zero(s)];
        if (cu < c.colors[v]) seen[cu] = true;
      }
      for (int col = 1; col < c.colors[v]; ++col)
        if (!seen[col]) return false;
    }
  }
  return true;
}

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
  const int n = g.order();
  DegeneracyOrdering out;
  out.order.assign(static_cast<std::size_t>(n), -1);
  out.back_degrees.assign(static_cast<std::size_t>(n), 0);
  VertexSet remaining = g.all_vertices();
  for (int i = n - 1; i >= 0; --i) {
    int pick = -1;
    int pick_degree = kMaxVertices + 1;
    for (VertexSet s = remaining; s; s &= s - 1) {
      const int v = std::countr_zero(s);
      const int d = popcount(g.neighbors(v) & remaining);
      if (d < pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    out.order[i] = pick;
    out.back_degrees[i] = pick_degree;
    out.degeneracy = std::max(out.degeneracy, pick_degree);
    remaining &= ~bit(pick);
  }
  return out;
}

int coloring_number(const Graph& g) {
  return g.order() == 0 ? 0 : degeneracy_ordering(g).degeneracy + 1;
}

Coloring first_fit(const Graph& g, std::span<const int> order) {
  std::vector<int> colors(static_cast<std::size_t>(g.order()), 0);
  for (int v : order) {
    std::vector<bool> present(static_cast<std::size_t>(g.order()) + 2, false);
    for (VertexSet s = g.neighbors(v); s; s &= s - 1) present[colors[std::countr_zero(s)]] = true;
    int c = 1;
    while (present[c]) ++c;
    colors[v] = c;
  }
  return Coloring::from_colors(std::move(colors));
}

ColoringResult chromatic_number(const Graph& g, int limit) {
  check_limit(g, limit, "chromatic number");
  if (g.order() == 0) return {};
  const int upper = coloring_number(g);
  for (int k = greedy_clique(g); k < upper; ++k) {
    KColoring search(g, k);
    if (search.solve()) return {Coloring::from_colors(search.colors()), ColoringClass::proper};
  }
  // A first-fit pass along the smallest-last order never exceeds col(G).
  const DegeneracyOrdering ordering = degeneracy_ordering(g);
  return {first_fit(g, ordering.order), ColoringClass::proper};
}

ColoringResult grundy_number(const Graph& g, int limit) {
  // Memo keys pack 4 bits per vertex.
  check_limit(g, std::min(limit, 15), "Grundy number");
  if (g.order() == 0) return {{}, ColoringClass::grundy};
  GrundySearch search(g);
  search.run();
  return {Coloring::from_colors(search.witness()), ColoringClass::grundy};
}

std::optional<Coloring> find_complete_coloring(const Graph& g, int k) {
  if (k < 1 || k > g.order()) return std::nullopt;
  if (k > 11) throw LimitError("complete colouring search supports at most 11 colours");
  CompleteColoringSearch search(g, k);
  if (!search.solve()) return std::nullopt;
  return Coloring::from_colors(search.colors());
}

ColoringResult achromatic_number(const Graph& g, int limit) {
  check_limit(g, limit, "achromatic number");
  if (g.order() == 0) return {{}, ColoringClass::complete};
  // Largest k with k(k-1) <= 2m.
  int k = static_cast<int>((1.0 + std::sqrt(1.0 + 8.0 * g.size())) / 2.0);
  while (k * (k - 1) > 2 * g.size()) --k;
  while ((k + 1) * k <= 2 * g.size()) ++k;
  k = std::min(k, g.order());
  for (; k >= 1; --k) {
    if (auto c = find_complete_coloring(g, k)) return {std::move(*c), ColoringClass::complete};
  }
  throw std::logic_error("achromatic number: no complete colouring found");
}

}  // namespace chromabound
