#include "chromabound/indices.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace chromabound {

double randic(const Graph& g) {
  long double sum = 0.0L;
  for (auto [u, v] : g.edge_list()) {
    sum += 1.0L / std::sqrt(static_cast<long double>(g.degree(u)) * g.degree(v));
  }
  return static_cast<double>(sum);
}

Rational harmonic(const Graph& g) {
  Rational sum;
  for (auto [u, v] : g.edge_list()) sum += Rational(2, g.degree(u) + g.degree(v));
  return sum;
}

Rational r_prime(const Graph& g) {
  Rational sum;
  for (auto [u, v] : g.edge_list()) sum += Rational(1, std::max(g.degree(u), g.degree(v)));
  return sum;
}

IndexBundle compute_indices(const Graph& g) { return {randic(g), harmonic(g), r_prime(g)}; }

Rational deletion_delta(const Graph& g, int v) {
  const Rational delta = r_prime(g) - r_prime(g.delete_vertex(v));
  assert(g.degree(v) != g.min_degree() || delta >= Rational(0));
  return delta;
}

namespace {

bool neighbourhood_condition(const Graph& g, int v, bool require_degree_two) {
  if (g.degree(v) != g.min_degree()) {
    throw ContractError("equality_condition: vertex " + std::to_string(v) + " has degree " +
                        std::to_string(g.degree(v)) + ", minimum is " +
                        std::to_string(g.min_degree()));
  }
  const VertexSet nv = g.neighbors(v);
  for (VertexSet s = nv; s; s &= s - 1) {
    const int u = std::countr_zero(s);
    if (g.neighbors(u) & nv) return false;
    const int du = g.degree(u);
    if (require_degree_two && du < 2) return false;
    for (VertexSet t = g.neighbors(u) & ~bit(v); t; t &= t - 1) {
      if (g.degree(std::countr_zero(t)) >= du) return false;
    }
  }
  return true;
}

}  // namespace

bool equality_condition(const Graph& g, int v) { return neighbourhood_condition(g, v, true); }

bool equality_condition_without_degree_clause(const Graph& g, int v) {
  return neighbourhood_condition(g, v, false);
}

}  // namespace chromabound
