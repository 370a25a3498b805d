#ifndef CHROMABOUND_INDICES_HPP
#define CHROMABOUND_INDICES_HPP

#include "chromabound/graph.hpp"
#include "chromabound/rational.hpp"

namespace chromabound {

/// Absolute tolerance used when the irrational Randić index takes part in a
/// comparison with an exact value.
inline constexpr double kRandicTolerance = 1e-9;

/// Randić index: sum over edges uv of 1/sqrt(d(u) d(v)), accumulated in
/// long double. Isolated vertices contribute nothing.
double randic(const Graph& g);

/// Harmonic index: sum over edges uv of 2/(d(u) + d(v)), exact.
Rational harmonic(const Graph& g);

/// Max-degree Randić variant R': sum over edges uv of 1/max(d(u), d(v)), exact.
Rational r_prime(const Graph& g);

struct IndexBundle {
  double r = 0.0;
  Rational h;
  Rational r_prime;
};

IndexBundle compute_indices(const Graph& g);

/// R'(G) - R'(G - v), exact. Non-negative whenever d(v) is the minimum degree.
Rational deletion_delta(const Graph& g, int v);

/// For a minimum-degree vertex v: true iff N(v) is independent, every
/// neighbour u of v has degree at least 2, and u strictly out-degrees all of
/// its other neighbours, i.e. d(w) < d(u) for each w in N(u) \ {v}. Exactly
/// the case where deleting v leaves R' unchanged.
///
/// The degree-2 clause only matters when v lies in a K2 component: there the
/// other two clauses hold vacuously but deleting v removes the edge's 1.
///
/// Throws ContractError when d(v) is not the minimum degree.
bool equality_condition(const Graph& g, int v);

/// The same test without the degree-2 clause.
bool equality_condition_without_degree_clause(const Graph& g, int v);

}  // namespace chromabound

#endif  // CHROMABOUND_INDICES_HPP
