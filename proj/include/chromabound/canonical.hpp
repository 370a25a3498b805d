#ifndef CHROMABOUND_CANONICAL_HPP
#define CHROMABOUND_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "chromabound/graph.hpp"

namespace chromabound {

/// Default order limit for brute-force canonical labelling.
inline constexpr int kCanonicalLimit = 10;

/// Isomorphism key: two graphs have equal keys iff they are isomorphic.
///
/// `bits` holds the upper adjacency triangle of the canonically relabelled
/// graph in graph6 pair order, pair (0,1) in the most significant used bit.
/// Keys order first by vertex count, then by bits.
struct CanonicalForm {
  int order = 0;
  std::uint64_t bits = 0;

  auto operator<=>(const CanonicalForm&) const = default;
};

/// Canonical key by exhaustive search over labellings that respect an
/// isomorphism-invariant colour refinement. Throws LimitError above `limit`
/// (hard cap 11 since the key must fit in 64 bits).
CanonicalForm canonical_form(const Graph& g, int limit = kCanonicalLimit);

/// A relabelling `perm` (vertex v -> perm[v]) with
/// g.relabel(perm) == canonical_graph(g).
std::vector<int> canonical_labeling(const Graph& g, int limit = kCanonicalLimit);

/// The representative of g's isomorphism class.
Graph canonical_graph(const Graph& g, int limit = kCanonicalLimit);

bool isomorphic(const Graph& a, const Graph& b, int limit = kCanonicalLimit);

std::string to_string(const CanonicalForm& f);

}  // namespace chromabound

#endif  // CHROMABOUND_CANONICAL_HPP
