#ifndef CHROMABOUND_FAMILIES_HPP
#define CHROMABOUND_FAMILIES_HPP

#include <optional>
#include <string>
#include <string_view>

#include "chromabound/graph.hpp"

namespace chromabound {

enum class Family { complete, star, path, cycle, kite };

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);

/// Named graph families on n vertices.
///
///   complete  K_n
///   star      K_{1,n-1}, centre 0
///   path      0-1-...-(n-1)
///   cycle     path plus the edge (n-1)-0, n >= 3
///   kite      K_k on {0..k-1} with leaves k..n-1 attached to vertex 0,
///             i.e. K_k with the centre of K_{1,n-k} identified at vertex 0
///
/// `k` is only read for kite, where 1 <= k <= n is required.
Graph make_family(Family family, int n, int k = 0);

inline Graph complete_graph(int n) { return make_family(Family::complete, n); }
inline Graph star_graph(int n) { return make_family(Family::star, n); }
inline Graph path_graph(int n) { return make_family(Family::path, n); }
inline Graph cycle_graph(int n) { return make_family(Family::cycle, n); }
inline Graph kite_graph(int n, int k) { return make_family(Family::kite, n, k); }

}  // namespace chromabound

#endif  // CHROMABOUND_FAMILIES_HPP
