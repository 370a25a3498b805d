#include "chromabound/families.hpp"

#include <vector>

namespace chromabound {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::kite: return "kite";
  }
  return "unknown";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (Family f : {Family::complete, Family::star, Family::path, Family::cycle, Family::kite}) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

Graph make_family(Family family, int n, int k) {
  if (n < 1 || n > kMaxVertices) {
    throw GraphError(std::string(to_string(family)) + ": n=" + std::to_string(n) +
                     " outside 1.." + std::to_string(kMaxVertices));
  }
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case Family::complete:
      for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
      break;
    case Family::star:
      for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case Family::path:
      for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      break;
    case Family::cycle:
      if (n < 3) throw GraphError("cycle: n=" + std::to_string(n) + " below 3");
      for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      edges.emplace_back(0, n - 1);
      break;
    case Family::kite:
      if (k < 1 || k > n) {
        throw GraphError("kite: k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
      }
      for (int v = 1; v < k; ++v)
        for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
      for (int v = k; v < n; ++v) edges.emplace_back(0, v);
      break;
  }
  return Graph::from_edges(n, edges);
}

}  // namespace chromabound
