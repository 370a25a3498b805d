#include "chromabound/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>

#include "chromabound/canonical.hpp"

namespace chromabound {

namespace {

// Every labelled graph on n vertices, i.e. all 2^(n(n-1)/2) edge subsets,
// reduced to one canonical representative per class.
std::vector<Graph> classes_by_brute_force(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  const std::uint64_t count = std::uint64_t{1} << pairs.size();

  std::map<CanonicalForm, Graph> seen;
  // Complements of class representatives are class representatives, so
  // only graphs with at most half of the possible edges are canonicalised.
  const int half = static_cast<int>(pairs.size()) / 2;
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (std::popcount(mask) > half) continue;
    std::fill(adj.begin(), adj.end(), 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) {
        adj[pairs[k].first] |= bit(pairs[k].second);
        adj[pairs[k].second] |= bit(pairs[k].first);
      }
    }
    Graph g = Graph::from_adjacency(adj);
    const CanonicalForm key = canonical_form(g);
    if (!seen.contains(key)) seen.emplace(key, canonical_graph(g));
  }
  std::vector<Graph> complements;
  for (const auto& [key, g] : seen) {
    if (2 * g.size() < static_cast<int>(pairs.size())) complements.push_back(complement(g));
  }
  for (Graph& g : complements) {
    const CanonicalForm key = canonical_form(g);
    if (!seen.contains(key)) seen.emplace(key, canonical_graph(g));
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [key, g] : seen) out.push_back(std::move(g));
  return out;
}

std::mutex cache_mutex;
std::array<std::vector<Graph>, kEnumerationLimit + 1> all_cache;
std::array<bool, kEnumerationLimit + 1> all_ready{};
std::map<std::pair<int, GraphFilter>, std::vector<Graph>> filtered_cache;

}  // namespace

std::string_view to_string(GraphFilter f) {
  switch (f) {
    case GraphFilter::all: return "all";
    case GraphFilter::connected: return "connected";
    case GraphFilter::no_isolated: return "no_isolated";
  }
  return "unknown";
}

std::optional<GraphFilter> filter_from_string(std::string_view name) {
  for (GraphFilter f : {GraphFilter::all, GraphFilter::connected, GraphFilter::no_isolated}) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

bool passes(const Graph& g, GraphFilter f) {
  switch (f) {
    case GraphFilter::all: return true;
    case GraphFilter::connected: return g.is_connected();
    case GraphFilter::no_isolated: return !g.has_isolated_vertex();
  }
  return false;
}

const std::vector<Graph>& enumerate_graphs(int n, GraphFilter filter) {
  if (n < 1 || n > kEnumerationLimit) {
    throw LimitError("enumeration: n=" + std::to_string(n) + " outside 1.." +
                     std::to_string(kEnumerationLimit));
  }
  std::lock_guard lock(cache_mutex);
  if (!all_ready[n]) {
    all_cache[n] = classes_by_brute_force(n);
    all_ready[n] = true;
  }
  if (filter == GraphFilter::all) return all_cache[n];
  auto it = filtered_cache.find({n, filter});
  if (it == filtered_cache.end()) {
    std::vector<Graph> kept;
    std::copy_if(all_cache[n].begin(), all_cache[n].end(), std::back_inserter(kept),
                 [filter](const Graph& g) { return passes(g, filter); });
    it = filtered_cache.emplace(std::pair{n, filter}, std::move(kept)).first;
  }
  return it->second;
}

std::vector<Graph> enumerate_up_to(int n_max, GraphFilter filter) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto& part = enumerate_graphs(n, filter);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace chromabound
