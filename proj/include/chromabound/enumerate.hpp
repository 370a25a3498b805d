#ifndef CHROMABOUND_ENUMERATE_HPP
#define CHROMABOUND_ENUMERATE_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "chromabound/graph.hpp"

namespace chromabound {

/// Largest order supported by exhaustive enumeration.
inline constexpr int kEnumerationLimit = 7;

enum class GraphFilter { all, connected, no_isolated };

std::string_view to_string(GraphFilter f);
std::optional<GraphFilter> filter_from_string(std::string_view name);
bool passes(const Graph& g, GraphFilter f);

/// One representative per isomorphism class of graphs on n vertices that
/// pass `filter`, for 1 <= n <= kEnumerationLimit.
///
/// Representatives are canonically labelled and returned in increasing
/// canonical-form order, so the output is the same on every run. Results are
/// memoised per process; the returned reference stays valid.
const std::vector<Graph>& enumerate_graphs(int n, GraphFilter filter = GraphFilter::all);

/// All classes for 1 <= n <= n_max in order of n, then canonical order.
std::vector<Graph> enumerate_up_to(int n_max, GraphFilter filter = GraphFilter::all);

}  // namespace chromabound

#endif  // CHROMABOUND_ENUMERATE_HPP
