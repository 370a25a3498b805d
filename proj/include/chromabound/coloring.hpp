#ifndef CHROMABOUND_COLORING_HPP
#define CHROMABOUND_COLORING_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "chromabound/graph.hpp"

namespace chromabound {

inline constexpr int kChromaticLimit = 10;
inline constexpr int kGrundyLimit = 9;
inline constexpr int kAchromaticLimit = 9;

/// Vertex colours in 1..k, indexed by vertex id; k is the largest colour.
struct Coloring {
  std::vector<int> colors;
  int k = 0;

  /// Sets k from the colours. Throws ContractError if some colour in 1..k is
  /// unused or a colour is below 1.
  static Coloring from_colors(std::vector<int> colors);
};

enum class ColoringClass { proper, complete, grundy };

std::string_view to_string(ColoringClass c);

/// An optimal colour count together with a colouring that certifies it.
struct ColoringResult {
  Coloring coloring;
  ColoringClass certified = ColoringClass::proper;

  int number() const { return coloring.k; }
};

/// proper:   no edge joins two vertices of the same colour.
/// complete: proper, and every pair of distinct colours meets on some edge.
/// grundy:   proper, and a vertex of colour c sees every colour below c.
///
/// Throws ContractError unless every vertex of g has a colour >= 1.
bool validate(const Graph& g, const Coloring& c, ColoringClass cls);

/// Smallest-last vertex ordering.
struct DegeneracyOrdering {
  std::vector<int> order;          // v_1 .. v_n
  std::vector<int> back_degrees;   // neighbours of v_i among v_1 .. v_{i-1}
  int degeneracy = 0;
};

/// Builds v_n, v_{n-1}, ... by repeatedly taking a vertex of minimum degree in
/// what remains, lowest id first on ties.
DegeneracyOrdering degeneracy_ordering(const Graph& g);

/// degeneracy + 1; 0 for the null graph.
int coloring_number(const Graph& g);

/// Colours vertices in the given order with the least colour absent from
/// already coloured neighbours.
Coloring first_fit(const Graph& g, std::span<const int> order);

/// Exact chromatic number with an optimal proper colouring.
ColoringResult chromatic_number(const Graph& g, int limit = kChromaticLimit);

/// Exact Grundy number with a Grundy colouring attaining it.
ColoringResult grundy_number(const Graph& g, int limit = kGrundyLimit);

/// Exact achromatic number with a complete colouring attaining it.
ColoringResult achromatic_number(const Graph& g, int limit = kAchromaticLimit);

/// A complete colouring with exactly k colours, if one exists.
std::optional<Coloring> find_complete_coloring(const Graph& g, int k);

}  // namespace chromabound

#endif  // CHROMABOUND_COLORING_HPP
