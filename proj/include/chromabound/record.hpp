#ifndef CHROMABOUND_RECORD_HPP
#define CHROMABOUND_RECORD_HPP

#include <optional>
#include <string>
#include <vector>

#include "chromabound/coloring.hpp"
#include "chromabound/graph.hpp"
#include "chromabound/rational.hpp"
#include "chromabound/spectral.hpp"

#include <json.hpp>

namespace chromabound {

/// Which named family a graph is isomorphic to, decided by canonical form.
/// K_n takes precedence over the star (K_2), and both over a proper kite
/// (3 <= k <= n-1).
struct FamilyMatch {
  enum class Kind { none, complete, star, kite };
  Kind kind = Kind::none;
  int k = 0;  // clique size; n for complete, 1 for star

  /// Any graph of the form K_k with a star glued on, K_n and K_{1,n-1} included.
  bool is_kite() const { return kind != Kind::none; }
  std::string label() const;
};

/// Classifies g against K_n, K_{1,n-1} and the kites. Returns nullopt above
/// the canonical-form limit.
std::optional<FamilyMatch> match_family(const Graph& g);

/// Which expensive searches to run. Each is also skipped above its limit.
struct RecordOptions {
  bool chromatic = true;
  bool grundy = true;
  bool achromatic = true;
  double tol = kSpectralTolerance;
};

/// Every invariant of one graph.
struct GraphRecord {
  std::string graph6;
  Graph graph;
  int n = 0;
  int m = 0;
  int min_degree = 0;
  int max_degree = 0;
  int coloring_number = 0;
  std::optional<ColoringResult> chromatic;
  std::optional<ColoringResult> grundy;
  std::optional<ColoringResult> achromatic;
  double randic = 0.0;
  Rational harmonic;
  Rational r_prime;
  SpectralSummary spectrum;
  std::optional<FamilyMatch> family;
  std::vector<std::string> equality_flags;

  std::optional<int> chi() const;
  std::optional<int> gamma_number() const;
  std::optional<int> psi() const;

  BoundInputs bound_inputs() const;
};

/// Spectral tolerance, overridable through CHROMABOUND_TOL. Unparseable or
/// non-positive values are ignored.
double spectral_tolerance_from_env();

GraphRecord compute_record(const Graph& g, const RecordOptions& options = {});

/// Computes records on `jobs` threads; output order matches input order.
std::vector<GraphRecord> compute_records(const std::vector<Graph>& graphs,
                                         const RecordOptions& options, int jobs);

/// JSON object with a fixed field order. Rationals appear as "p/q" strings
/// with a companion *_float field.
nlohmann::ordered_json to_json(const GraphRecord& r);

std::string csv_header();
std::string to_csv(const GraphRecord& r);

}  // namespace chromabound

#endif  // CHROMABOUND_RECORD_HPP
