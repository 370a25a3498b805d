#ifndef CHROMABOUND_SPECTRAL_HPP
#define CHROMABOUND_SPECTRAL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromabound/graph.hpp"

namespace chromabound {

/// Default slack allowed when a proved inequality involves floating values.
inline constexpr double kSpectralTolerance = 1e-6;

/// Adjacency spectrum with its inertia split.
struct SpectralSummary {
  std::vector<double> eigenvalues;  // descending
  int pi = 0;                       // positive
  int nu = 0;                       // negative
  int gamma = 0;                    // zero
  double s_plus = 0.0;              // sum of squares of positive eigenvalues
  double s_minus = 0.0;             // sum of squares of negative eigenvalues
  double zero_tol = 0.0;
  /// Some eigenvalue lies within a factor 10 of zero_tol on either side, so
  /// its classification deserves a second look.
  bool near_zero_review = false;

  /// Largest eigenvalue; 0 for the null graph.
  double spectral_radius() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
};

/// Eigenvalues of a dense symmetric matrix (row-major, n x n) by cyclic
/// Jacobi rotations, sorted descending.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, int n);

/// Spectrum of the adjacency matrix. Eigenvalues with |x| <= 1e-7 * n count
/// as zero.
SpectralSummary eigenvalues(const Graph& g);

enum class BoundKind { theorem, cross_check, conjecture };

std::string_view to_string(BoundKind k);

/// One evaluated inequality lhs <= rhs on one graph.
struct BoundReport {
  std::string graph_id;  // graph6
  std::string bound;     // stable identifier, e.g. "thm31.psi_le_2m_sqrt_splus"
  std::string lhs_name;
  std::string rhs_name;
  BoundKind kind = BoundKind::theorem;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool equality = false;
  std::optional<std::string> skipped;  // reason when not evaluated

  bool evaluated() const { return !skipped.has_value(); }
  bool violated(double tol) const { return evaluated() && slack < -tol; }
};

/// Invariants computed elsewhere and fed into the spectral inequalities.
/// Missing optional values skip the bounds that need them.
struct BoundInputs {
  SpectralSummary spectrum;
  int coloring_number = 0;
  double randic = 0.0;
  std::optional<int> chromatic;
  std::optional<int> achromatic;
};

/// Evaluates every spectral inequality on g. Division-based bounds are
/// skipped when m = 0, the Hong bounds when g has an isolated vertex and the
/// s+ <= 2m - n + 1 probe when g is disconnected.
std::vector<BoundReport> evaluate_spectral_bounds(const Graph& g, const BoundInputs& inputs,
                                                  double tol = kSpectralTolerance);

/// Identifiers emitted by evaluate_spectral_bounds, in emission order.
const std::vector<std::string>& spectral_bound_ids();

}  // namespace chromabound

#endif  // CHROMABOUND_SPECTRAL_HPP
