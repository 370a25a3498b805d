#include "chromabound/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "chromabound/graph6.hpp"

namespace chromabound {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) sum += 2.0 * a[p * n + q] * a[p * n + q];
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
  if (n < 0 || a.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("symmetric_eigenvalues: matrix is not n x n");
  }
  const double stop = 1e-12 * std::max(n, 1);
  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a, n) >= stop; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        // Rotation angle that zeroes a[p][q] (Golub & Van Loan, sym.schur2).
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
      }
    }
  }
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[i] = a[i * n + i];
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

SpectralSummary eigenvalues(const Graph& g) {
  const int n = g.order();
  std::vector<double> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (auto [u, v] : g.edge_list()) {
    a[u * n + v] = 1.0;
    a[v * n + u] = 1.0;
  }
  SpectralSummary out;
  out.eigenvalues = symmetric_eigenvalues(std::move(a), n);
  out.zero_tol = 1e-7 * n;
  for (double x : out.eigenvalues) {
    const double mag = std::abs(x);
    if (mag > out.zero_tol / 10.0 && mag <= out.zero_tol * 10.0) out.near_zero_review = true;
    if (x > out.zero_tol) {
      ++out.pi;
      out.s_plus += x * x;
    } else if (x < -out.zero_tol) {
      ++out.nu;
      out.s_minus += x * x;
    } else {
      ++out.gamma;
    }
  }
  return out;
}

std::string_view to_string(BoundKind k) {
  switch (k) {
    case BoundKind::theorem: return "theorem";
    case BoundKind::cross_check: return "cross_check";
    case BoundKind::conjecture: return "conjecture";
  }
  return "unknown";
}

namespace {

struct BoundSpec {
  const char* id;
  const char* lhs;
  const char* rhs;
  BoundKind kind;
};

// Emission order of evaluate_spectral_bounds.
const BoundSpec kBounds[] = {
    {"thm31.psi_le_2m_sqrt_splus", "psi", "2m/sqrt(s+)", BoundKind::theorem},
    {"thm31.2m_sqrt_splus_le_2m_mu", "2m/sqrt(s+)", "2m/mu", BoundKind::theorem},
    {"thm31.2m_mu_le_2R", "2m/mu", "2R", BoundKind::theorem},
    {"thm33.col_le_2m_sqrt_splus", "col", "2m/sqrt(s+)", BoundKind::theorem},
    {"lem32.col_col_minus_1_le_2m", "col(col-1)", "2m", BoundKind::theorem},
    {"lem32.splus_plus_sqrt_splus_le_2m", "s+ + sqrt(s+)", "2m", BoundKind::theorem},
    {"lem32.col_le_mu_plus_1", "col", "mu+1", BoundKind::theorem},
    {"sec33.sqrt_splus_le_stanley", "sqrt(s+)", "(sqrt(8m+1)-1)/2", BoundKind::theorem},
    {"sec33.mu_le_stanley", "mu", "(sqrt(8m+1)-1)/2", BoundKind::theorem},
    {"sec33.mu_le_hong", "mu", "sqrt(2m-n+1)", BoundKind::theorem},
    {"sec33.hong_le_stanley", "sqrt(2m-n+1)", "(sqrt(8m+1)-1)/2", BoundKind::theorem},
    {"xcheck.ando_lin", "1 + s+/s-", "chi", BoundKind::cross_check},
    {"xcheck.favaron", "m/mu", "R", BoundKind::cross_check},
    {"conj.splus_le_2m_n_1", "s+", "2m-n+1", BoundKind::conjecture},
};

}  // namespace

const std::vector<std::string>& spectral_bound_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& b : kBounds) out.emplace_back(b.id);
    return out;
  }();
  return ids;
}

std::vector<BoundReport> evaluate_spectral_bounds(const Graph& g, const BoundInputs& in, double tol) {
  const std::string id = to_graph6(g);
  const double n = g.order();
  const double m = g.size();
  const double two_m = 2.0 * m;
  const double mu = in.spectrum.spectral_radius();
  const double sp = in.spectrum.s_plus;
  const double sm = in.spectrum.s_minus;
  const double col = in.coloring_number;
  const double stanley = (std::sqrt(8.0 * m + 1.0) - 1.0) / 2.0;
  const bool has_edges = g.size() > 0;
  const bool no_isolated = !g.has_isolated_vertex();

  std::vector<BoundReport> out;
  out.reserve(std::size(kBounds));
  auto emit = [&](const BoundSpec& spec, std::optional<std::string> skip, double lhs, double rhs) {
    BoundReport r;
    r.graph_id = id;
    r.bound = spec.id;
    r.lhs_name = spec.lhs;
    r.rhs_name = spec.rhs;
    r.kind = spec.kind;
    if (skip) {
      r.skipped = std::move(skip);
    } else {
      r.lhs = lhs;
      r.rhs = rhs;
      r.slack = rhs - lhs;
      r.equality = std::abs(r.slack) <= tol;
    }
    out.push_back(std::move(r));
  };
  auto need = [&](bool ok, const char* reason) -> std::optional<std::string> {
    if (ok) return std::nullopt;
    return std::string(reason);
  };
  const char* no_edges = "m = 0";

  const auto* b = kBounds;
  const double over_sqrt_sp = has_edges ? two_m / std::sqrt(sp) : 0.0;
  const double over_mu = has_edges ? two_m / mu : 0.0;
  emit(b[0], has_edges ? need(in.achromatic.has_value(), "achromatic number unavailable") : no_edges,
       in.achromatic.value_or(0), over_sqrt_sp);
  emit(b[1], need(has_edges, no_edges), over_sqrt_sp, over_mu);
  emit(b[2], need(has_edges, no_edges), over_mu, 2.0 * in.randic);
  emit(b[3], need(has_edges, no_edges), col, over_sqrt_sp);
  emit(b[4], need(has_edges, no_edges), col * (col - 1.0), two_m);
  emit(b[5], need(has_edges, no_edges), sp + std::sqrt(sp), two_m);
  emit(b[6], std::nullopt, col, mu + 1.0);
  emit(b[7], std::nullopt, std::sqrt(sp), stanley);
  emit(b[8], std::nullopt, mu, stanley);
  const char* isolated = "isolated vertex present";
  const double hong = no_isolated && n > 0 ? std::sqrt(two_m - n + 1.0) : 0.0;
  emit(b[9], need(no_isolated && n > 0, isolated), mu, hong);
  emit(b[10], need(no_isolated && n > 0, isolated), hong, stanley);
  emit(b[11], has_edges ? need(in.chromatic.has_value(), "chromatic number unavailable") : no_edges,
       has_edges ? 1.0 + sp / sm : 0.0, in.chromatic.value_or(0));
  emit(b[12], need(has_edges, no_edges), has_edges ? m / mu : 0.0, in.randic);
  emit(b[13], need(g.order() >= 1 && g.is_connected(), "disconnected"), sp, two_m - n + 1.0);
  return out;
}

}  // namespace chromabound
