#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "chromabound/coloring.hpp"
#include "chromabound/enumerate.hpp"
#include "chromabound/families.hpp"
#include "chromabound/indices.hpp"
#include "chromabound/spectral.hpp"
#include "oracles.hpp"

using namespace chromabound;

namespace {

const BoundReport& find(const std::vector<BoundReport>& reports, const std::string& id) {
  for (const auto& r : reports)
    if (r.bound == id) return r;
  throw std::runtime_error("missing " + id);
}

BoundInputs inputs_for(const Graph& g) {
  BoundInputs in;
  in.spectrum = eigenvalues(g);
  in.coloring_number = coloring_number(g);
  in.randic = randic(g);
  in.chromatic = chromatic_number(g).number();
  in.achromatic = achromatic_number(g).number();
  return in;
}

}  // namespace

TEST_CASE("Jacobi on small dense matrices") {
  const auto ev = symmetric_eigenvalues({2, 1, 1, 2}, 2);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == doctest::Approx(3.0));
  CHECK(ev[1] == doctest::Approx(1.0));
  CHECK(symmetric_eigenvalues({}, 0).empty());
  CHECK_THROWS(symmetric_eigenvalues({1, 2, 3}, 2));
}

TEST_CASE("P4 spectrum") {
  const SpectralSummary s = eigenvalues(path_graph(4));
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  REQUIRE(s.eigenvalues.size() == 4);
  CHECK(s.eigenvalues[0] == doctest::Approx(phi).epsilon(1e-12));
  CHECK(s.eigenvalues[1] == doctest::Approx(phi - 1.0).epsilon(1e-12));
  CHECK(s.eigenvalues[2] == doctest::Approx(1.0 - phi).epsilon(1e-12));
  CHECK(s.eigenvalues[3] == doctest::Approx(-phi).epsilon(1e-12));
  CHECK(s.pi == 2);
  CHECK(s.nu == 2);
  CHECK(s.gamma == 0);
  CHECK(s.s_plus == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(6.0 / s.spectral_radius() == doctest::Approx(3.71).epsilon(0.002));
  CHECK(6.0 / std::sqrt(s.s_plus) == doctest::Approx(3.46).epsilon(0.002));
}

TEST_CASE("complete graph spectrum") {
  for (int n = 2; n <= 10; ++n) {
    const SpectralSummary s = eigenvalues(complete_graph(n));
    CHECK(s.eigenvalues[0] == doctest::Approx(n - 1.0).epsilon(1e-12));
    for (int i = 1; i < n; ++i) CHECK(s.eigenvalues[i] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(s.pi == 1);
    CHECK(s.nu == n - 1);
    CHECK(s.s_plus == doctest::Approx((n - 1.0) * (n - 1.0)));
    CHECK(s.s_minus == doctest::Approx(n - 1.0));
  }
}

TEST_CASE("zero eigenvalues and inertia") {
  const SpectralSummary s = eigenvalues(star_graph(5));  // +-2, 0, 0, 0
  CHECK(s.gamma == 3);
  CHECK(s.pi == 1);
  CHECK(s.nu == 1);
  CHECK_FALSE(s.near_zero_review);
  const SpectralSummary e = eigenvalues(Graph(4));
  CHECK(e.gamma == 4);
  CHECK(e.s_plus == 0.0);
}

TEST_CASE("eigenvalues match the characteristic polynomial on 50 random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 7;
    const Graph g = oracle::labelled(n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
    const SpectralSummary s = eigenvalues(g);
    const auto exact = oracle::char_poly(g);
    const auto rebuilt = oracle::expand_roots(s.eigenvalues);
    REQUIRE(rebuilt.size() == exact.size());
    for (std::size_t i = 0; i < exact.size(); ++i) {
      CHECK(rebuilt[i] == doctest::Approx(static_cast<double>(exact[i])).epsilon(1e-9).scale(1.0));
    }
    // Each simple root sits between a sign change of the integer polynomial.
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
      const double x = s.eigenvalues[i];
      const bool simple = (i == 0 || s.eigenvalues[i - 1] - x > 1e-4) &&
                          (i + 1 == s.eigenvalues.size() || x - s.eigenvalues[i + 1] > 1e-4);
      if (!simple) continue;
      const double lo = oracle::eval_poly(exact, x - 1e-6);
      const double hi = oracle::eval_poly(exact, x + 1e-6);
      CHECK(lo * hi <= 0.0);
    }
    // trace identities: sum = 0, sum of squares = 2m
    double sum = 0.0;
    for (double x : s.eigenvalues) sum += x;
    CHECK(sum == doctest::Approx(0.0).scale(1.0));
    CHECK(s.s_plus + s.s_minus == doctest::Approx(2.0 * g.size()));
  }
}

TEST_CASE("bound identifiers and order") {
  const auto reports = evaluate_spectral_bounds(path_graph(4), inputs_for(path_graph(4)));
  const auto& ids = spectral_bound_ids();
  REQUIRE(reports.size() == ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) CHECK(reports[i].bound == ids[i]);
}

TEST_CASE("P4 bound values") {
  const Graph p4 = path_graph(4);
  const auto reports = evaluate_spectral_bounds(p4, inputs_for(p4));
  const auto& psi = find(reports, "thm31.psi_le_2m_sqrt_splus");
  CHECK(psi.lhs == 3.0);
  CHECK(psi.rhs == doctest::Approx(6.0 / std::sqrt(3.0)));
  CHECK_FALSE(psi.violated(kSpectralTolerance));
  for (const auto& r : reports) CHECK_FALSE(r.violated(kSpectralTolerance));
}

TEST_CASE("K3 attains the Ando-Lin bound") {
  const Graph k3 = complete_graph(3);
  const auto reports = evaluate_spectral_bounds(k3, inputs_for(k3));
  const auto& al = find(reports, "xcheck.ando_lin");
  CHECK(al.kind == BoundKind::cross_check);
  CHECK(al.lhs == doctest::Approx(3.0));
  CHECK(al.rhs == 3.0);
  CHECK(al.equality);
}

TEST_CASE("edgeless and disconnected graphs skip what they must") {
  const auto empty = evaluate_spectral_bounds(Graph(3), inputs_for(Graph(3)));
  for (const auto& r : empty) {
    if (r.bound.starts_with("thm31") || r.bound.starts_with("thm33")) CHECK_FALSE(r.evaluated());
  }
  const Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
  const auto reports = evaluate_spectral_bounds(two_k2, inputs_for(two_k2));
  CHECK_FALSE(find(reports, "conj.splus_le_2m_n_1").evaluated());
  CHECK(find(reports, "sec33.mu_le_hong").evaluated());

  const Graph with_isolated = Graph::from_edges(3, {{0, 1}});
  const auto iso = evaluate_spectral_bounds(with_isolated, inputs_for(with_isolated));
  CHECK_FALSE(find(iso, "sec33.mu_le_hong").evaluated());
}

TEST_CASE("no spectral bound is violated up to order 6") {
  for (const Graph& g : enumerate_up_to(6)) {
    if (g.size() == 0) continue;
    for (const auto& r : evaluate_spectral_bounds(g, inputs_for(g))) {
      if (r.kind == BoundKind::conjecture) continue;
      CHECK_MESSAGE(!r.violated(kSpectralTolerance), r.bound << " " << r.slack);
    }
  }
}
