// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
//
// Usage: chromabound_acceptance <path to chromabound executable>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chromabound/canonical.hpp"
#include "chromabound/coloring.hpp"
#include "chromabound/enumerate.hpp"
#include "chromabound/families.hpp"
#include "chromabound/graph6.hpp"
#include "chromabound/indices.hpp"
#include "chromabound/record.hpp"
#include "chromabound/suites.hpp"
#include "oracles.hpp"

using namespace chromabound;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (notes.size() < 8) notes.push_back(what);
    }
  }
};

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string str(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

// Shared by criteria 2-6: every graph up to order 7 with all invariants.
const std::vector<GraphRecord>& records() {
  static const std::vector<GraphRecord> all = compute_records(enumerate_up_to(7), {}, 4);
  return all;
}

std::set<CanonicalForm> kites_up_to(int n_max) {
  std::set<CanonicalForm> out;
  for (int n = 2; n <= n_max; ++n)
    for (int k = 1; k <= n; ++k) out.insert(canonical_form(kite_graph(n, k)));
  return out;
}

std::set<CanonicalForm> completes_up_to(int n_max) {
  std::set<CanonicalForm> out;
  for (int n = 2; n <= n_max; ++n) out.insert(canonical_form(complete_graph(n)));
  return out;
}

bool suite_clean(Outcome& o, const SuiteResult& s) {
  o.require(s.passed(), s.suite + ": " + std::to_string(s.violations.size()) + " violations");
  return s.passed();
}

VerifyOptions verify7() {
  VerifyOptions v;
  v.n_max = 7;
  return v;
}

// 1. example-p4 prints the golden values
Outcome p4_table() {
  Outcome o;
  const auto t0 = Clock::now();
  const Run r = run_cli("example-p4");
  const double elapsed = seconds_since(t0);
  o.require(r.status == 0, "example-p4 exit status " + std::to_string(r.status));
  o.require(elapsed < 1.0, "took " + str(elapsed) + " s");

  const std::vector<std::pair<std::string, std::string>> golden{
      {"chi", "2"},   {"col", "2"},      {"Grundy", "3"}, {"psi", "3"},     {"Delta+1", "3"},
      {"2R'", "3"},   {"2H", "3.67"},    {"2R", "3.83"},  {"mu1", "1.618"}, {"mu2", "0.618"},
      {"2m/mu1", "3.71"}, {"2m/sqrt(s+)", "3.46"}};
  std::map<std::string, std::string> shown;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string name, value;
    if (cells >> name >> value) shown[name] = value;
  }
  for (const auto& [name, value] : golden) {
    auto it = shown.find(name);
    o.require(it != shown.end() && it->second == value,
              name + ": expected " + value + ", got " + (it == shown.end() ? "nothing" : it->second));
  }
  return o;
}

// 2. col <= 2R' exactly; equality set is the kite family
Outcome col_vs_rprime() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto& recs = records();
  suite_clean(o, run_suite_on("thm14", recs, verify7()));

  const auto kites = kites_up_to(7);
  std::set<CanonicalForm> equal;
  int checked = 0;
  for (const auto& r : recs) {
    if (r.graph.has_isolated_vertex() || r.n == 0) continue;
    ++checked;
    const Rational two_rp = Rational(2) * r.r_prime;
    const Rational col(r.coloring_number);
    o.require(col <= two_rp, r.graph6 + ": col > 2R'");
    if (col == two_rp) equal.insert(canonical_form(r.graph));
  }
  o.require(checked == 1043, "corpus has " + std::to_string(checked) + " graphs");
  o.require(equal == kites, "equality set differs from the kites (" + std::to_string(equal.size()) + " vs " +
                                std::to_string(kites.size()) + ")");
  o.require(seconds_since(t0) < 120.0, "too slow");
  return o;
}

// 3. chi <= 2R' (kites) and col <= 2H (complete graphs)
Outcome corollaries() {
  Outcome o;
  const auto& recs = records();
  suite_clean(o, run_suite_on("cor15", recs, verify7()));
  suite_clean(o, run_suite_on("cor17", recs, verify7()));

  const auto kites = kites_up_to(7);
  const auto completes = completes_up_to(7);
  std::set<CanonicalForm> chi_equal, h_equal;
  for (const auto& r : recs) {
    if (r.graph.has_isolated_vertex() || r.n == 0) continue;
    const Rational chi(*r.chi());
    const Rational two_rp = Rational(2) * r.r_prime;
    const Rational two_h = Rational(2) * r.harmonic;
    const Rational col(r.coloring_number);
    o.require(chi <= two_rp, r.graph6 + ": chi > 2R'");
    o.require(col <= two_h, r.graph6 + ": col > 2H");
    if (chi == two_rp) chi_equal.insert(canonical_form(r.graph));
    if (col == two_h) h_equal.insert(canonical_form(r.graph));
  }
  o.require(chi_equal == kites, "chi = 2R' set differs from the kites");
  o.require(h_equal == completes, "col = 2H set differs from the complete graphs");
  return o;
}

// 4. minimum-degree deletion
Outcome deletion() {
  Outcome o;
  suite_clean(o, run_suite_on("thm21", records(), verify7()));
  int pairs = 0;
  for (const auto& r : records()) {
    const Graph& g = r.graph;
    if (g.order() < 2) continue;
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) != g.min_degree()) continue;
      ++pairs;
      const Rational delta = r_prime(g) - r_prime(g.delete_vertex(v));
      o.require(delta >= Rational(0), r.graph6 + ": negative delta");
      o.require((delta == Rational(0)) == equality_condition(g, v), r.graph6 + ": condition mismatch at v=" +
                                                                         std::to_string(v));
    }
  }
  o.require(pairs > 0, "no pairs");
  return o;
}

// 5. trees
Outcome trees() {
  Outcome o;
  int count = 0;
  for (int n = 2; n <= 7; ++n) {
    const CanonicalForm star = canonical_form(star_graph(n));
    for (const Graph& g : enumerate_graphs(n, GraphFilter::connected)) {
      if (!g.is_tree()) continue;
      ++count;
      const Rational rp = r_prime(g);
      o.require(rp >= Rational(1), to_graph6(g) + ": R' < 1");
      o.require((rp == Rational(1)) == (canonical_form(g) == star), to_graph6(g) + ": star mismatch");
    }
  }
  o.require(count == 24, std::to_string(count) + " trees");
  return o;
}

// 6. spectral bounds with slack >= -1e-6
Outcome spectral() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto& recs = records();
  for (const char* s : {"thm31", "lem32", "thm33", "sec33"}) {
    const SuiteResult res = run_suite_on(s, recs, verify7());
    suite_clean(o, res);
    for (const auto& b : res.bounds) {
      if (b.kind == BoundKind::conjecture) continue;
      o.require(b.checked > 0, b.bound + " checked nothing");
      if (b.min_slack) o.require(*b.min_slack >= -1e-6, b.bound + " slack " + str(*b.min_slack));
    }
  }
  // recompute directly from the records
  int evaluated = 0;
  for (const auto& r : recs) {
    if (r.m == 0) continue;
    for (const auto& b : evaluate_spectral_bounds(r.graph, r.bound_inputs(), 1e-6)) {
      if (!b.evaluated() || b.kind == BoundKind::conjecture) continue;
      ++evaluated;
      o.require(b.slack >= -1e-6, r.graph6 + " " + b.bound + " slack " + str(b.slack));
    }
  }
  o.require(evaluated > 10000, "only " + std::to_string(evaluated) + " bound evaluations");
  o.require(seconds_since(t0) < 300.0, "too slow");
  return o;
}

bool lists_isomorph(const std::vector<std::string>& ids, const Graph& g) {
  for (const auto& id : ids)
    if (isomorphic(parse_graph6(id), g)) return true;
  return false;
}

// 7. conjecture hunts terminate and report slack correctly
Outcome hunts() {
  Outcome o;
  HuntOptions h;
  h.n_max = 7;
  h.jobs = 4;

  // hand values: psi(P4) = Grundy(P4) = 3 = 2R'(P4); s+(K_n) = (n-1)^2 = 2m - n + 1
  const Graph p4 = path_graph(4);
  o.require(Rational(2) * r_prime(p4) == Rational(3), "2R'(P4) != 3");
  for (const char* c : {"c41", "c42"}) {
    const HuntResult r = hunt(c, h);
    o.require(!r.found_counterexample(), std::string(c) + " counterexample " +
                                             (r.counterexamples.empty() ? "" : r.counterexamples[0].graph6));
    o.require(r.graphs_checked == 1043, std::string(c) + " checked " + std::to_string(r.graphs_checked));
    o.require(r.min_slack_exact == Rational(0), std::string(c) + " min slack is not 0");
    o.require(lists_isomorph(r.tight, p4), std::string(c) + ": P4 not tight");
  }

  const HuntResult sp = hunt("splus", h);
  o.require(!sp.found_counterexample(), "splus counterexample");
  o.require(sp.graphs_checked == 996, "splus checked " + std::to_string(sp.graphs_checked));
  o.require(sp.min_slack && std::abs(*sp.min_slack) <= 1e-6, "splus min slack not 0");
  for (int n = 1; n <= 7; ++n) {
    const Graph kn = complete_graph(n);
    const double hand = 2.0 * kn.size() - n + 1.0 - (n - 1.0) * (n - 1.0);
    o.require(hand == 0.0, "hand slack of K" + std::to_string(n));
    o.require(lists_isomorph(sp.tight, kn), "K" + std::to_string(n) + " not tight");
  }
  return o;
}

// 8. exact colouring numbers against naive oracles
Outcome oracles() {
  Outcome o;
  int count = 0;
  for (const Graph& g : enumerate_up_to(6)) {
    ++count;
    const std::string id = to_graph6(g);
    o.require(grundy_number(g).number() == oracle::grundy(g), id + ": Grundy");
    o.require(achromatic_number(g).number() == oracle::achromatic(g), id + ": achromatic");
    o.require(chromatic_number(g).number() == oracle::chromatic(g), id + ": chromatic");
  }
  o.require(count == 208, std::to_string(count) + " graphs");
  return o;
}

// 9. enumeration counts, graph6 round trip, reproducible output
Outcome infrastructure() {
  Outcome o;
  const int expected[] = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) {
    const auto got = enumerate_graphs(n).size();
    o.require(got == static_cast<std::size_t>(expected[n - 1]),
              "n=" + std::to_string(n) + ": " + std::to_string(got) + " classes");
  }
  o.require(oracle::count_classes(5, false) == 34, "brute force disagrees at n=5");
  for (const Graph& g : enumerate_up_to(7)) {
    const std::string text = to_graph6(g);
    o.require(parse_graph6(text) == g && to_graph6(parse_graph6(text)) == text, text + ": round trip");
  }
  const Run a = run_cli("verify all --n-max 6 --jobs 4");
  const Run b = run_cli("verify all --n-max 6 --jobs 4");
  o.require(a.status == 0 && b.status == 0, "verify exit status " + std::to_string(a.status));
  o.require(!a.out.empty(), "verify printed nothing");
  o.require(a.out == b.out, "verify output differs between runs");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " <chromabound executable>\n";
    return 2;
  }
  g_cli = argv[1];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 P4 golden table", p4_table},
      {"2 col <= 2R', equality on kites", col_vs_rprime},
      {"3 chi <= 2R' on kites, col <= 2H on complete graphs", corollaries},
      {"4 minimum-degree deletion", deletion},
      {"5 trees: R' >= 1, equality on stars", trees},
      {"6 spectral bounds", spectral},
      {"7 conjecture hunts", hunts},
      {"8 colouring oracles", oracles},
      {"9 enumeration, graph6, reproducibility", infrastructure},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    std::printf("%s  %s  (%.2f s)\n", o.ok ? "PASS" : "FAIL", name.c_str(), seconds_since(t0));
    for (const auto& n : o.notes) std::printf("      %s\n", n.c_str());
    failed += !o.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
