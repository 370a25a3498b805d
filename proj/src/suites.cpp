#include "chromabound/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "chromabound/families.hpp"
#include "chromabound/graph6.hpp"
#include "chromabound/indices.hpp"

namespace chromabound {

namespace {

std::string fmt(double x) { return nlohmann::json(x).dump(); }

// Collects per-bound statistics and violations for one suite run.
class SuiteBuilder {
 public:
  explicit SuiteBuilder(SuiteResult& result) : result_(result) {}

  void declare(const std::string& id, BoundKind kind, bool exact) {
    BoundStat s;
    s.bound = id;
    s.kind = kind;
    s.exact = exact;
    result_.bounds.push_back(std::move(s));
  }

  /// lhs <= rhs in exact arithmetic.
  void exact(const std::string& id, const std::string& graph6, const Rational& lhs,
             const Rational& rhs) {
    BoundStat& s = stat(id);
    ++s.checked;
    const Rational slack = rhs - lhs;
    if (!s.min_slack_exact || slack < *s.min_slack_exact) {
      s.min_slack_exact = slack;
      s.min_slack = slack.to_double();
      s.argmin = graph6;
    }
    if (slack == Rational(0)) add_equality(s, graph6);
    if (slack < Rational(0)) fail(s, {graph6, id, lhs.str(), rhs.str(), "exact slack " + slack.str()});
  }

  /// lhs <= rhs + tol.
  void real(const std::string& id, const std::string& graph6, double lhs, double rhs, double tol) {
    BoundStat& s = stat(id);
    ++s.checked;
    const double slack = rhs - lhs;
    if (!s.min_slack || slack < *s.min_slack) {
      s.min_slack = slack;
      s.argmin = graph6;
    }
    if (std::abs(slack) <= tol) add_equality(s, graph6);
    if (slack < -tol) fail(s, {graph6, id, fmt(lhs), fmt(rhs), "slack " + fmt(slack)});
  }

  void report(const BoundReport& r, double tol) {
    if (!r.evaluated()) return;
    real(r.bound, r.graph_id, r.lhs, r.rhs, tol);
  }

  /// A statement that must hold on this graph, e.g. "equality iff kite".
  void holds(const std::string& id, const std::string& graph6, bool ok, const std::string& lhs,
             const std::string& rhs, const std::string& note) {
    BoundStat& s = stat(id);
    ++s.checked;
    if (!ok) fail(s, {graph6, id, lhs, rhs, note});
  }

  /// Records that graph6 belongs to the equality side of a characterisation.
  void mark(const std::string& id, const std::string& graph6) { add_equality(stat(id), graph6); }

 private:
  BoundStat& stat(const std::string& id) {
    for (auto& s : result_.bounds)
      if (s.bound == id) return s;
    throw std::logic_error("undeclared bound " + id);
  }

  static void add_equality(BoundStat& s, const std::string& graph6) {
    if (s.equality_cases.empty() || s.equality_cases.back() != graph6) s.equality_cases.push_back(graph6);
  }

  void fail(BoundStat& s, Violation v) {
    ++s.violations;
    // Conjectures are probed, not asserted.
    if (s.kind != BoundKind::conjecture) result_.violations.push_back(std::move(v));
  }

  SuiteResult& result_;
};

struct BoundDecl {
  const char* id;
  BoundKind kind;
  bool exact;
};

enum class Corpus { all, no_isolated, with_edges };

struct SuiteDef {
  const char* name;
  Corpus corpus;
  RecordOptions needs;
  std::vector<BoundDecl> bounds;
  std::function<void(SuiteBuilder&, const GraphRecord&, double tol)> run;
};

std::string corpus_label(Corpus c, bool connected_only) {
  std::string s;
  switch (c) {
    case Corpus::all: s = "all graphs"; break;
    case Corpus::no_isolated: s = "graphs without isolated vertices"; break;
    case Corpus::with_edges: s = "graphs with m >= 1"; break;
  }
  if (connected_only) s += ", connected only";
  return s;
}

bool admits(Corpus c, bool connected_only, const Graph& g) {
  if (connected_only && !g.is_connected()) return false;
  switch (c) {
    case Corpus::all: return true;
    case Corpus::no_isolated: return !g.has_isolated_vertex();
    case Corpus::with_edges: return g.size() > 0;
  }
  return false;
}

constexpr auto T = BoundKind::theorem;
constexpr auto X = BoundKind::cross_check;
constexpr auto C = BoundKind::conjecture;

RecordOptions needs(bool chromatic, bool grundy, bool achromatic) {
  RecordOptions o;
  o.chromatic = chromatic;
  o.grundy = grundy;
  o.achromatic = achromatic;
  return o;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string family_text(const GraphRecord& r) {
  return r.family ? r.family->label() : std::string("unknown");
}

void run_chain1(SuiteBuilder& b, const GraphRecord& r, double) {
  b.exact("chain1.rprime_le_h", r.graph6, r.r_prime, r.harmonic);
  b.real("chain1.h_le_r", r.graph6, r.harmonic.to_double(), r.randic, kRandicTolerance);
  if (r.graph.is_connected()) return;
  Rational rp_sum;
  Rational h_sum;
  double r_sum = 0.0;
  for (const Graph& c : r.graph.components()) {
    rp_sum += r_prime(c);
    h_sum += harmonic(c);
    r_sum += randic(c);
  }
  b.holds("additivity.rprime", r.graph6, rp_sum == r.r_prime, r.r_prime.str(), rp_sum.str(),
          "R' differs from the sum over components");
  b.holds("additivity.h", r.graph6, h_sum == r.harmonic, r.harmonic.str(), h_sum.str(),
          "H differs from the sum over components");
  b.holds("additivity.r", r.graph6, std::abs(r_sum - r.randic) <= kRandicTolerance, fmt(r.randic),
          fmt(r_sum), "R differs from the sum over components");
}

void run_thm14(SuiteBuilder& b, const GraphRecord& r, double) {
  const Rational two_rp = Rational(2) * r.r_prime;
  const Rational col(r.coloring_number);
  b.exact("thm14.col_le_2rprime", r.graph6, col, two_rp);
  const bool attains = col == two_rp;
  const bool kite = r.family && r.family->is_kite();
  if (kite) b.mark("thm14.equality_iff_kite", r.graph6);
  b.holds("thm14.equality_iff_kite", r.graph6, r.family.has_value() && attains == kite,
          "col=2R' " + yes_no(attains), "family " + family_text(r),
          "equality set differs from the kite family");

  b.real("thm13.col_le_2r", r.graph6, r.coloring_number, 2.0 * r.randic, kRandicTolerance);
  const bool attains_r = std::abs(2.0 * r.randic - r.coloring_number) <= kRandicTolerance;
  if (r.graph.is_complete()) b.mark("thm13.equality_iff_complete", r.graph6);
  b.holds("thm13.equality_iff_complete", r.graph6, attains_r == r.graph.is_complete(),
          "col=2R " + yes_no(attains_r), "complete " + yes_no(r.graph.is_complete()),
          "equality set differs from the complete graphs");
}

void run_cor15(SuiteBuilder& b, const GraphRecord& r, double) {
  const Rational two_rp = Rational(2) * r.r_prime;
  const Rational two_h = Rational(2) * r.harmonic;
  const Rational chi(*r.chi());
  const bool kite = r.family && r.family->is_kite();

  b.exact("cor15.chi_le_2rprime", r.graph6, chi, two_rp);
  const bool attains = chi == two_rp;
  if (kite) b.mark("cor15.equality_iff_kite", r.graph6);
  b.holds("cor15.equality_iff_kite", r.graph6, r.family.has_value() && attains == kite,
          "chi=2R' " + yes_no(attains), "family " + family_text(r),
          "equality set differs from the kite family");

  // chi <= chi_l <= col; on kites chi = col = 2R' pins chi_l to k as well.
  if (kite) {
    const int k = r.family->k == 1 ? 2 : r.family->k;
    const bool ok = *r.chi() == k && r.coloring_number == k && two_rp == Rational(k);
    b.mark("cor16.kite_chi_col_2rprime_equal_k", r.graph6);
    b.holds("cor16.kite_chi_col_2rprime_equal_k", r.graph6, ok,
            "chi=" + std::to_string(*r.chi()) + " col=" + std::to_string(r.coloring_number) +
                " 2R'=" + two_rp.str(),
            "k=" + std::to_string(k), "kite does not pin chi_l");
  }

  b.real("thm11.chi_le_2r", r.graph6, *r.chi(), 2.0 * r.randic, kRandicTolerance);
  b.exact("thm12.chi_le_2h", r.graph6, chi, two_h);
  const bool attains_h = chi == two_h;
  if (r.graph.is_complete()) b.mark("thm12.equality_iff_complete", r.graph6);
  b.holds("thm12.equality_iff_complete", r.graph6, attains_h == r.graph.is_complete(),
          "chi=2H " + yes_no(attains_h), "complete " + yes_no(r.graph.is_complete()),
          "equality set differs from the complete graphs");
}

void run_cor17(SuiteBuilder& b, const GraphRecord& r, double) {
  const Rational two_h = Rational(2) * r.harmonic;
  const Rational col(r.coloring_number);
  b.exact("cor17.col_le_2h", r.graph6, col, two_h);
  const bool attains = col == two_h;
  if (r.graph.is_complete()) b.mark("cor17.equality_iff_complete", r.graph6);
  b.holds("cor17.equality_iff_complete", r.graph6, attains == r.graph.is_complete(),
          "col=2H " + yes_no(attains), "complete " + yes_no(r.graph.is_complete()),
          "equality set differs from the complete graphs");
}

void run_thm21(SuiteBuilder& b, const GraphRecord& r, double) {
  const Graph& g = r.graph;
  const int delta = g.min_degree();
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != delta) continue;
    const Rational d = deletion_delta(g, v);
    const std::string where = r.graph6 + " v=" + std::to_string(v);
    b.exact("thm21.deletion_delta_nonneg", r.graph6, Rational(0), d);
    const bool cond = equality_condition(g, v);
    if (cond) b.mark("thm21.zero_iff_condition", r.graph6);
    b.holds("thm21.zero_iff_condition", r.graph6, (d == Rational(0)) == cond,
            where + " delta=" + d.str(), "condition " + yes_no(cond),
            "zero deletion delta disagrees with the neighbourhood condition");
    // Without the degree-2 clause the only failures are K2 components.
    if (equality_condition_without_degree_clause(g, v) && d != Rational(0)) {
      const bool in_k2 = g.degree(v) == 1 && g.degree(std::countr_zero(g.neighbors(v))) == 1;
      b.mark("thm21.degree_clause_needed_only_on_k2", r.graph6);
      b.holds("thm21.degree_clause_needed_only_on_k2", r.graph6, in_k2, where + " delta=" + d.str(),
              "K2 component " + yes_no(in_k2), "condition without degree clause fails outside K2");
    }
  }
  if (g.order() >= 2 && g.is_tree()) {
    b.exact("tree.rprime_ge_1", r.graph6, Rational(1), r.r_prime);
    const bool star = r.family && (r.family->kind == FamilyMatch::Kind::star ||
                                   (r.family->kind == FamilyMatch::Kind::complete && r.n == 2));
    if (star) b.mark("tree.equality_iff_star", r.graph6);
    b.holds("tree.equality_iff_star", r.graph6, r.family.has_value() && (r.r_prime == Rational(1)) == star,
            "R'=" + r.r_prime.str(), "family " + family_text(r), "tree equality set is not the stars");
  }
}

const BoundReport& find_report(const std::vector<BoundReport>& reports, std::string_view id) {
  for (const auto& r : reports)
    if (r.bound == id) return r;
  throw std::logic_error("missing spectral report " + std::string(id));
}

void run_reports(SuiteBuilder& b, const GraphRecord& r, double tol,
                 std::initializer_list<std::string_view> ids) {
  const auto reports = evaluate_spectral_bounds(r.graph, r.bound_inputs(), tol);
  for (std::string_view id : ids) b.report(find_report(reports, id), tol);
}

void run_chain36(SuiteBuilder& b, const GraphRecord& r, double) {
  const Rational chi(*r.chi());
  const Rational col(r.coloring_number);
  const Rational gr(*r.gamma_number());
  const Rational psi(*r.psi());
  const Rational delta1(r.max_degree + 1);
  b.exact("chain3.chi_le_col", r.graph6, chi, col);
  b.exact("chain3.col_le_maxdeg_plus_1", r.graph6, col, delta1);
  b.exact("chain6.chi_le_grundy", r.graph6, chi, gr);
  b.exact("chain6.grundy_le_maxdeg_plus_1", r.graph6, gr, delta1);
  b.exact("chain6.grundy_le_psi", r.graph6, gr, psi);
  b.exact("chain6.chi_le_psi", r.graph6, chi, psi);

  const Graph& g = r.graph;
  b.holds("witness.chi_proper", r.graph6,
          r.chromatic->coloring.k == *r.chi() && validate(g, r.chromatic->coloring, ColoringClass::proper),
          "k=" + std::to_string(r.chromatic->coloring.k), "proper", "chromatic witness invalid");
  b.holds("witness.grundy", r.graph6, validate(g, r.grundy->coloring, ColoringClass::grundy),
          "k=" + std::to_string(r.grundy->coloring.k), "grundy", "Grundy witness invalid");
  b.holds("witness.psi_complete", r.graph6, validate(g, r.achromatic->coloring, ColoringClass::complete),
          "k=" + std::to_string(r.achromatic->coloring.k), "complete", "achromatic witness invalid");

  if (!g.is_connected()) {
    int best = 0;
    for (const Graph& c : g.components()) best = std::max(best, coloring_number(c));
    b.holds("additivity.col_max", r.graph6, best == r.coloring_number, std::to_string(r.coloring_number),
            std::to_string(best), "col differs from the maximum over components");
  }
}

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = [] {
    std::vector<SuiteDef> d;
    d.push_back({"chain1", Corpus::all, needs(false, false, false),
                 {{"chain1.rprime_le_h", T, true},
                  {"chain1.h_le_r", T, false},
                  {"additivity.rprime", T, true},
                  {"additivity.h", T, true},
                  {"additivity.r", T, false}},
                 run_chain1});
    d.push_back({"thm14", Corpus::no_isolated, needs(false, false, false),
                 {{"thm14.col_le_2rprime", T, true},
                  {"thm14.equality_iff_kite", T, true},
                  {"thm13.col_le_2r", T, false},
                  {"thm13.equality_iff_complete", T, false}},
                 run_thm14});
    d.push_back({"cor15", Corpus::no_isolated, needs(true, false, false),
                 {{"cor15.chi_le_2rprime", T, true},
                  {"cor15.equality_iff_kite", T, true},
                  {"cor16.kite_chi_col_2rprime_equal_k", T, true},
                  {"thm11.chi_le_2r", X, false},
                  {"thm12.chi_le_2h", X, true},
                  {"thm12.equality_iff_complete", X, true}},
                 run_cor15});
    d.push_back({"cor17", Corpus::no_isolated, needs(false, false, false),
                 {{"cor17.col_le_2h", T, true}, {"cor17.equality_iff_complete", T, true}},
                 run_cor17});
    d.push_back({"thm21", Corpus::all, needs(false, false, false),
                 {{"thm21.deletion_delta_nonneg", T, true},
                  {"thm21.zero_iff_condition", T, true},
                  {"thm21.degree_clause_needed_only_on_k2", X, true},
                  {"tree.rprime_ge_1", T, true},
                  {"tree.equality_iff_star", T, true}},
                 run_thm21});
    d.push_back({"thm31", Corpus::with_edges, needs(true, false, true),
                 {{"thm31.psi_le_2m_sqrt_splus", T, false},
                  {"thm31.2m_sqrt_splus_le_2m_mu", T, false},
                  {"thm31.2m_mu_le_2R", T, false},
                  {"xcheck.ando_lin", X, false},
                  {"xcheck.favaron", X, false}},
                 [](SuiteBuilder& b, const GraphRecord& r, double tol) {
                   run_reports(b, r, tol,
                               {"thm31.psi_le_2m_sqrt_splus", "thm31.2m_sqrt_splus_le_2m_mu",
                                "thm31.2m_mu_le_2R", "xcheck.ando_lin", "xcheck.favaron"});
                 }});
    d.push_back({"lem32", Corpus::with_edges, needs(false, false, false),
                 {{"lem32.col_col_minus_1_le_2m", T, true},
                  {"lem32.splus_plus_sqrt_splus_le_2m", T, false},
                  {"lem32.col_le_mu_plus_1", T, false}},
                 [](SuiteBuilder& b, const GraphRecord& r, double tol) {
                   const Rational col(r.coloring_number);
                   b.exact("lem32.col_col_minus_1_le_2m", r.graph6, col * (col - Rational(1)),
                           Rational(2 * r.m));
                   run_reports(b, r, tol,
                               {"lem32.splus_plus_sqrt_splus_le_2m", "lem32.col_le_mu_plus_1"});
                 }});
    d.push_back({"thm33", Corpus::with_edges, needs(false, false, false),
                 {{"thm33.col_le_2m_sqrt_splus", T, false},
                  {"thm31.2m_sqrt_splus_le_2m_mu", T, false},
                  {"thm31.2m_mu_le_2R", T, false}},
                 [](SuiteBuilder& b, const GraphRecord& r, double tol) {
                   run_reports(b, r, tol,
                               {"thm33.col_le_2m_sqrt_splus", "thm31.2m_sqrt_splus_le_2m_mu",
                                "thm31.2m_mu_le_2R"});
                 }});
    d.push_back({"sec33", Corpus::with_edges, needs(false, false, false),
                 {{"sec33.sqrt_splus_le_stanley", T, false},
                  {"sec33.mu_le_stanley", T, false},
                  {"sec33.mu_le_hong", T, false},
                  {"sec33.hong_le_stanley", T, false},
                  {"conj.splus_le_2m_n_1", C, false}},
                 [](SuiteBuilder& b, const GraphRecord& r, double tol) {
                   run_reports(b, r, tol,
                               {"sec33.sqrt_splus_le_stanley", "sec33.mu_le_stanley", "sec33.mu_le_hong",
                                "sec33.hong_le_stanley", "conj.splus_le_2m_n_1"});
                 }});
    d.push_back({"chain36", Corpus::all, needs(true, true, true),
                 {{"chain3.chi_le_col", T, true},
                  {"chain3.col_le_maxdeg_plus_1", T, true},
                  {"chain6.chi_le_grundy", T, true},
                  {"chain6.grundy_le_maxdeg_plus_1", T, true},
                  {"chain6.grundy_le_psi", T, true},
                  {"chain6.chi_le_psi", T, true},
                  {"witness.chi_proper", T, true},
                  {"witness.grundy", T, true},
                  {"witness.psi_complete", T, true},
                  {"additivity.col_max", T, true}},
                 run_chain36});
    return d;
  }();
  return defs;
}

const SuiteDef& lookup(std::string_view name) {
  for (const auto& d : registry())
    if (name == d.name) return d;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

void check_n_max(int n_max) {
  if (n_max < 1 || n_max > kEnumerationLimit) {
    throw LimitError("n_max " + std::to_string(n_max) + " outside 1.." + std::to_string(kEnumerationLimit));
  }
}

RecordOptions merge(const RecordOptions& a, const RecordOptions& b) {
  RecordOptions o = a;
  o.chromatic = a.chromatic || b.chromatic;
  o.grundy = a.grundy || b.grundy;
  o.achromatic = a.achromatic || b.achromatic;
  return o;
}

}  // namespace

const BoundStat* SuiteResult::find(std::string_view bound) const {
  for (const auto& b : bounds)
    if (b.bound == bound) return &b;
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.emplace_back(d.name);
    return out;
  }();
  return names;
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& suite_manifest() {
  static const auto manifest = [] {
    std::vector<std::pair<std::string, std::vector<std::string>>> out;
    for (const auto& d : registry()) {
      std::vector<std::string> ids;
      for (const auto& b : d.bounds) ids.emplace_back(b.id);
      out.emplace_back(d.name, std::move(ids));
    }
    return out;
  }();
  return manifest;
}

SuiteResult run_suite_on(std::string_view name, const std::vector<GraphRecord>& records,
                         const VerifyOptions& options) {
  const SuiteDef& def = lookup(name);
  SuiteResult result;
  result.suite = def.name;
  result.filter = corpus_label(def.corpus, options.connected_only);
  result.n_max = options.n_max;
  SuiteBuilder builder(result);
  for (const auto& b : def.bounds) builder.declare(b.id, b.kind, b.exact);
  for (const GraphRecord& r : records) {
    if (r.n > options.n_max || !admits(def.corpus, options.connected_only, r.graph)) continue;
    ++result.graphs_checked;
    def.run(builder, r, options.tol);
  }
  return result;
}

SuiteResult run_suite(std::string_view name, const VerifyOptions& options) {
  const SuiteDef& def = lookup(name);
  check_n_max(options.n_max);
  std::vector<Graph> corpus;
  for (const Graph& g : enumerate_up_to(options.n_max)) {
    if (admits(def.corpus, options.connected_only, g)) corpus.push_back(g);
  }
  RecordOptions ro = def.needs;
  ro.tol = options.tol;
  return run_suite_on(name, compute_records(corpus, ro, options.jobs), options);
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& options) {
  check_n_max(options.n_max);
  RecordOptions ro = needs(false, false, false);
  for (const auto& d : registry()) ro = merge(ro, d.needs);
  ro.tol = options.tol;
  std::vector<Graph> corpus;
  for (const Graph& g : enumerate_up_to(options.n_max)) {
    if (!options.connected_only || g.is_connected()) corpus.push_back(g);
  }
  const auto records = compute_records(corpus, ro, options.jobs);
  std::vector<SuiteResult> out;
  for (const auto& d : registry()) out.push_back(run_suite_on(d.name, records, options));
  return out;
}

nlohmann::ordered_json to_json(const SuiteResult& s) {
  nlohmann::ordered_json j;
  j["suite"] = s.suite;
  j["filter"] = s.filter;
  j["n_max"] = s.n_max;
  j["graphs_checked"] = s.graphs_checked;
  j["passed"] = s.passed();
  auto bounds = nlohmann::ordered_json::array();
  for (const auto& b : s.bounds) {
    nlohmann::ordered_json e;
    e["bound"] = b.bound;
    e["kind"] = std::string(to_string(b.kind));
    e["checked"] = b.checked;
    e["violations"] = b.violations;
    if (b.min_slack_exact) e["min_slack"] = b.min_slack_exact->str();
    else if (b.min_slack) e["min_slack"] = *b.min_slack;
    else e["min_slack"] = nullptr;
    e["argmin"] = b.argmin.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(b.argmin);
    e["equality_cases"] = b.equality_cases;
    bounds.push_back(std::move(e));
  }
  j["bounds"] = std::move(bounds);
  auto violations = nlohmann::ordered_json::array();
  for (const auto& v : s.violations) {
    violations.push_back(nlohmann::ordered_json{
        {"graph6", v.graph6}, {"bound", v.bound}, {"lhs", v.lhs}, {"rhs", v.rhs}, {"note", v.note}});
  }
  j["violations"] = std::move(violations);
  return j;
}

// ---------------------------------------------------------------------------
// Conjecture hunts

namespace {

struct HuntDef {
  const char* name;
  const char* statement;
  GraphFilter filter;
  RecordOptions needs;
};

const std::vector<HuntDef>& hunts() {
  static const std::vector<HuntDef> defs = {
      {"c41", "psi(G) <= 2R'(G)", GraphFilter::no_isolated, needs(false, false, true)},
      {"c42", "Grundy(G) <= 2R'(G)", GraphFilter::no_isolated, needs(false, true, false)},
      {"splus", "s+(G) <= 2m - n + 1 (connected G)", GraphFilter::connected, needs(false, false, false)},
  };
  return defs;
}

const HuntDef& hunt_lookup(std::string_view name) {
  for (const auto& h : hunts())
    if (name == h.name) return h;
  throw std::invalid_argument("unknown conjecture '" + std::string(name) + "'");
}

HuntResult run_hunt(const HuntDef& def, const std::vector<Graph>& graphs, const std::string& corpus,
                    const HuntOptions& options) {
  HuntResult result;
  result.conjecture = def.name;
  result.statement = def.statement;
  result.corpus = corpus;
  std::vector<Graph> kept;
  for (const Graph& g : graphs) {
    if (hunt_applies(def.name, g)) kept.push_back(g);
    else ++result.graphs_skipped;
  }
  RecordOptions ro = def.needs;
  ro.tol = options.tol;
  const auto records = compute_records(kept, ro, options.jobs);
  const std::string_view name = def.name;
  for (const GraphRecord& r : records) {
    ++result.graphs_checked;
    if (name == "splus") {
      const double slack = 2.0 * r.m - r.n + 1.0 - r.spectrum.s_plus;
      if (!result.min_slack || slack < *result.min_slack) {
        result.min_slack = slack;
        result.argmin = r.graph6;
      }
      if (std::abs(slack) <= options.tol) result.tight.push_back(r.graph6);
      if (slack < -options.tol) result.counterexamples.push_back(r);
      continue;
    }
    const int lhs = name == "c41" ? *r.psi() : *r.gamma_number();
    const Rational slack = Rational(2) * r.r_prime - Rational(lhs);
    if (!result.min_slack_exact || slack < *result.min_slack_exact) {
      result.min_slack_exact = slack;
      result.min_slack = slack.to_double();
      result.argmin = r.graph6;
    }
    if (slack == Rational(0)) result.tight.push_back(r.graph6);
    if (slack < Rational(0)) result.counterexamples.push_back(r);
  }
  return result;
}

}  // namespace

const std::vector<std::string>& hunt_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& h : hunts()) out.emplace_back(h.name);
    return out;
  }();
  return names;
}

bool hunt_applies(std::string_view conjecture, const Graph& g) {
  const HuntDef& def = hunt_lookup(conjecture);
  if (g.order() < 1 || !passes(g, def.filter)) return false;
  if (def.needs.achromatic && g.order() > kAchromaticLimit) return false;
  if (def.needs.grundy && g.order() > kGrundyLimit) return false;
  return true;
}

HuntResult hunt(std::string_view conjecture, const HuntOptions& options) {
  const HuntDef& def = hunt_lookup(conjecture);
  const int n_max = options.n_max.value_or(kEnumerationLimit);
  check_n_max(n_max);
  return run_hunt(def, enumerate_up_to(n_max, def.filter),
                  "exhaustive, " + std::string(to_string(def.filter)) + ", n <= " + std::to_string(n_max),
                  options);
}

HuntResult hunt_corpus(std::string_view conjecture, const std::vector<Graph>& corpus,
                       const std::string& corpus_name, const HuntOptions& options) {
  return run_hunt(hunt_lookup(conjecture), corpus, corpus_name, options);
}

nlohmann::ordered_json to_json(const HuntResult& h) {
  nlohmann::ordered_json j;
  j["conjecture"] = h.conjecture;
  j["statement"] = h.statement;
  j["corpus"] = h.corpus;
  j["graphs_checked"] = h.graphs_checked;
  j["graphs_skipped"] = h.graphs_skipped;
  j["counterexample_found"] = h.found_counterexample();
  if (h.min_slack_exact) j["min_slack"] = h.min_slack_exact->str();
  else if (h.min_slack) j["min_slack"] = *h.min_slack;
  else j["min_slack"] = nullptr;
  j["argmin"] = h.argmin.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(h.argmin);
  j["tight"] = h.tight;
  auto ce = nlohmann::ordered_json::array();
  for (const auto& r : h.counterexamples) ce.push_back(to_json(r));
  j["counterexamples"] = std::move(ce);
  return j;
}

// ---------------------------------------------------------------------------

std::string example_p4_table() {
  const GraphRecord r = compute_record(path_graph(4));
  const double two_m = 2.0 * r.m;
  const double mu1 = r.spectrum.eigenvalues[0];
  const double mu2 = r.spectrum.eigenvalues[1];

  std::ostringstream os;
  os << "P4 (graph6 " << r.graph6 << ")\n";
  os << std::left << std::setw(14) << "quantity" << std::setw(9) << "value" << "full precision\n";
  auto row = [&](const std::string& name, const std::string& shown, const std::string& full) {
    os << std::left << std::setw(14) << name << std::setw(9) << shown << full << '\n';
  };
  auto fixed = [](double x, int digits) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << x;
    return s.str();
  };
  auto full = [](double x) {
    std::ostringstream s;
    s << std::setprecision(17) << x;
    return s.str();
  };
  const Rational two_rp = Rational(2) * r.r_prime;
  const Rational two_h = Rational(2) * r.harmonic;
  row("chi", std::to_string(*r.chi()), std::to_string(*r.chi()));
  row("col", std::to_string(r.coloring_number), std::to_string(r.coloring_number));
  row("Grundy", std::to_string(*r.gamma_number()), std::to_string(*r.gamma_number()));
  row("psi", std::to_string(*r.psi()), std::to_string(*r.psi()));
  row("Delta+1", std::to_string(r.max_degree + 1), std::to_string(r.max_degree + 1));
  row("2R'", two_rp.str(), two_rp.str());
  row("2H", fixed(two_h.to_double(), 2), two_h.str() + " = " + full(two_h.to_double()));
  row("2R", fixed(2.0 * r.randic, 2), full(2.0 * r.randic));
  row("mu1", fixed(mu1, 3), full(mu1) + " (" + fixed(mu1, 2) + ")");
  row("mu2", fixed(mu2, 3), full(mu2) + " (" + fixed(mu2, 2) + ")");
  row("2m/mu1", fixed(two_m / mu1, 2), full(two_m / mu1));
  row("2m/sqrt(s+)", fixed(two_m / std::sqrt(r.spectrum.s_plus), 2),
      full(two_m / std::sqrt(r.spectrum.s_plus)));
  return os.str();
}

}  // namespace chromabound
