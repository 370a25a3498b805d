#ifndef CHROMABOUND_SUITES_HPP
#define CHROMABOUND_SUITES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromabound/enumerate.hpp"
#include "chromabound/rational.hpp"
#include "chromabound/record.hpp"
#include "chromabound/spectral.hpp"

#include <json.hpp>

namespace chromabound {

/// One failed check on one graph.
struct Violation {
  std::string graph6;
  std::string bound;
  std::string lhs;
  std::string rhs;
  std::string note;
};

/// Aggregate over the corpus for one named inequality or characterisation.
struct BoundStat {
  std::string bound;
  BoundKind kind = BoundKind::theorem;
  int checked = 0;
  bool exact = false;
  std::optional<Rational> min_slack_exact;
  std::optional<double> min_slack;
  std::string argmin;
  std::vector<std::string> equality_cases;
  int violations = 0;
};

struct SuiteResult {
  std::string suite;
  std::string filter;
  int n_max = 0;
  int graphs_checked = 0;
  std::vector<BoundStat> bounds;
  std::vector<Violation> violations;

  /// A suite of proved statements passes iff nothing was violated.
  bool passed() const { return violations.empty(); }
  const BoundStat* find(std::string_view bound) const;
};

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Every bound identifier each suite reports, in suite_names() order.
/// Used to check that the registry covers the full set of statements.
const std::vector<std::pair<std::string, std::vector<std::string>>>& suite_manifest();

struct VerifyOptions {
  int n_max = 7;
  bool connected_only = false;
  int jobs = 1;
  double tol = kSpectralTolerance;
};

/// Runs one named suite (not "all") over the exhaustive corpus 1 <= n <= n_max.
/// Throws std::invalid_argument for an unknown suite and LimitError for an
/// unsupported n_max.
SuiteResult run_suite(std::string_view name, const VerifyOptions& options);

/// Runs every suite, sharing one set of records.
std::vector<SuiteResult> run_all_suites(const VerifyOptions& options);

/// Runs a suite over records that were computed already.
SuiteResult run_suite_on(std::string_view name, const std::vector<GraphRecord>& records,
                         const VerifyOptions& options);

nlohmann::ordered_json to_json(const SuiteResult& s);

/// Outcome of a conjecture hunt.
struct HuntResult {
  std::string conjecture;
  std::string statement;
  std::string corpus;
  int graphs_checked = 0;
  int graphs_skipped = 0;
  std::vector<GraphRecord> counterexamples;
  std::optional<Rational> min_slack_exact;  // c41, c42
  std::optional<double> min_slack;
  std::string argmin;
  std::vector<std::string> tight;  // graphs at slack 0

  bool found_counterexample() const { return !counterexamples.empty(); }
};

const std::vector<std::string>& hunt_names();

struct HuntOptions {
  std::optional<int> n_max;
  int jobs = 1;
  double tol = kSpectralTolerance;
};

/// Graphs a hunt considers: no isolated vertices for c41/c42, connected for
/// splus, and within the search limits of the invariants involved.
bool hunt_applies(std::string_view conjecture, const Graph& g);

/// Exhaustive hunt over 1 <= n <= n_max.
HuntResult hunt(std::string_view conjecture, const HuntOptions& options);

/// Hunt over a user corpus. Graphs outside hunt_applies are counted as skipped.
HuntResult hunt_corpus(std::string_view conjecture, const std::vector<Graph>& corpus,
                       const std::string& corpus_name, const HuntOptions& options);

nlohmann::ordered_json to_json(const HuntResult& h);

/// Plain-text table of the P4 example values.
std::string example_p4_table();

}  // namespace chromabound

#endif  // CHROMABOUND_SUITES_HPP
