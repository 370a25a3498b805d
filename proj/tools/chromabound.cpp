// chromabound: compute Randić-type indices, colouring invariants and
// adjacency spectra of small graphs, and check the bounds relating them.
//
// Exit codes: 0 all checks pass, 1 a violation (or counterexample) was found,
// 2 bad usage or unreadable input.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chromabound/graph6.hpp"
#include "chromabound/record.hpp"
#include "chromabound/suites.hpp"

namespace cb = chromabound;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

cb::Graph6Stream read_input(const std::string& path) {
  if (path.empty() || path == "-") return cb::read_graph6_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return cb::read_graph6_stream(in);
}

void report_parse_errors(const cb::Graph6Stream& stream) {
  for (const auto& e : stream.errors) {
    std::cerr << "line " << e.line_number << ": " << e.message << '\n';
  }
}

int cmd_invariants(const std::string& format, bool strict, int jobs, const std::string& path) {
  const cb::Graph6Stream stream = read_input(path);
  report_parse_errors(stream);
  bool failed = !stream.errors.empty();

  std::vector<cb::Graph> graphs;
  for (const auto& line : stream.graphs) graphs.push_back(line.graph);
  cb::RecordOptions options;
  options.tol = cb::spectral_tolerance_from_env();

  std::vector<cb::GraphRecord> records;
  try {
    records = cb::compute_records(graphs, options, jobs);
  } catch (const std::exception&) {
    // Fall back to one graph at a time so the failing line can be named.
    records.clear();
    for (const auto& line : stream.graphs) {
      try {
        records.push_back(cb::compute_record(line.graph, options));
      } catch (const std::exception& e) {
        std::cerr << "line " << line.line_number << ": " << e.what() << '\n';
        failed = true;
      }
    }
  }

  if (format == "csv" && !records.empty()) std::cout << cb::csv_header() << '\n';
  for (const auto& r : records) {
    if (format == "csv") std::cout << cb::to_csv(r) << '\n';
    else std::cout << cb::to_json(r).dump() << '\n';
  }
  return failed && strict ? kExitUsage : kExitOk;
}

int cmd_verify(const std::string& suite, int n_max, bool connected, int jobs) {
  cb::VerifyOptions options;
  options.n_max = n_max;
  options.connected_only = connected;
  options.jobs = jobs;
  options.tol = cb::spectral_tolerance_from_env();

  std::vector<cb::SuiteResult> results;
  if (suite == "all") results = cb::run_all_suites(options);
  else results.push_back(cb::run_suite(suite, options));

  bool passed = true;
  for (const auto& r : results) {
    std::cout << cb::to_json(r).dump() << '\n';
    std::cerr << r.suite << " [" << r.filter << ", n <= " << r.n_max << "]: " << r.graphs_checked
              << " graphs, " << r.violations.size() << " violations\n";
    passed = passed && r.passed();
  }
  return passed ? kExitOk : kExitViolation;
}

int cmd_hunt(const std::string& conjecture, std::optional<int> n_max, const std::string& corpus, int jobs) {
  cb::HuntOptions options;
  options.n_max = n_max;
  options.jobs = jobs;
  options.tol = cb::spectral_tolerance_from_env();

  cb::HuntResult result;
  if (!corpus.empty()) {
    const cb::Graph6Stream stream = read_input(corpus);
    report_parse_errors(stream);
    std::vector<cb::Graph> graphs;
    for (const auto& line : stream.graphs) graphs.push_back(line.graph);
    result = cb::hunt_corpus(conjecture, graphs, corpus, options);
  } else {
    result = cb::hunt(conjecture, options);
  }
  std::cout << cb::to_json(result).dump() << '\n';
  std::cerr << conjecture << ": " << result.graphs_checked << " graphs checked, "
            << result.counterexamples.size() << " counterexamples, " << result.tight.size()
            << " tight\n";
  return result.found_counterexample() ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randić-type indices, colouring numbers and spectral bounds on small graphs"};
  app.require_subcommand(1);

  auto* inv = app.add_subcommand("invariants", "Compute every invariant for graph6 input");
  std::string format = "json";
  bool strict = false;
  std::string input;
  int inv_jobs = 1;
  inv->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  inv->add_flag("--strict", strict, "Exit nonzero if any input line fails");
  inv->add_option("--jobs", inv_jobs, "Worker threads")->check(CLI::PositiveNumber);
  inv->add_option("file", input, "graph6 file (default: stdin)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite over all small graphs");
  std::string suite;
  int n_max = 0;
  bool connected = false;
  int verify_jobs = 1;
  std::vector<std::string> suites = cb::suite_names();
  suites.emplace_back("all");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--n-max", n_max, "Largest graph order")->required()->check(CLI::Range(1, cb::kEnumerationLimit));
  verify->add_flag("--connected", connected, "Restrict to connected graphs");
  verify->add_option("--jobs", verify_jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* hunt = app.add_subcommand("hunt", "Search for counterexamples to a conjecture");
  std::string conjecture;
  int hunt_n_max = 0;
  std::string corpus;
  int hunt_jobs = 1;
  hunt->add_option("conjecture", conjecture, "Conjecture")->required()->check(CLI::IsMember(cb::hunt_names()));
  auto* n_opt = hunt->add_option("--n-max", hunt_n_max, "Exhaustive search up to this order")
                    ->check(CLI::Range(1, cb::kEnumerationLimit));
  auto* corpus_opt = hunt->add_option("--corpus", corpus, "graph6 corpus file");
  n_opt->excludes(corpus_opt);
  hunt->add_option("--jobs", hunt_jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* example = app.add_subcommand("example-p4", "Print the invariants of the path P4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*inv) return cmd_invariants(format, strict, inv_jobs, input);
    if (*verify) return cmd_verify(suite, n_max, connected, verify_jobs);
    if (*hunt) {
      if (n_opt->count() == 0 && corpus_opt->count() == 0) {
        std::cerr << "hunt: one of --n-max or --corpus is required\n";
        return kExitUsage;
      }
      return cmd_hunt(conjecture, n_opt->count() ? std::optional<int>(hunt_n_max) : std::nullopt, corpus,
                      hunt_jobs);
    }
    if (*example) {
      std::cout << cb::example_p4_table();
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
