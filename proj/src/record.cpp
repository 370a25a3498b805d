#include "chromabound/record.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "chromabound/canonical.hpp"
#include "chromabound/families.hpp"
#include "chromabound/graph6.hpp"
#include "chromabound/indices.hpp"

namespace chromabound {

std::string FamilyMatch::label() const {
  switch (kind) {
    case Kind::none: return "none";
    case Kind::complete: return "K_n";
    case Kind::star: return "K_{1,n-1}";
    case Kind::kite: return "K_k.K_{1,n-k}(k=" + std::to_string(k) + ")";
  }
  return "none";
}

std::optional<FamilyMatch> match_family(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalLimit) return std::nullopt;
  if (n == 0) return FamilyMatch{};
  if (g.is_complete()) return FamilyMatch{FamilyMatch::Kind::complete, n};
  const CanonicalForm key = canonical_form(g);
  if (g.size() == n - 1 && key == canonical_form(star_graph(n))) {
    return FamilyMatch{FamilyMatch::Kind::star, 1};
  }
  for (int k = 3; k < n; ++k) {
    if (g.size() != k * (k - 1) / 2 + n - k) continue;
    if (key == canonical_form(kite_graph(n, k))) return FamilyMatch{FamilyMatch::Kind::kite, k};
  }
  return FamilyMatch{};
}

std::optional<int> GraphRecord::chi() const {
  if (!chromatic) return std::nullopt;
  return chromatic->number();
}

std::optional<int> GraphRecord::gamma_number() const {
  if (!grundy) return std::nullopt;
  return grundy->number();
}

std::optional<int> GraphRecord::psi() const {
  if (!achromatic) return std::nullopt;
  return achromatic->number();
}

BoundInputs GraphRecord::bound_inputs() const {
  return {spectrum, coloring_number, randic, chi(), psi()};
}

double spectral_tolerance_from_env() {
  const char* raw = std::getenv("CHROMABOUND_TOL");
  if (raw == nullptr || *raw == '\0') return kSpectralTolerance;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(value > 0.0) || !std::isfinite(value)) return kSpectralTolerance;
  return value;
}

namespace {

void add_flags(GraphRecord& r, double tol) {
  auto& flags = r.equality_flags;
  const Rational two_rp = Rational(2) * r.r_prime;
  const Rational two_h = Rational(2) * r.harmonic;
  const Rational col(r.coloring_number);
  if (r.m == 0) return;
  if (col == two_rp) flags.emplace_back("col=2R'");
  if (r.chi() && Rational(*r.chi()) == two_rp) flags.emplace_back("chi=2R'");
  if (col == two_h) flags.emplace_back("col=2H");
  if (r.chi() && Rational(*r.chi()) == two_h) flags.emplace_back("chi=2H");
  if (std::abs(2.0 * r.randic - r.coloring_number) <= kRandicTolerance) flags.emplace_back("col=2R");
  if (r.psi() && Rational(*r.psi()) == two_rp) flags.emplace_back("psi=2R'");
  if (r.gamma_number() && Rational(*r.gamma_number()) == two_rp) flags.emplace_back("grundy=2R'");
  if (r.r_prime == r.harmonic) flags.emplace_back("R'=H");

  const double two_m = 2.0 * r.m;
  const double over_sqrt_sp = two_m / std::sqrt(r.spectrum.s_plus);
  const double over_mu = two_m / r.spectrum.spectral_radius();
  if (r.psi() && std::abs(over_sqrt_sp - *r.psi()) <= tol) flags.emplace_back("psi=2m/sqrt(s+)");
  if (std::abs(over_sqrt_sp - r.coloring_number) <= tol) flags.emplace_back("col=2m/sqrt(s+)");
  if (std::abs(over_mu - 2.0 * r.randic) <= tol) flags.emplace_back("2m/mu=2R");
  if (r.graph.is_connected() && std::abs(two_m - r.n + 1.0 - r.spectrum.s_plus) <= tol) {
    flags.emplace_back("s+=2m-n+1");
  }
}

}  // namespace

GraphRecord compute_record(const Graph& g, const RecordOptions& options) {
  GraphRecord r;
  r.graph6 = to_graph6(g);
  r.graph = g;
  r.n = g.order();
  r.m = g.size();
  r.min_degree = g.min_degree();
  r.max_degree = g.max_degree();
  r.coloring_number = coloring_number(g);
  if (options.chromatic && r.n <= kChromaticLimit) r.chromatic = chromatic_number(g);
  if (options.grundy && r.n <= kGrundyLimit) r.grundy = grundy_number(g);
  if (options.achromatic && r.n <= kAchromaticLimit) r.achromatic = achromatic_number(g);
  r.randic = randic(g);
  r.harmonic = harmonic(g);
  r.r_prime = r_prime(g);
  r.spectrum = eigenvalues(g);
  r.family = match_family(g);
  add_flags(r, options.tol);
  return r;
}

std::vector<GraphRecord> compute_records(const std::vector<Graph>& graphs,
                                         const RecordOptions& options, int jobs) {
  std::vector<GraphRecord> out(graphs.size());
  if (jobs <= 1 || graphs.size() < 2) {
    for (std::size_t i = 0; i < graphs.size(); ++i) out[i] = compute_record(graphs[i], options);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    for (std::size_t i = next++; i < graphs.size() && !failed; i = next++) {
      try {
        out[i] = compute_record(graphs[i], options);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const int threads = std::min<int>(jobs, static_cast<int>(graphs.size()));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

namespace {

nlohmann::ordered_json optional_int(const std::optional<int>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

nlohmann::ordered_json to_json(const GraphRecord& r) {
  nlohmann::ordered_json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["min_degree"] = r.min_degree;
  j["max_degree"] = r.max_degree;
  j["chi"] = optional_int(r.chi());
  j["col"] = r.coloring_number;
  j["grundy"] = optional_int(r.gamma_number());
  j["psi"] = optional_int(r.psi());
  j["randic"] = r.randic;
  j["harmonic"] = r.harmonic.str();
  j["harmonic_float"] = r.harmonic.to_double();
  j["r_prime"] = r.r_prime.str();
  j["r_prime_float"] = r.r_prime.to_double();
  j["eigenvalues"] = r.spectrum.eigenvalues;
  j["pi"] = r.spectrum.pi;
  j["nu"] = r.spectrum.nu;
  j["gamma"] = r.spectrum.gamma;
  j["s_plus"] = r.spectrum.s_plus;
  j["s_minus"] = r.spectrum.s_minus;
  j["zero_tol"] = r.spectrum.zero_tol;
  j["near_zero_review"] = r.spectrum.near_zero_review;
  j["family_match"] = r.family ? nlohmann::ordered_json(r.family->label()) : nlohmann::ordered_json(nullptr);
  j["equality_flags"] = r.equality_flags;
  return j;
}

namespace {

std::string number(double x) {
  // Same shortest round-trip text the JSON writer produces.
  return nlohmann::json(x).dump();
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ";" : "") + parts[i];
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

std::string csv_header() {
  return "graph6,n,m,min_degree,max_degree,chi,col,grundy,psi,randic,harmonic,harmonic_float,"
         "r_prime,r_prime_float,eigenvalues,pi,nu,gamma,s_plus,s_minus,zero_tol,near_zero_review,"
         "family_match,equality_flags";
}

std::string to_csv(const GraphRecord& r) {
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  std::vector<std::string> eig;
  for (double x : r.spectrum.eigenvalues) eig.push_back(number(x));
  std::ostringstream os;
  os << csv_quote(r.graph6) << ',' << r.n << ',' << r.m << ',' << r.min_degree << ','
     << r.max_degree << ',' << opt(r.chi()) << ',' << r.coloring_number << ','
     << opt(r.gamma_number()) << ',' << opt(r.psi()) << ',' << number(r.randic) << ','
     << r.harmonic.str() << ',' << number(r.harmonic.to_double()) << ',' << r.r_prime.str() << ','
     << number(r.r_prime.to_double()) << ',' << join(eig) << ',' << r.spectrum.pi << ','
     << r.spectrum.nu << ',' << r.spectrum.gamma << ',' << number(r.spectrum.s_plus) << ','
     << number(r.spectrum.s_minus) << ',' << number(r.spectrum.zero_tol) << ','
     << (r.spectrum.near_zero_review ? "true" : "false") << ','
     << csv_quote(r.family ? r.family->label() : std::string()) << ','
     << csv_quote(join(r.equality_flags));
  return os.str();
}

}  // namespace chromabound
