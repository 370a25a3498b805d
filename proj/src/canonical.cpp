#include "chromabound/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

namespace chromabound {

namespace {

constexpr int kHardLimit = 11;

// Stable colour refinement: start from degrees and split by the multiset of
// neighbour colours until the partition stops growing. Colours are ranks of
// sorted signatures, so they do not depend on the input labelling.
//
// With n <= 11 a signature packs exactly into 64 bits: the vertex's own colour
// above eleven 4-bit neighbour-colour counts.
std::array<int, kHardLimit> refine(const Graph& g) {
  const int n = g.order();
  std::array<int, kHardLimit> colour{};
  std::array<std::uint64_t, kHardLimit> sig{};
  std::array<std::uint64_t, kHardLimit> sorted{};

  auto rank = [&]() {
    std::copy_n(sig.begin(), n, sorted.begin());
    std::sort(sorted.begin(), sorted.begin() + n);
    const auto last = std::unique(sorted.begin(), sorted.begin() + n);
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), last, sig[v]) - sorted.begin());
    }
    return static_cast<int>(last - sorted.begin());
  };

  for (int v = 0; v < n; ++v) sig[v] = static_cast<std::uint64_t>(g.degree(v));
  int classes = rank();
  while (classes < n) {
    for (int v = 0; v < n; ++v) {
      std::uint64_t s = static_cast<std::uint64_t>(colour[v]) << 44;
      for (VertexSet t = g.neighbors(v); t; t &= t - 1) {
        s += std::uint64_t{1} << (4 * colour[std::countr_zero(t)]);
      }
      sig[v] = s;
    }
    const int next = rank();
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

class Canonicaliser {
 public:
  explicit Canonicaliser(const Graph& g)
      : g_(g), n_(g.order()), total_bits_(n_ * (n_ - 1) / 2) {
    const auto colour = refine(g);
    colour_.assign(colour.begin(), colour.begin() + n_);
    slot_colour_ = colour_;
    std::sort(slot_colour_.begin(), slot_colour_.end());
    placed_.assign(static_cast<std::size_t>(n_), -1);
    current_.assign(static_cast<std::size_t>(n_), -1);
  }

  void run() { search(0, 0, 0); }

  std::uint64_t best_bits() const { return best_; }

  std::vector<int> labeling() const {
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (int pos = 0; pos < n_; ++pos) perm[placed_[pos]] = pos;
    return perm;
  }

 private:
  void search(int pos, std::uint64_t prefix, VertexSet used) {
    if (pos == n_) {
      if (!have_best_ || prefix > best_) {
        best_ = prefix;
        have_best_ = true;
        placed_ = current_;
      }
      return;
    }
    const int len = pos * (pos + 1) / 2;
    for (int v = 0; v < n_; ++v) {
      if (((used >> v) & 1U) || colour_[v] != slot_colour_[pos]) continue;
      std::uint64_t next = prefix;
      const VertexSet nv = g_.neighbors(v);
      for (int i = 0; i < pos; ++i) next = (next << 1) | ((nv >> current_[i]) & 1U);
      if (have_best_ && next < (best_ >> (total_bits_ - len))) continue;
      current_[pos] = v;
      search(pos + 1, next, used | bit(v));
    }
  }

  const Graph& g_;
  int n_;
  int total_bits_;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::vector<int> current_;
  std::vector<int> placed_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

void check_limit(const Graph& g, int limit) {
  const int cap = std::min(limit, kHardLimit);
  if (g.order() > cap) {
    throw LimitError("canonical form: order " + std::to_string(g.order()) + " above limit " +
                     std::to_string(cap));
  }
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, int limit) {
  check_limit(g, limit);
  Canonicaliser c(g);
  c.run();
  return {g.order(), c.best_bits()};
}

std::vector<int> canonical_labeling(const Graph& g, int limit) {
  check_limit(g, limit);
  Canonicaliser c(g);
  c.run();
  return c.labeling();
}

Graph canonical_graph(const Graph& g, int limit) {
  const std::vector<int> perm = canonical_labeling(g, limit);
  return g.relabel(perm);
}

bool isomorphic(const Graph& a, const Graph& b, int limit) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a, limit) == canonical_form(b, limit);
}

std::string to_string(const CanonicalForm& f) {
  std::ostringstream os;
  os << f.order << ':' << std::hex << f.bits;
  return os.str();
}

}  // namespace chromabound
