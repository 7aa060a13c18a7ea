#include "sumdex/bounds.hpp"

#include "sumdex/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace sumdex {

long long binomial(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  b = std::min(b, a - b);
  long long r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

long long haslegrave_bound(const Graph& g) {
  if (g.order() < 2) throw InputError("Haslegrave bound needs n >= 2");
  const auto deg = degree_sequence(g);
  long long best = std::numeric_limits<long long>::min();
  for (std::size_t k = 1; k + 1 <= deg.size(); ++k) {
    const long long value = static_cast<long long>(deg[k - 1] + deg[k]) - static_cast<long long>(k);
    best = std::max(best, value);
  }
  return best;
}

namespace {

// Edge colouring with `colors` colours, edges in canonical order. First-occurrence
// symmetry breaking: an edge may open at most one new colour.
class EdgeColorer {
 public:
  EdgeColorer(const Graph& g, std::size_t colors, std::uint64_t budget)
      : g_(g), colors_(colors), budget_(budget), color_(g.size(), 0),
        used_at_(g.order(), std::vector<bool>(colors, false)) {}

  // nullopt on budget exhaustion.
  std::optional<bool> run() {
    try {
      return extend(0, 0);
    } catch (const Exhausted&) {
      return std::nullopt;
    }
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Exhausted {};

  bool extend(std::size_t idx, std::size_t opened) {
    if (++nodes_ > budget_) throw Exhausted{};
    if (idx == g_.size()) return true;
    const Edge e = g_.edges()[idx];
    const std::size_t limit = std::min(colors_, opened + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (used_at_[e.u][c] || used_at_[e.v][c]) continue;
      used_at_[e.u][c] = used_at_[e.v][c] = true;
      color_[idx] = c;
      if (extend(idx + 1, std::max(opened, c + 1))) return true;
      used_at_[e.u][c] = used_at_[e.v][c] = false;
    }
    return false;
  }

  const Graph& g_;
  std::size_t colors_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> color_;
  std::vector<std::vector<bool>> used_at_;
};

}  // namespace

ChromaticIndex chromatic_index(const Graph& g, std::uint64_t node_budget) {
  const std::size_t delta = g.max_degree();
  ChromaticIndex out{delta, delta + 1, false, 0};
  if (g.size() == 0) return {0, 0, true, 0};
  EdgeColorer search(g, delta, node_budget);
  auto found = search.run();
  out.nodes = search.nodes();
  if (found.has_value()) {
    out.exact = true;
    if (*found) out.upper = delta;
  }
  return out;
}

BoundReport sum_index_bounds(const Graph& g, std::uint64_t chromatic_budget) {
  BoundReport r;
  const auto n = static_cast<long long>(g.order());
  r.max_degree = g.max_degree();
  if (g.size() == 0) {
    r.lower_method = r.upper_method = "edgeless";
    r.haslegrave = g.order() >= 2 ? haslegrave_bound(g) : 0;
    return r;
  }
  const ChromaticIndex ci = chromatic_index(g, chromatic_budget);
  r.chromatic_index_lower = ci.lower;
  r.chromatic_index_upper = ci.upper;
  r.chromatic_index_exact = ci.exact;
  r.haslegrave = haslegrave_bound(g);
  r.trivial_upper = 2 * n - 3;
  r.best_upper = r.trivial_upper;
  r.upper_method = "complete_graph";

  r.best_lower = 1;
  r.lower_method = "one_edge";
  auto consider = [&](long long value, const char* method) {
    if (value > r.best_lower) {
      r.best_lower = value;
      r.lower_method = method;
    }
  };
  consider(static_cast<long long>(r.max_degree), "max_degree");
  consider(static_cast<long long>(ci.proven_lower()), "chromatic_index");
  consider(r.haslegrave, "haslegrave");
  return r;
}

long long cluster3_sum_index(long long copies) {
  if (copies < 1) throw InputError("cluster needs at least one copy");
  long long s = 1;
  while (binomial(s, 3) < copies) ++s;
  return s;
}

long long cluster4_sum_index(long long copies) {
  if (copies < 1) throw InputError("cluster needs at least one copy");
  long long s = 1;
  while (binomial(s / 2, 3) + binomial((s + 1) / 2, 3) < copies) ++s;
  return s;
}

std::optional<long long> known_formula(const FamilySpec& raw) {
  const FamilySpec spec = raw.normalized();
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::complete:
      return p[0] >= 2 ? 2 * p[0] - 3 : 0;
    case FamilyKind::complete_bipartite:
      return p[0] + p[1] - 1;
    case FamilyKind::complete_multipartite: {
      if (p.size() < 2) return 0;  // one part: edgeless
      const long long total = std::accumulate(p.begin(), p.end(), 0LL);
      return 2 * total - p[0] - p[1] - 1;
    }
    case FamilyKind::cycle:
      return 3;
    case FamilyKind::hypercube:
      return 2 * p[0] - 1;
    case FamilyKind::cluster:
      switch (p[1]) {
        case 2: return 1;
        case 3: return cluster3_sum_index(p[0]);
        case 4: return cluster4_sum_index(p[0]);
        default: return std::nullopt;
      }
    default:
      return std::nullopt;
  }
}

}  // namespace sumdex
