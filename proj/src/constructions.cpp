#include "sumdex/constructions.hpp"

#include "sumdex/bounds.hpp"
#include "sumdex/errors.hpp"
#include "sumdex/sqrt_field.hpp"

#include <algorithm>
#include <numeric>

namespace sumdex {
namespace {

void finish(ConstructionResult& r, const char* what) {
  if (auto bad = validate_labeling(r.graph, r.labeling)) {
    throw ValidationError(std::string(what) + ": " + bad->message);
  }
  r.achieved = static_cast<long long>(rank_sums(r.graph, r.labeling).count());
  if (r.achieved != r.claimed) {
    throw ValidationError(std::string(what) + ": claimed " + std::to_string(r.claimed) + " sums, got " +
                          std::to_string(r.achieved));
  }
}

std::size_t total(const std::vector<std::size_t>& parts) {
  return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
}

std::vector<std::size_t> sorted_parts(std::vector<std::size_t> parts, const char* what) {
  if (parts.size() < 2) throw InputError(std::string(what) + " needs at least two parts");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  if (parts.back() == 0) throw InputError("part sizes must be positive");
  return parts;
}

// All r-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> c(r);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    std::size_t i = r;
    while (i > 0 && c[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < r; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

using Surd = std::vector<std::int64_t>;

Surd combine(const Surd& x, std::int64_t sx, const Surd& y, std::int64_t sy) {
  Surd out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = sx * x[i] + sy * y[i];
  return out;
}

struct K4Pattern {
  std::array<Surd, 3> a;
  std::array<Surd, 3> b;
};

// Doubled ranks 2 f(v1..v4) as symbolic vectors.
std::array<Surd, 4> doubled_ranks(const K4Pattern& p) {
  auto sum3 = [](const Surd& x, const Surd& y, const Surd& z) {
    return combine(combine(x, 1, y, 1), 1, z, -1);
  };
  return {sum3(p.b[0], p.b[1], p.a[2]), sum3(p.a[1], p.a[2], p.a[0]), sum3(p.a[0], p.a[2], p.a[1]),
          sum3(p.a[0], p.a[1], p.a[2])};
}

ConstructionResult label_cluster4(std::size_t copies) {
  const long long s = cluster4_sum_index(static_cast<long long>(copies));
  const std::size_t h = static_cast<std::size_t>(s / 2);
  const SurdBasis basis(first_primes(h + 1));

  auto unit = [&](std::size_t j) {
    Surd e(h + 1, 0);
    e[j] = 1;
    return e;
  };
  const Surd pp = unit(h);
  std::vector<Surd> lower, upper;
  for (std::size_t i = 0; i < h; ++i) {
    lower.push_back(unit(i));
    upper.push_back(combine(pp, 2, unit(i), -1));
  }
  auto pattern = [&](const Surd& a1, const Surd& a2, const Surd& a3) {
    K4Pattern p{{a1, a2, a3}, {}};
    for (int i = 0; i < 3; ++i) p.b[i] = combine(pp, 2, p.a[i], -1);
    return p;
  };

  std::vector<K4Pattern> patterns;
  for (const auto* side : {&lower, &upper}) {
    for (const auto& t : combinations(h, 3)) patterns.push_back(pattern((*side)[t[0]], (*side)[t[1]], (*side)[t[2]]));
  }
  if (s % 2 == 1) {
    for (const auto& t : combinations(h, 2)) patterns.push_back(pattern(pp, lower[t[0]], lower[t[1]]));
  }
  if (patterns.size() < copies) throw ValidationError("not enough K_4 sum patterns");
  patterns.resize(copies);

  std::vector<Surd> sum_values(lower);
  sum_values.insert(sum_values.end(), upper.begin(), upper.end());
  if (s % 2 == 1) sum_values.push_back(pp);
  std::vector<Surd> rank_values;
  for (const auto& p : patterns) {
    for (auto& r : doubled_ranks(p)) rank_values.push_back(std::move(r));
  }

  // Smallest m >= 0 with 2^m * min(delta1, delta2) > 10, decided on certified intervals.
  unsigned m = 0;
  for (unsigned precision = 64;; precision *= 2) {
    const GapBounds g1 = min_pairwise_gap(basis, sum_values, precision);
    const GapBounds g2 = min_pairwise_gap(basis, rank_values, g1.precision_bits);
    if (g2.precision_bits != g1.precision_bits) {
      precision = g2.precision_bits / 2;
      continue;
    }
    // rank_values are doubled, so halve them (rounding outward).
    const BigInt lo = std::min(g1.lo, BigInt(g2.lo / 2));
    const BigInt hi = std::min(g1.hi, BigInt((g2.hi + 1) / 2));
    const BigInt ten = BigInt(10) << g1.precision_bits;
    unsigned cand = 0;
    while ((lo << cand) <= ten) ++cand;
    if (cand == 0 || (hi << (cand - 1)) <= ten) {
      m = cand;
      break;
    }
    if (precision > 1u << 14) throw ValidationError("multiplier could not be certified");
  }

  for (int attempt = 0; attempt < 8; ++attempt, ++m) {
    std::vector<BigInt> rounded(h + 1);
    for (std::size_t j = 0; j <= h; ++j) rounded[j] = basis.round_scaled(j, m);
    auto eval = [&](const Surd& c) {
      BigInt v = 0;
      for (std::size_t j = 0; j < c.size(); ++j) v += BigInt(c[j]) * rounded[j];
      return v;
    };
    ConstructionResult r;
    r.graph = cluster_graph(copies, 4);
    r.claimed = s;
    bool ok = true;
    for (const auto& p : patterns) {
      std::array<BigInt, 3> a, b;
      for (int i = 0; i < 3; ++i) {
        a[i] = 2 * eval(p.a[i]);
        b[i] = 2 * eval(p.b[i]);
      }
      try {
        for (const auto& f : k4_ranks_from_sums(a, b)) r.labeling.ranks.push_back(f);
      } catch (const InputError&) {
        ok = false;
        break;
      }
    }
    if (ok && !validate_labeling(r.graph, r.labeling) &&
        static_cast<long long>(rank_sums(r.graph, r.labeling).count()) == s) {
      r.details = {{"s", std::to_string(s)}, {"M", to_decimal(BigInt(1) << m)}};
      finish(r, "nK_4");
      return r;
    }
  }
  throw ValidationError("nK_4 construction failed validation after enlarging the multiplier");
}

ConstructionResult label_cluster3(std::size_t copies) {
  const long long s = cluster3_sum_index(static_cast<long long>(copies));
  ConstructionResult r;
  r.graph = cluster_graph(copies, 3);
  r.claimed = s;
  auto value = [](std::size_t i) { return BigInt(2) << (2 * i); };
  const auto triples = combinations(static_cast<std::size_t>(s), 3);
  for (std::size_t t = 0; t < copies; ++t) {
    const BigInt a = value(triples[t][0]), b = value(triples[t][1]), c = value(triples[t][2]);
    r.labeling.ranks.push_back((a + b - c) / 2);
    r.labeling.ranks.push_back((a + c - b) / 2);
    r.labeling.ranks.push_back((b + c - a) / 2);
  }
  r.details = {{"s", std::to_string(s)}};
  finish(r, "nK_3");
  return r;
}

ConstructionResult label_cluster2(std::size_t copies) {
  ConstructionResult r;
  r.graph = cluster_graph(copies, 2);
  r.claimed = 1;
  const long long n = static_cast<long long>(copies);
  for (long long i = 1; i <= n; ++i) {
    r.labeling.ranks.push_back(i);
    r.labeling.ranks.push_back(2 * n + 1 - i);
  }
  finish(r, "nK_2");
  return r;
}

}  // namespace

ConstructionResult label_multipartite(std::vector<std::size_t> parts) {
  parts = sorted_parts(std::move(parts), "multipartite labeling");
  const std::size_t n = total(parts);
  const long long n1 = static_cast<long long>(parts[0]), n2 = static_cast<long long>(parts[1]);
  const long long big_n = static_cast<long long>(n);
  ConstructionResult r;
  r.graph = complete_multipartite(parts);
  r.claimed = 2 * big_n - n1 - n2 - 1;
  for (long long i = 1; i <= n1; ++i) r.labeling.ranks.push_back(i);
  for (long long i = big_n - n2 + 1; i <= big_n; ++i) r.labeling.ranks.push_back(i);
  for (long long i = n1 + 1; i <= big_n - n2; ++i) r.labeling.ranks.push_back(i);
  finish(r, "multipartite");
  const auto sig = rank_sums(r.graph, r.labeling);
  if (sig.sums.front() < n1 + 2 || sig.sums.back() > 2 * big_n - n2) {
    throw ValidationError("multipartite sums escape [n1+2, 2N-n2]");
  }
  return r;
}

ConstructionResult label_join_family(std::vector<std::size_t> parts) {
  parts = sorted_parts(std::move(parts), "join family labeling");
  const long long big_n = static_cast<long long>(total(parts));
  const long long n1 = static_cast<long long>(parts[0]), n2 = static_cast<long long>(parts[1]);
  ConstructionResult r;
  r.graph = join_family(parts);
  r.claimed = 2 * big_n - n1 - n2 - 1;
  for (long long i = 1; i <= n1; ++i) r.labeling.ranks.push_back(i);
  for (long long i = 0; i < n2; ++i) r.labeling.ranks.push_back(big_n - i);
  for (long long i = n1 + 1; i <= big_n - n2; ++i) r.labeling.ranks.push_back(i);
  finish(r, "join family");

  // Internal edges of each block stay inside the window the sum count relies on.
  std::vector<std::size_t> block(r.graph.order());
  for (std::size_t p = 0, v = 0; p < parts.size(); ++p) {
    for (std::size_t i = 0; i < parts[p]; ++i) block[v++] = p;
  }
  for (const Edge& e : r.graph.edges()) {
    if (block[e.u] != block[e.v]) continue;
    const BigInt sum = r.labeling.ranks[e.u] + r.labeling.ranks[e.v];
    const std::size_t p = block[e.u];
    const bool ok = p == 0   ? sum >= n1 + 2
                    : p == 1 ? sum <= 2 * big_n - n2
                             : sum >= 2 * n1 + 3 && sum <= 2 * big_n - 2 * n2 - 1;
    if (!ok) throw ValidationError("join family internal sum outside its window");
  }
  return r;
}

std::vector<BigInt> hypercube_sum_set(std::size_t n) {
  if (n == 0) throw InputError("hypercube dimension must be >= 1");
  const BigInt centre = (BigInt(1) << n) + 1;
  std::vector<BigInt> out{centre};
  for (std::size_t i = 0; i + 2 <= n; ++i) {
    out.push_back(centre + (BigInt(1) << i));
    out.push_back(centre - (BigInt(1) << i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConstructionResult label_hypercube(std::size_t n) {
  if (n == 0 || n > 20) throw InputError("hypercube dimension must be in 1..20");
  std::vector<long long> f{1, 2};
  for (std::size_t d = 1;; ++d) {
    // f labels Q_d; every edge joins a rank <= 2^(d-1) to a rank > 2^(d-1).
    const long long half = 1LL << (d - 1);
    const Graph q = hypercube(d);
    for (const Edge& e : q.edges()) {
      if ((f[e.u] <= half) == (f[e.v] <= half)) throw ValidationError("hypercube rank bipartition broken");
    }
    if (d == n) break;
    const std::size_t size = f.size();
    f.resize(2 * size);
    for (std::size_t v = 0; v < size; ++v) {
      const long long old = f[v];
      f[v] = old <= half ? old : old + (1LL << d);
      f[v + size] = -old + 3 * half + 1;
    }
  }
  ConstructionResult r;
  r.graph = hypercube(n);
  r.claimed = 2 * static_cast<long long>(n) - 1;
  for (long long x : f) r.labeling.ranks.push_back(x);
  finish(r, "hypercube");
  if (rank_sums(r.graph, r.labeling).sums != hypercube_sum_set(n)) {
    throw ValidationError("hypercube sum set differs from the expected one");
  }
  return r;
}

std::array<BigInt, 4> k4_ranks_from_sums(const std::array<BigInt, 3>& a, const std::array<BigInt, 3>& b) {
  if (a[0] + b[0] != a[1] + b[1] || a[0] + b[0] != a[2] + b[2]) {
    throw InputError("opposite edge sums must share one total");
  }
  const std::array<BigInt, 4> twice{b[0] + b[1] - a[2], a[1] + a[2] - a[0], a[0] + a[2] - a[1],
                                    a[0] + a[1] - a[2]};
  std::array<BigInt, 4> f;
  for (int i = 0; i < 4; ++i) {
    if (twice[i] % 2 != 0) throw InputError("rank numerator is odd");
    f[i] = twice[i] / 2;
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (f[i] == f[j]) throw InputError("sums force two equal ranks");
    }
  }
  return f;
}

ConstructionResult label_cluster(std::size_t copies, std::size_t k) {
  if (copies == 0) throw InputError("cluster needs at least one copy");
  switch (k) {
    case 2: return label_cluster2(copies);
    case 3: return label_cluster3(copies);
    case 4: return label_cluster4(copies);
    default: throw InputError("cluster constructions exist for k in {2, 3, 4}");
  }
}

ConstructionResult extremal_construction(std::size_t n, std::size_t sums) {
  if (n < 2 || sums < 1 || sums + 3 > 2 * n) throw InputError("need 1 <= N <= 2n - 3");
  const long long nn = static_cast<long long>(n);
  std::vector<long long> targets;
  targets.push_back(nn + 1);
  for (long long d = 1; targets.size() < sums; ++d) {
    targets.push_back(nn + 1 + d);
    if (targets.size() < sums) targets.push_back(nn + 1 - d);
  }
  std::vector<bool> hit(2 * n + 1, false);
  for (long long t : targets) hit[static_cast<std::size_t>(t)] = true;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (hit[i + j + 2]) edges.push_back({i, j});
    }
  }
  ConstructionResult r;
  r.graph = Graph(n, std::move(edges), "extremal_" + std::to_string(n) + "_" + std::to_string(sums));
  r.labeling = identity_labeling(n);
  r.claimed = static_cast<long long>(sums);
  r.details = {{"edges", std::to_string(r.graph.size())}};
  finish(r, "extremal construction");
  return r;
}

}  // namespace sumdex
