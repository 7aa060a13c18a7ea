#include <doctest.h>

#include "oracles.hpp"
#include "sumdex/exact_solver.hpp"
#include "sumdex/graph_io.hpp"
#include "sumdex/group.hpp"
#include "sumdex/isomorphism.hpp"
#include "sumdex/labeling.hpp"

#include <random>

using namespace sumdex;

namespace {

constexpr int kCases = 1000;

Graph random_graph(std::mt19937_64& rng, std::size_t n) {
  const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (coin(rng)) e.push_back({i, j});
    }
  }
  return Graph(n, e);
}

Labeling random_labeling(std::mt19937_64& rng, std::size_t n) {
  std::set<long long> seen;
  Labeling f;
  while (f.ranks.size() < n) {
    const long long r = std::uniform_int_distribution<long long>(-1000, 1000)(rng);
    if (seen.insert(r).second) f.ranks.push_back(r);
  }
  return f;
}

std::vector<BigInt> random_set(std::mt19937_64& rng, std::size_t size) {
  std::set<long long> s;
  while (s.size() < size) s.insert(std::uniform_int_distribution<long long>(-60, 60)(rng));
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("affine maps preserve the sum count") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = 1 + rng() % 10;
    const Graph g = random_graph(rng, n);
    const Labeling f = random_labeling(rng, n);
    long long a = 0;
    while (a == 0) a = std::uniform_int_distribution<long long>(-9, 9)(rng);
    const long long b = std::uniform_int_distribution<long long>(-100, 100)(rng);
    CHECK(rank_sums(g, affine_map(f, a, b)).count() == rank_sums(g, f).count());
  }
}

TEST_CASE("adjacent edges never share a rank sum") {
  std::mt19937_64 rng(102);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = 2 + rng() % 9;
    const Graph g = random_graph(rng, n);
    const Labeling f = random_labeling(rng, n);
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        const auto& a = edges[i];
        const auto& b = edges[j];
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
          CHECK(f.ranks[a.u] + f.ranks[a.v] != f.ranks[b.u] + f.ranks[b.v]);
        }
      }
    }
    // A spanning subgraph never has more sums.
    if (!edges.empty()) {
      std::vector<Edge> sub(edges.begin(), edges.end());
      sub.erase(sub.begin() + static_cast<long>(rng() % sub.size()));
      CHECK(rank_sums(Graph(n, sub), f).count() <= rank_sums(g, f).count());
    }
  }
}

TEST_CASE("Kneser lower bound over the integers") {
  std::mt19937_64 rng(103);
  for (int t = 0; t < kCases; ++t) {
    const auto x = random_set(rng, 1 + rng() % 12);
    const auto y = random_set(rng, 1 + rng() % 12);
    CHECK(sumset(x, y).size() >= x.size() + y.size() - 1);
  }
}

TEST_CASE("Erdos-Heilbronn bound over the integers, tight on progressions") {
  std::mt19937_64 rng(104);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t size = 2 + rng() % 11;
    const auto x = random_set(rng, size);
    CHECK(restricted_sumset(x).size() >= 2 * size - 3);
  }
  for (int t = 0; t < kCases; ++t) {
    const std::size_t size = 2 + t % 11;
    const long long start = std::uniform_int_distribution<long long>(-50, 50)(rng);
    const long long step = std::uniform_int_distribution<long long>(1, 9)(rng);
    std::vector<BigInt> ap;
    for (std::size_t i = 0; i < size; ++i) ap.emplace_back(start + step * static_cast<long long>(i));
    CHECK(restricted_sumset(ap).size() == 2 * size - 3);
  }
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(105);
  for (int t = 0; t < kCases; ++t) {
    const Graph g = random_graph(rng, rng() % 13);
    const std::string text = encode_graph6(g);
    CHECK(decode_graph6(text) == g);
    CHECK(text == oracle::graph6(g));
  }
}

TEST_CASE("adding an edge raises the sum index by at most one") {
  // Every non-edge of every class on n <= 5 vertices.
  std::map<std::uint32_t, long long> index;
  auto s_of = [&](const Graph& g) {
    const auto cf = canonical_form(g);
    auto it = index.find(cf.code + (static_cast<std::uint32_t>(g.order()) << 24));
    if (it != index.end()) return it->second;
    const auto cert = sum_index_exact(g);
    REQUIRE(cert.status == CertificateStatus::exact);
    index[cf.code + (static_cast<std::uint32_t>(g.order()) << 24)] = cert.value;
    return cert.value;
  };
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const long long s = s_of(g);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          const long long t = s_of(g.with_edge(u, v));
          CHECK(s <= t);
          CHECK(t <= s + 1);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 100);

  // Random graphs on 6 vertices top the count up to the suite size.
  std::mt19937_64 rng(106);
  for (int t = 0; checked < static_cast<std::size_t>(kCases) && t < 100 * kCases; ++t) {
    const Graph g = random_graph(rng, 6);
    std::vector<Edge> missing;
    for (Vertex u = 0; u < 6; ++u) {
      for (Vertex v = u + 1; v < 6; ++v) {
        if (!g.has_edge(u, v)) missing.push_back({u, v});
      }
    }
    if (missing.empty()) continue;
    const Edge e = missing[rng() % missing.size()];
    const long long s = s_of(g);
    const long long t2 = s_of(g.with_edge(e.u, e.v));
    CHECK(s <= t2);
    CHECK(t2 <= s + 1);
    ++checked;
  }
  CHECK(checked == static_cast<std::size_t>(kCases));
}

TEST_CASE("rank sums equal the partial sumset over edge pairs") {
  std::mt19937_64 rng(107);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = 1 + rng() % 10;
    const Graph g = random_graph(rng, n);
    const Labeling f = random_labeling(rng, n);
    std::vector<std::pair<BigInt, BigInt>> pairs;
    for (const Edge& e : g.edges()) pairs.emplace_back(f.ranks[e.u], f.ranks[e.v]);
    CHECK(partial_sumset(f.ranks, f.ranks, pairs) == rank_sums(g, f).sums);
  }
}
