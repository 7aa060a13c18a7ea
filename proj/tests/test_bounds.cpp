#include <doctest.h>

#include "oracles.hpp"
#include "sumdex/bounds.hpp"
#include "sumdex/errors.hpp"

#include <random>

using namespace sumdex;

namespace {

Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, static_cast<Vertex>((i + 1) % 5)});
    e.push_back({i, static_cast<Vertex>(i + 5)});
    e.push_back({static_cast<Vertex>(i + 5), static_cast<Vertex>(5 + (i + 2) % 5)});
  }
  return Graph(10, e);
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> e;
  for (const Edge& x : g.edges()) e.push_back({perm[x.u], perm[x.v]});
  return Graph(g.order(), e);
}

}  // namespace

TEST_CASE("haslegrave bound") {
  CHECK(haslegrave_bound(cycle_graph(6)) == 3);
  CHECK(haslegrave_bound(hypercube(3)) == 5);
  CHECK(haslegrave_bound(complete_graph(5)) == 7);
  CHECK(haslegrave_bound(complete_multipartite({3, 1})) == 1);
  CHECK(haslegrave_bound(ladder(6)) == 3);
  CHECK_THROWS_AS(haslegrave_bound(empty_graph(1)), InputError);
}

TEST_CASE("haslegrave bound on regular graphs is 2d - 1") {
  CHECK(haslegrave_bound(petersen()) == 5);
  for (std::size_t d = 1; d <= 6; ++d) CHECK(haslegrave_bound(hypercube(d)) == static_cast<long long>(2 * d - 1));
}

TEST_CASE("chromatic index") {
  const auto c4 = chromatic_index(cycle_graph(4));
  CHECK(c4.lower == 2);
  CHECK(c4.upper == 2);
  CHECK(c4.exact);

  const auto k3 = chromatic_index(complete_graph(3));
  CHECK(k3.lower == 2);
  CHECK(k3.upper == 3);
  CHECK(k3.exact);

  const auto pet = chromatic_index(petersen(), 5);
  CHECK(pet.lower == 3);
  CHECK(pet.upper == 4);
  CHECK_FALSE(pet.exact);

  const auto pet_full = chromatic_index(petersen());
  CHECK(pet_full.exact);
  CHECK(pet_full.upper == 4);
}

TEST_CASE("chromatic index agrees with exhaustive colouring") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Edge> e;
    const std::size_t n = 3 + trial % 4;
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        if (rng() % 2) e.push_back({i, j});
      }
    }
    const Graph g(n, e);
    if (g.size() == 0 || g.size() > 8) continue;
    const auto ci = chromatic_index(g);
    REQUIRE(ci.exact);
    CHECK(ci.upper == oracle::chromatic_index(g));
  }
}

TEST_CASE("bound reports") {
  const auto k4 = sum_index_bounds(complete_graph(4));
  CHECK(k4.haslegrave == 5);
  CHECK(k4.best_lower == 5);
  CHECK(k4.best_upper == 5);

  const auto q3 = sum_index_bounds(hypercube(3));
  CHECK(q3.best_lower == 5);
  CHECK(q3.best_upper == 13);

  const auto p3 = sum_index_bounds(path_graph(3));
  CHECK(p3.best_lower == 2);
  CHECK(p3.best_upper == 3);

  const auto none = sum_index_bounds(empty_graph(4));
  CHECK(none.best_lower == 0);
  CHECK(none.best_upper == 0);
  CHECK(none.lower_method == "edgeless");
}

TEST_CASE("bound chain on random graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 9;
    std::vector<Edge> e;
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        if (rng() % 3 == 0) e.push_back({i, j});
      }
    }
    const Graph g(n, e);
    if (g.size() == 0) continue;
    const auto r = sum_index_bounds(g);
    CHECK(r.max_degree <= r.chromatic_index_lower);
    CHECK(static_cast<long long>(r.chromatic_index_lower) <= r.best_lower);
    CHECK(r.best_lower <= r.best_upper);
    CHECK(r.best_upper == static_cast<long long>(2 * n - 3));

    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(haslegrave_bound(relabel(g, perm)) == haslegrave_bound(g));
  }
}

TEST_CASE("closed-form catalog") {
  CHECK(known_formula({FamilyKind::complete, {5}}) == 7);
  CHECK(known_formula({FamilyKind::cluster, {3, 3}}) == 4);
  CHECK(known_formula({FamilyKind::cluster, {2, 4}}) == 6);
  CHECK(known_formula({FamilyKind::cluster, {1, 4}}) == 5);
  CHECK(known_formula({FamilyKind::cluster, {7, 2}}) == 1);
  CHECK(known_formula({FamilyKind::complete_multipartite, {2, 1, 1}}) == 4);
  CHECK(known_formula({FamilyKind::cycle, {11}}) == 3);
  CHECK(known_formula({FamilyKind::hypercube, {4}}) == 7);
  CHECK_FALSE(known_formula({FamilyKind::path, {4}}));
  CHECK_FALSE(known_formula({FamilyKind::cluster, {2, 5}}));
  for (std::int64_t m = 1; m <= 8; ++m) {
    for (std::int64_t n = 1; n <= 8; ++n) {
      CHECK(known_formula({FamilyKind::complete_multipartite, {m, n}}) ==
            known_formula({FamilyKind::complete_bipartite, {m, n}}));
    }
  }
}

TEST_CASE("cluster formulas satisfy their binomial sandwich") {
  for (long long n = 1; n <= 200; ++n) {
    const long long s3 = cluster3_sum_index(n);
    CHECK(binomial(s3 - 1, 3) < n);
    CHECK(n <= binomial(s3, 3));
    const long long s4 = cluster4_sum_index(n);
    CHECK(binomial(s4 / 2, 3) + binomial((s4 + 1) / 2, 3) >= n);
    CHECK(binomial((s4 - 1) / 2, 3) + binomial(s4 / 2, 3) < n);
  }
  // s = 10 is the largest value reached by n <= 20.
  CHECK(cluster4_sum_index(20) == 10);
  CHECK(cluster4_sum_index(21) == 11);
}
