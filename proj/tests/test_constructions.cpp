#include <doctest.h>

#include "oracles.hpp"
#include "sumdex/bounds.hpp"
#include "sumdex/constructions.hpp"
#include "sumdex/errors.hpp"
#include "sumdex/extremal.hpp"
#include "sumdex/isomorphism.hpp"
#include "sumdex/sqrt_field.hpp"

#include <map>
#include <random>

using namespace sumdex;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

std::vector<long long> small(const Labeling& f) {
  std::vector<long long> out;
  for (const auto& r : f.ranks) out.push_back(static_cast<long long>(r));
  return out;
}

}  // namespace

TEST_CASE("multipartite labeling") {
  const auto k23 = label_multipartite({2, 3});
  CHECK(k23.graph == complete_multipartite({3, 2}));
  CHECK(k23.achieved == 4);
  CHECK(small(k23.labeling) == std::vector<long long>{1, 2, 3, 4, 5});

  const auto k211 = label_multipartite({2, 1, 1});
  CHECK(k211.achieved == 4);
  const auto sums = rank_sums(k211.graph, k211.labeling).sums;
  CHECK(sums.front() >= 4);
  CHECK(sums.back() <= 7);  // [n1 + 2, 2N - n2]

  CHECK(label_multipartite({1, 1}).achieved == 1);
  CHECK_THROWS_AS(label_multipartite({4}), InputError);
}

TEST_CASE("multipartite labeling matches the closed form on random parts") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::size_t> parts;
    std::size_t total = 0;
    const std::size_t k = 2 + rng() % 5;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t p = 1 + rng() % 10;
      if (total + p > 50) break;
      parts.push_back(p);
      total += p;
    }
    if (parts.size() < 2) continue;
    const auto r = label_multipartite(parts);
    FamilySpec spec{FamilyKind::complete_multipartite, {parts.begin(), parts.end()}};
    CHECK(r.achieved == *known_formula(spec));
  }
}

TEST_CASE("join family labeling") {
  // L_2 has no edge, so L_2 v L_2 is a 4-cycle with 3 sums.
  const auto a = label_join_family({2, 2});
  CHECK(a.graph.size() == 4);
  CHECK(a.achieved == 3);
  CHECK(small(a.labeling) == std::vector<long long>{1, 2, 4, 3});

  const auto b = label_join_family({3, 2});
  CHECK(b.claimed == 4);
  CHECK(b.achieved == 4);
  CHECK(oracle::sum_count(b.graph, small(b.labeling)) == 4);

  CHECK(label_join_family({1, 1}).achieved == 1);
  CHECK_THROWS_AS(label_join_family({3}), InputError);
}

TEST_CASE("join family labeling on many part vectors") {
  for (std::size_t n1 = 1; n1 <= 6; ++n1) {
    for (std::size_t n2 = 1; n2 <= n1; ++n2) {
      for (std::size_t n3 = 0; n3 <= n2; ++n3) {
        std::vector<std::size_t> parts{n1, n2};
        if (n3) parts.push_back(n3);
        const auto r = label_join_family(parts);
        CHECK(r.achieved == r.claimed);
      }
    }
  }
}

TEST_CASE("hypercube labeling") {
  const auto q1 = label_hypercube(1);
  CHECK(small(q1.labeling) == std::vector<long long>{1, 2});
  CHECK(rank_sums(q1.graph, q1.labeling).sums == big({3}));

  const auto q2 = label_hypercube(2);
  CHECK(small(q2.labeling) == std::vector<long long>{1, 4, 3, 2});
  CHECK(rank_sums(q2.graph, q2.labeling).sums == big({4, 5, 6}));

  const auto q3 = label_hypercube(3);
  CHECK(rank_sums(q3.graph, q3.labeling).sums == big({7, 8, 9, 10, 11}));
  CHECK(q3.achieved == 5);
  CHECK(hypercube_sum_set(3) == big({7, 8, 9, 10, 11}));
}

TEST_CASE("hypercube labeling up to dimension 10") {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto r = label_hypercube(n);
    CHECK(r.achieved == static_cast<long long>(2 * n - 1));
    CHECK(rank_sums(r.graph, r.labeling).sums == hypercube_sum_set(n));
    auto ranks = small(r.labeling);
    std::sort(ranks.begin(), ranks.end());
    for (std::size_t i = 0; i < ranks.size(); ++i) CHECK(ranks[i] == static_cast<long long>(i + 1));
    const long long half = 1LL << (n - 1);
    for (const Edge& e : r.graph.edges()) {
      CHECK((r.labeling.ranks[e.u] <= half) != (r.labeling.ranks[e.v] <= half));
    }
  }
}

TEST_CASE("K_4 ranks from opposite-edge sums") {
  const auto f = k4_ranks_from_sums({3, 4, 5}, {7, 6, 5});
  CHECK(f == std::array<BigInt, 4>{4, 3, 2, 1});
  CHECK(k4_ranks_from_sums({10, 12, 14}, {18, 16, 14}) == std::array<BigInt, 4>{10, 8, 6, 4});
  CHECK_THROWS_AS(k4_ranks_from_sums({6, 6, 6}, {6, 6, 6}), InputError);
  CHECK_THROWS_AS(k4_ranks_from_sums({3, 4, 5}, {7, 6, 4}), InputError);
  CHECK_THROWS_AS(k4_ranks_from_sums({3, 4, 6}, {7, 6, 4}), InputError);
}

TEST_CASE("K_4 rank recovery round trip") {
  std::mt19937_64 rng(9);
  const Graph k4 = complete_graph(4);
  for (int trial = 0; trial < 500; ++trial) {
    std::array<long long, 4> f{};
    for (auto& x : f) x = static_cast<long long>(rng() % 1000) - 500;
    if (std::set<long long>(f.begin(), f.end()).size() < 4) continue;
    const std::array<BigInt, 3> a{f[2] + f[3], f[1] + f[3], f[1] + f[2]};
    const std::array<BigInt, 3> b{f[0] + f[1], f[0] + f[2], f[0] + f[3]};
    const auto back = k4_ranks_from_sums(a, b);
    for (int i = 0; i < 4; ++i) CHECK(back[i] == f[i]);
    std::multiset<BigInt> edge_sums, expected{a.begin(), a.end()};
    expected.insert(b.begin(), b.end());
    const Labeling lab{{back.begin(), back.end()}};
    for (const Edge& e : k4.edges()) edge_sums.insert(lab.ranks[e.u] + lab.ranks[e.v]);
    CHECK(edge_sums == expected);
  }
}

TEST_CASE("cluster labelings") {
  const auto one = label_cluster(1, 4);
  CHECK(one.achieved == 5);
  const auto two = label_cluster(2, 4);
  CHECK(two.achieved == 6);
  CHECK(std::set<BigInt>(two.labeling.ranks.begin(), two.labeling.ranks.end()).size() == 8);
  const auto tri = label_cluster(4, 3);
  CHECK(tri.achieved == 4);
  CHECK(std::set<BigInt>(tri.labeling.ranks.begin(), tri.labeling.ranks.end()).size() == 12);
  CHECK(label_cluster(5, 2).achieved == 1);
  CHECK_THROWS_AS(label_cluster(2, 5), InputError);
  CHECK_THROWS_AS(label_cluster(0, 3), InputError);
}

TEST_CASE("nK_4 labelings up to s = 10") {
  for (std::size_t n = 1; n <= 20; ++n) {
    const auto r = label_cluster(n, 4);
    CAPTURE(n);
    CHECK(r.achieved == cluster4_sum_index(static_cast<long long>(n)));
    CHECK_FALSE(validate_labeling(r.graph, r.labeling));
    // Opposite edges of every copy add up to one common total, shared by all copies.
    const auto& f = r.labeling.ranks;
    const BigInt total = f[0] + f[1] + f[2] + f[3];
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t o = 4 * c;
      CHECK((f[o] + f[o + 1]) + (f[o + 2] + f[o + 3]) == total);
      CHECK((f[o] + f[o + 2]) + (f[o + 1] + f[o + 3]) == total);
      CHECK((f[o] + f[o + 3]) + (f[o + 1] + f[o + 2]) == total);
    }
  }
}

TEST_CASE("nK_3 labelings up to n = 20") {
  for (std::size_t n = 1; n <= 20; ++n) {
    CHECK(label_cluster(n, 3).achieved == cluster3_sum_index(static_cast<long long>(n)));
  }
}

TEST_CASE("certified square roots") {
  const SurdBasis basis(first_primes(3));  // sqrt 2, sqrt 3, sqrt 5
  CHECK(basis.round_scaled(0, 0) == 1);
  CHECK(basis.round_scaled(0, 10) == 1448);  // 1024 sqrt 2 = 1448.15
  CHECK(basis.round_scaled(2, 3) == 18);     // 8 sqrt 5 = 17.89
  const auto iv = basis.enclose({1, -1, 0}, 40);  // sqrt 2 - sqrt 3 < 0
  CHECK(iv.hi < 0);
  CHECK(iv.lo <= iv.hi);
  CHECK(first_primes(6) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13});
  const auto gap = min_pairwise_gap(basis, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  // min gap is sqrt 3 - sqrt 2 = 0.3178...
  const double scale = std::ldexp(1.0, static_cast<int>(gap.precision_bits));
  CHECK(static_cast<double>(gap.lo) / scale == doctest::Approx(0.31783724).epsilon(1e-6));
  CHECK_THROWS_AS(min_pairwise_gap(basis, {{1, 0, 0}, {1, 0, 0}}), ValidationError);
}

TEST_CASE("extremal construction") {
  const auto a = extremal_construction(6, 3);
  CHECK(a.graph.size() == 7);
  CHECK(rank_sums(a.graph, a.labeling).sums == big({6, 7, 8}));
  CHECK(isomorphic(a.graph, ladder(6)));

  CHECK(extremal_construction(4, 3).graph.size() == 4);
  CHECK(extremal_construction(5, 3).graph.size() == 6);
  CHECK(extremal_construction(4, 5).graph == complete_graph(4));
  CHECK_THROWS_AS(extremal_construction(4, 6), InputError);
  CHECK_THROWS_AS(extremal_construction(4, 0), InputError);
}

TEST_CASE("extremal construction edge counts for n <= 30") {
  for (long long n = 2; n <= 30; ++n) {
    for (long long N = 1; N <= 2 * n - 3; ++N) {
      const auto r = extremal_construction(static_cast<std::size_t>(n), static_cast<std::size_t>(N));
      CHECK(static_cast<long long>(r.graph.size()) == lbeg_count(n, N));
      CHECK(r.achieved <= N);
    }
  }
}
