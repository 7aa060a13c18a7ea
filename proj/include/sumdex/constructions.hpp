#pragma once

#include "sumdex/graph.hpp"
#include "sumdex/labeling.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace sumdex {

// Every construction recomputes its sum count and throws ValidationError when it
// does not match the claimed value.
struct ConstructionResult {
  Graph graph;
  Labeling labeling;
  long long claimed = 0;
  long long achieved = 0;
  // Construction parameters worth reporting (multiplier, sum count, ...).
  std::vector<std::pair<std::string, std::string>> details;
};

// Parts are sorted non-increasing first. Part 1 gets 1..n1, part 2 gets N-n2+1..N,
// the remaining parts get n1+1..N-n2 in vertex order.
ConstructionResult label_multipartite(std::vector<std::size_t> parts);

// L_{n1} v L_{n2} v K_{n3} v ...; part 2 is ranked N, N-1, ... along v_1, v_2, ...
ConstructionResult label_join_family(std::vector<std::size_t> parts);

// Recursive labeling of Q_n; ranks form a permutation of 1..2^n with 2n - 1 sums.
ConstructionResult label_hypercube(std::size_t n);

// The sum set the hypercube labeling must produce: {2^n+1} and 2^n+1 +- 2^i, i <= n-2.
std::vector<BigInt> hypercube_sum_set(std::size_t n);

// Ranks of K_4 vertices v1..v4 from opposite-edge sum pairs (a_i, b_i):
//   v2v3 = a3, v2v4 = a2, v3v4 = a1, v1v2 = b1, v1v3 = b2, v1v4 = b3.
// Throws InputError on unequal totals, odd numerators or coinciding ranks.
std::array<BigInt, 4> k4_ranks_from_sums(const std::array<BigInt, 3>& a, const std::array<BigInt, 3>& b);

// nK_k for k in {2, 3, 4}.
ConstructionResult label_cluster(std::size_t copies, std::size_t k);

// Ranks 1..n, targets n+1, n+2, n, n+3, n-1, ... (N of them); every rank pair
// hitting a target becomes an edge.
ConstructionResult extremal_construction(std::size_t n, std::size_t sums);

}  // namespace sumdex
