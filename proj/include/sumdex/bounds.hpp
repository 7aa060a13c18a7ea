#pragma once

#include "sumdex/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace sumdex {

inline constexpr std::uint64_t kDefaultChromaticBudget = 1'000'000;

// max over 1 <= k <= n-1 of delta_k + delta_{k+1} - k on the ascending degree sequence.
// Throws InputError when n < 2.
long long haslegrave_bound(const Graph& g);

// lower is always Delta. When `exact`, chi' == upper (Delta or Delta + 1).
struct ChromaticIndex {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool exact = false;
  std::uint64_t nodes = 0;

  std::size_t proven_lower() const noexcept { return exact ? upper : lower; }
};

// Decides chi' in {Delta, Delta+1} by a backtracking Delta-edge-colouring search.
// Budget exhaustion degrades to (Delta, Delta+1, inexact).
ChromaticIndex chromatic_index(const Graph& g, std::uint64_t node_budget = kDefaultChromaticBudget);

struct BoundReport {
  std::size_t max_degree = 0;
  std::size_t chromatic_index_lower = 0;
  std::size_t chromatic_index_upper = 0;
  bool chromatic_index_exact = false;
  long long haslegrave = 0;
  long long trivial_upper = 0;
  long long best_lower = 0;
  long long best_upper = 0;
  std::string lower_method;  // "chromatic_index", "haslegrave", "max_degree", "edgeless", "one_edge"
  std::string upper_method;  // "complete_graph" (2n - 3) or "edgeless"
};

// Edgeless graphs report best_lower = best_upper = 0.
BoundReport sum_index_bounds(const Graph& g,
                             std::uint64_t chromatic_budget = kDefaultChromaticBudget);

// Closed-form sum index for catalog families, or nullopt when the family is not
// covered (path, ladder, threshold_tail, join_family, cluster with k > 4, ...).
std::optional<long long> known_formula(const FamilySpec& spec);

// Smallest s with C(s-1,3) < copies <= C(s,3).
long long cluster3_sum_index(long long copies);
// Smallest s with C(floor(s/2),3) + C(ceil(s/2),3) >= copies.
long long cluster4_sum_index(long long copies);

long long binomial(long long a, long long b);

}  // namespace sumdex
