#pragma once

#include "sumdex/graph.hpp"

#include <cstdint>
#include <vector>

namespace sumdex {

inline constexpr std::size_t kMaxEnumerationOrder = 7;

// Canonical relabeling for n <= 7: vertices are grouped by degree (descending) and the
// adjacency code is maximized over permutations inside each degree group. Isomorphic
// graphs get identical results.
struct CanonicalForm {
  Graph graph;
  std::uint32_t code = 0;  // upper-triangle bits, pair (0,1) most significant
};
CanonicalForm canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// One canonical representative per isomorphism class on n vertices, ordered by
// (edge count, code). Throws InputError for n > 7.
std::vector<Graph> enumerate_graphs(std::size_t n);

}  // namespace sumdex
