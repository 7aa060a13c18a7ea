#pragma once

#include "sumdex/bigint.hpp"
#include "sumdex/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sumdex {

// Vertex -> integer rank. ranks[v] is the rank of vertex v.
struct Labeling {
  std::vector<BigInt> ranks;

  std::size_t size() const noexcept { return ranks.size(); }
  friend bool operator==(const Labeling&, const Labeling&) = default;
};

// The set of distinct rank sums sigma(G, f), sorted ascending.
struct SumSignature {
  std::vector<BigInt> sums;

  std::size_t count() const noexcept { return sums.size(); }
  friend bool operator==(const SumSignature&, const SumSignature&) = default;
};

struct LabelingViolation {
  enum class Kind { domain_mismatch, duplicate_rank };
  Kind kind;
  // duplicate_rank: the two vertices sharing a rank (first occurrence pair).
  Vertex first = 0;
  Vertex second = 0;
  std::string message;
};

// Empty optional means the labeling is a valid injective map V(g) -> Z.
std::optional<LabelingViolation> validate_labeling(const Graph& g, const Labeling& f);

// Throws InputError carrying the violation message when f is not valid for g.
SumSignature rank_sums(const Graph& g, const Labeling& f);

// rank'(v) = a * rank(v) + b. Throws InputError when a == 0.
Labeling affine_map(const Labeling& f, const BigInt& a, const BigInt& b);

Labeling labeling_from(std::initializer_list<long long> ranks);
Labeling identity_labeling(std::size_t n, long long first = 1);

}  // namespace sumdex
