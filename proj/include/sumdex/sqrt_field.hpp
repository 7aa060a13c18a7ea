#pragma once

#include "sumdex/bigint.hpp"

#include <cstdint>
#include <vector>

namespace sumdex {

// Real numbers sum_j c_j * sqrt(r_j) with integer c_j over a fixed list of squarefree
// radicands (distinct primes here, so distinct coefficient vectors are distinct reals).
// Evaluation is certified: sqrt(r_j) * 2^P is bracketed by integer square roots.
class SurdBasis {
 public:
  explicit SurdBasis(std::vector<std::uint64_t> radicands);

  std::size_t dimension() const noexcept { return radicands_.size(); }
  const std::vector<std::uint64_t>& radicands() const noexcept { return radicands_; }

  // Closed interval [lo, hi] containing value * 2^precision_bits.
  struct Interval {
    BigInt lo;
    BigInt hi;
  };
  Interval enclose(const std::vector<std::int64_t>& coeff, unsigned precision_bits) const;

  // Nearest integer to scale_pow2 powers of two times sqrt(radicand j): round(2^m sqrt(r_j)).
  BigInt round_scaled(std::size_t j, unsigned m) const;

 private:
  const BigInt& floor_scaled(std::size_t j, unsigned precision_bits) const;

  std::vector<std::uint64_t> radicands_;
  mutable std::vector<std::vector<BigInt>> cache_;  // cache_[j][P] = floor(sqrt(r_j) 2^P)
};

// Certified lower/upper bounds (scaled by 2^P) on min |x_a - x_b| over all pairs of the
// given values, refined until every pairwise difference has a definite sign.
struct GapBounds {
  BigInt lo;
  BigInt hi;
  unsigned precision_bits = 0;
};
GapBounds min_pairwise_gap(const SurdBasis& basis, const std::vector<std::vector<std::int64_t>>& values,
                           unsigned start_precision = 64);

// First `count` primes.
std::vector<std::uint64_t> first_primes(std::size_t count);

}  // namespace sumdex
