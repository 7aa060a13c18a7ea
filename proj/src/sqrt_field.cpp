#include "sumdex/sqrt_field.hpp"

#include "sumdex/errors.hpp"

#include <boost/multiprecision/integer.hpp>

namespace sumdex {

SurdBasis::SurdBasis(std::vector<std::uint64_t> radicands)
    : radicands_(std::move(radicands)), cache_(radicands_.size()) {}

const BigInt& SurdBasis::floor_scaled(std::size_t j, unsigned precision_bits) const {
  auto& row = cache_[j];
  if (row.size() <= precision_bits) row.resize(precision_bits + 1);
  BigInt& slot = row[precision_bits];
  if (slot == 0) {
    BigInt radicand = BigInt(radicands_[j]) << (2 * precision_bits);
    slot = boost::multiprecision::sqrt(radicand);
  }
  return slot;
}

SurdBasis::Interval SurdBasis::enclose(const std::vector<std::int64_t>& coeff, unsigned precision_bits) const {
  if (coeff.size() != radicands_.size()) throw InputError("coefficient vector has wrong dimension");
  Interval out{0, 0};
  for (std::size_t j = 0; j < coeff.size(); ++j) {
    if (coeff[j] == 0) continue;
    const BigInt term = BigInt(coeff[j]) * floor_scaled(j, precision_bits);
    out.lo += term;
    out.hi += term;
    // sqrt(r) 2^P lies in [S, S + 1).
    if (coeff[j] > 0) out.hi += coeff[j];
    else out.lo += coeff[j];
  }
  return out;
}

BigInt SurdBasis::round_scaled(std::size_t j, unsigned m) const {
  // round(y) = floor((floor(2y) + 1) / 2) for irrational y.
  const BigInt twice = floor_scaled(j, m + 1);
  return (twice + 1) / 2;
}

GapBounds min_pairwise_gap(const SurdBasis& basis, const std::vector<std::vector<std::int64_t>>& values,
                           unsigned start_precision) {
  if (values.size() < 2) throw InputError("gap needs at least two values");
  for (unsigned precision = start_precision;; precision *= 2) {
    if (precision > 1u << 16) throw ValidationError("gap refinement did not converge");
    GapBounds out;
    out.precision_bits = precision;
    bool first = true;
    bool settled = true;
    for (std::size_t a = 0; a < values.size() && settled; ++a) {
      for (std::size_t b = a + 1; b < values.size(); ++b) {
        std::vector<std::int64_t> diff(values[a].size());
        bool zero = true;
        for (std::size_t j = 0; j < diff.size(); ++j) {
          diff[j] = values[a][j] - values[b][j];
          zero = zero && diff[j] == 0;
        }
        if (zero) throw ValidationError("two symbolic values coincide");
        auto iv = basis.enclose(diff, precision);
        BigInt lo, hi;
        if (iv.lo > 0) {
          lo = iv.lo;
          hi = iv.hi;
        } else if (iv.hi < 0) {
          lo = -iv.hi;
          hi = -iv.lo;
        } else {
          settled = false;
          break;
        }
        if (first || lo < out.lo) out.lo = lo;
        if (first || hi < out.hi) out.hi = hi;
        first = false;
      }
    }
    if (settled) return out;
  }
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t c = 2; primes.size() < count; ++c) {
    bool prime = true;
    for (auto p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

}  // namespace sumdex
