#pragma once

#include "sumdex/bigint.hpp"
#include "sumdex/graph.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sumdex {

using GroupElement = std::vector<std::int64_t>;

// Z_{m_1} x ... x Z_{m_k}. Elements are also addressed by a mixed-radix index with
// the first coordinate most significant, so index order is lexicographic tuple order.
class AbelianGroup {
 public:
  // Throws InputError unless every modulus is >= 2 and the order is at most 2^20.
  explicit AbelianGroup(std::vector<std::int64_t> moduli);

  // "5,5" -> Z_5 x Z_5.
  static AbelianGroup parse(const std::string& spec);

  const std::vector<std::int64_t>& moduli() const noexcept { return moduli_; }
  std::size_t order() const noexcept { return order_; }
  std::string name() const;

  bool contains(const GroupElement& x) const;
  std::size_t index_of(const GroupElement& x) const;  // throws InputError if not an element
  GroupElement element(std::size_t index) const;
  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  std::size_t add_index(std::size_t a, std::size_t b) const;

 private:
  std::vector<std::int64_t> moduli_;
  std::size_t order_ = 1;
  std::vector<std::uint32_t> table_;  // order^2 addition table for small groups
};

// Sumset primitives over Z. Inputs are treated as sets; results are sorted and unique.
std::vector<BigInt> sumset(const std::vector<BigInt>& x, const std::vector<BigInt>& y);
std::vector<BigInt> restricted_sumset(const std::vector<BigInt>& x);
std::vector<BigInt> partial_sumset(const std::vector<BigInt>& x, const std::vector<BigInt>& y,
                                   const std::vector<std::pair<BigInt, BigInt>>& pairs);

// Same primitives inside a finite group. Results are in element-index order.
std::vector<GroupElement> sumset(const AbelianGroup& a, const std::vector<GroupElement>& x,
                                 const std::vector<GroupElement>& y);
std::vector<GroupElement> restricted_sumset(const AbelianGroup& a, const std::vector<GroupElement>& x);
std::vector<GroupElement> partial_sumset(const AbelianGroup& a, const std::vector<GroupElement>& x,
                                         const std::vector<GroupElement>& y,
                                         const std::vector<std::pair<GroupElement, GroupElement>>& pairs);

inline constexpr std::uint64_t kDefaultGroupBudget = 200'000'000;

enum class GroupStatus { exact, unknown };

struct GroupSumIndex {
  GroupStatus status = GroupStatus::unknown;
  long long value = 0;  // exact value, or best found when unknown
  long long lower = 0;  // max degree when unknown
  std::vector<GroupElement> witness;  // witness[v] is the element on vertex v
  std::uint64_t nodes = 0;
};

// Minimum number of distinct sums f(u)+f(v) over injective f: V -> A. The first
// search vertex is pinned to 0; complete graphs reduce to subsets containing 0.
GroupSumIndex group_sum_index(const Graph& g, const AbelianGroup& a,
                              std::uint64_t node_budget = kDefaultGroupBudget);

struct RestrictedMinimum {
  GroupStatus status = GroupStatus::unknown;
  long long value = 0;
  std::vector<GroupElement> witness;  // lexicographically first minimizing subset
  std::uint64_t subsets_evaluated = 0;  // subsets whose sumset was completed
  std::uint64_t subsets_covered = 0;    // evaluated plus those cut off as already worse
  std::uint64_t subsets_total = 0;      // C(|A|, m)
};

// Minimum of |X +^ X| over all m-subsets X of A, scanning every subset in
// lexicographic order (no symmetry reduction). With prune = false every subset's
// sumset is computed in full.
RestrictedMinimum min_restricted_sumset_complete(const AbelianGroup& a, std::size_t m,
                                                 std::uint64_t node_budget = kDefaultGroupBudget,
                                                 bool prune = true);

struct Zp2Construction {
  std::int64_t p = 0;
  std::vector<GroupElement> subset;
  std::vector<GroupElement> sums;
  long long achieved = 0;
};

// X = {(0,0)} u {(1,i)} u {((p+1)/2, j)} in Z_p x Z_p; validates |X +^ X| = 4p and the
// exact sum set. Throws InputError unless p is a prime >= 5.
Zp2Construction zp2_construction(std::int64_t p);

bool is_prime(std::int64_t p);

}  // namespace sumdex
