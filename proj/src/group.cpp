#include "sumdex/group.hpp"

#include "sumdex/bounds.hpp"
#include "sumdex/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sumdex {
namespace {

constexpr std::size_t kMaxGroupOrder = std::size_t{1} << 20;
constexpr std::size_t kMaxTableOrder = 2048;

std::vector<BigInt> as_set(std::vector<BigInt> x) {
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  return x;
}

std::vector<std::size_t> index_set(const AbelianGroup& a, const std::vector<GroupElement>& x) {
  std::vector<std::size_t> out;
  out.reserve(x.size());
  for (const auto& e : x) out.push_back(a.index_of(e));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GroupElement> elements_of(const AbelianGroup& a, const std::vector<bool>& mark) {
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < mark.size(); ++i) {
    if (mark[i]) out.push_back(a.element(i));
  }
  return out;
}

// Distinct-sum bookkeeping with multiplicities so additions can be undone.
struct SumCounter {
  std::vector<std::uint32_t> mult;
  long long distinct = 0;

  explicit SumCounter(std::size_t order) : mult(order, 0) {}
  void add(std::size_t s) { distinct += (mult[s]++ == 0); }
  void remove(std::size_t s) { distinct -= (--mult[s] == 0); }
};

}  // namespace

AbelianGroup::AbelianGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw InputError("group needs at least one modulus");
  for (auto m : moduli_) {
    if (m < 2) throw InputError("every modulus must be >= 2");
    if (order_ > kMaxGroupOrder / static_cast<std::size_t>(m)) throw InputError("group order too large");
    order_ *= static_cast<std::size_t>(m);
  }
  if (order_ <= kMaxTableOrder) {
    table_.resize(order_ * order_);
    for (std::size_t i = 0; i < order_; ++i) {
      const auto x = element(i);
      for (std::size_t j = 0; j < order_; ++j) table_[i * order_ + j] = static_cast<std::uint32_t>(index_of(add(x, element(j))));
    }
  }
}

AbelianGroup AbelianGroup::parse(const std::string& spec) {
  std::vector<std::int64_t> moduli;
  std::istringstream in(spec);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t used = 0;
    long long m = 0;
    try {
      m = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw InputError("bad group modulus '" + part + "'");
    }
    if (used != part.size()) throw InputError("bad group modulus '" + part + "'");
    moduli.push_back(m);
  }
  return AbelianGroup(std::move(moduli));
}

std::string AbelianGroup::name() const {
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) out += (i ? " x Z_" : "Z_") + std::to_string(moduli_[i]);
  return out;
}

bool AbelianGroup::contains(const GroupElement& x) const {
  if (x.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] >= moduli_[i]) return false;
  }
  return true;
}

std::size_t AbelianGroup::index_of(const GroupElement& x) const {
  if (!contains(x)) throw InputError("tuple is not an element of " + name());
  std::size_t idx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) idx = idx * static_cast<std::size_t>(moduli_[i]) + static_cast<std::size_t>(x[i]);
  return idx;
}

GroupElement AbelianGroup::element(std::size_t index) const {
  GroupElement x(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    const auto m = static_cast<std::size_t>(moduli_[i]);
    x[i] = static_cast<std::int64_t>(index % m);
    index /= m;
  }
  return x;
}

GroupElement AbelianGroup::add(const GroupElement& x, const GroupElement& y) const {
  GroupElement z(moduli_.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = (x[i] + y[i]) % moduli_[i];
  return z;
}

std::size_t AbelianGroup::add_index(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * order_ + b];
  return index_of(add(element(a), element(b)));
}

std::vector<BigInt> sumset(const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
  if (x.empty() || y.empty()) throw InputError("sumset needs nonempty sets");
  std::vector<BigInt> out;
  for (const auto& a : x) {
    for (const auto& b : y) out.push_back(a + b);
  }
  return as_set(std::move(out));
}

std::vector<BigInt> restricted_sumset(const std::vector<BigInt>& x) {
  const auto s = as_set(x);
  if (s.size() < 2) throw InputError("restricted sumset needs at least two elements");
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) out.push_back(s[i] + s[j]);
  }
  return as_set(std::move(out));
}

std::vector<BigInt> partial_sumset(const std::vector<BigInt>& x, const std::vector<BigInt>& y,
                                   const std::vector<std::pair<BigInt, BigInt>>& pairs) {
  const auto sx = as_set(x), sy = as_set(y);
  std::vector<BigInt> out;
  for (const auto& [a, b] : pairs) {
    if (!std::binary_search(sx.begin(), sx.end(), a) || !std::binary_search(sy.begin(), sy.end(), b)) {
      throw InputError("pair (" + to_decimal(a) + ", " + to_decimal(b) + ") is outside X x Y");
    }
    out.push_back(a + b);
  }
  return as_set(std::move(out));
}

std::vector<GroupElement> sumset(const AbelianGroup& a, const std::vector<GroupElement>& x,
                                 const std::vector<GroupElement>& y) {
  if (x.empty() || y.empty()) throw InputError("sumset needs nonempty sets");
  const auto ix = index_set(a, x), iy = index_set(a, y);
  std::vector<bool> mark(a.order(), false);
  for (auto i : ix) {
    for (auto j : iy) mark[a.add_index(i, j)] = true;
  }
  return elements_of(a, mark);
}

std::vector<GroupElement> restricted_sumset(const AbelianGroup& a, const std::vector<GroupElement>& x) {
  const auto ix = index_set(a, x);
  if (ix.size() < 2) throw InputError("restricted sumset needs at least two elements");
  std::vector<bool> mark(a.order(), false);
  for (std::size_t i = 0; i < ix.size(); ++i) {
    for (std::size_t j = i + 1; j < ix.size(); ++j) mark[a.add_index(ix[i], ix[j])] = true;
  }
  return elements_of(a, mark);
}

std::vector<GroupElement> partial_sumset(const AbelianGroup& a, const std::vector<GroupElement>& x,
                                         const std::vector<GroupElement>& y,
                                         const std::vector<std::pair<GroupElement, GroupElement>>& pairs) {
  const auto ix = index_set(a, x), iy = index_set(a, y);
  std::vector<bool> mark(a.order(), false);
  for (const auto& [p, q] : pairs) {
    const auto i = a.index_of(p), j = a.index_of(q);
    if (!std::binary_search(ix.begin(), ix.end(), i) || !std::binary_search(iy.begin(), iy.end(), j)) {
      throw InputError("pair is outside X x Y");
    }
    mark[a.add_index(i, j)] = true;
  }
  return elements_of(a, mark);
}

namespace {

class GroupSearch {
 public:
  GroupSearch(const Graph& g, const AbelianGroup& a, std::uint64_t budget)
      : g_(g), a_(a), budget_(budget), counter_(a.order()), used_(a.order(), false) {
    const std::size_t n = g.order();
    adj_.resize(n);
    for (const Edge& e : g.edges()) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    // Most-constrained order: each next vertex has the most already-placed neighbours.
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t pick = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (pick == n || links[v] > links[pick] || (links[v] == links[pick] && adj_[v].size() > adj_[pick].size())) pick = v;
      }
      placed[pick] = true;
      order_.push_back(pick);
      for (auto w : adj_[pick]) ++links[w];
    }
    value_.assign(n, 0);
    position_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) position_[order_[i]] = i;
    best_ = static_cast<long long>(g.size()) + 1;
    floor_ = static_cast<long long>(g.max_degree());
  }

  GroupSumIndex run() {
    GroupSumIndex out;
    // Translation pins the first vertex in search order to the identity.
    used_[0] = true;
    value_[order_[0]] = 0;
    complete_ = dfs(1);
    out.nodes = nodes_;
    out.status = complete_ ? GroupStatus::exact : GroupStatus::unknown;
    out.value = best_;
    out.lower = complete_ ? best_ : floor_;
    for (auto idx : best_values_) out.witness.push_back(a_.element(idx));
    return out;
  }

 private:
  // Returns false when the budget ran out.
  bool dfs(std::size_t depth) {
    if (depth == order_.size()) {
      if (counter_.distinct < best_) {
        best_ = counter_.distinct;
        best_values_ = value_;
      }
      return true;
    }
    const auto v = order_[depth];
    for (std::size_t x = 0; x < a_.order(); ++x) {
      if (used_[x]) continue;
      if (++nodes_ > budget_) return false;
      used_[x] = true;
      value_[v] = x;
      for (auto w : adj_[v]) {
        if (position_[w] < depth) counter_.add(a_.add_index(x, value_[w]));
      }
      bool ok = true;
      if (counter_.distinct < best_) ok = dfs(depth + 1);
      for (auto w : adj_[v]) {
        if (position_[w] < depth) counter_.remove(a_.add_index(x, value_[w]));
      }
      used_[x] = false;
      if (!ok) return false;
      if (best_ <= floor_) return true;
    }
    return true;
  }

  const Graph& g_;
  const AbelianGroup& a_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  SumCounter counter_;
  std::vector<bool> used_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::size_t> order_, position_, value_, best_values_;
  long long best_ = 0, floor_ = 0;
  bool complete_ = false;
};

// Lexicographic m-subset scan of {0..order-1}, optionally forced to contain 0.
class SubsetScan {
 public:
  SubsetScan(const AbelianGroup& a, std::size_t m, bool pin_zero, std::uint64_t budget, bool prune)
      : a_(a), m_(m), pin_zero_(pin_zero), prune_(prune), budget_(budget), counter_(a.order()) {}

  RestrictedMinimum run() {
    RestrictedMinimum out;
    const auto order = static_cast<long long>(a_.order());
    const auto m = static_cast<long long>(m_);
    out.subsets_total = static_cast<std::uint64_t>(pin_zero_ ? binomial(order - 1, m - 1) : binomial(order, m));
    bool complete;
    if (pin_zero_) {
      chosen_.push_back(0);
      complete = dfs(1);
    } else {
      complete = dfs(0);
    }
    out.status = complete ? GroupStatus::exact : GroupStatus::unknown;
    out.value = best_;
    for (auto idx : best_set_) out.witness.push_back(a_.element(idx));
    out.subsets_evaluated = evaluated_;
    out.subsets_covered = covered_;
    return out;
  }

 private:
  bool dfs(std::size_t depth) {
    if (depth == m_) {
      ++evaluated_;
      ++covered_;
      if (best_set_.empty() || counter_.distinct < best_) {
        best_ = counter_.distinct;
        best_set_ = chosen_;
      }
      return true;
    }
    const std::size_t start = chosen_.empty() ? 0 : chosen_.back() + 1;
    const std::size_t need = m_ - depth;
    for (std::size_t x = start; x + need <= a_.order(); ++x) {
      if (++nodes_ > budget_) return false;
      for (auto y : chosen_) counter_.add(a_.add_index(x, y));
      chosen_.push_back(x);
      bool ok = true;
      if (prune_ && !best_set_.empty() && counter_.distinct >= best_) {
        // Adding elements never shrinks the sumset, so the whole subtree is no better.
        covered_ += static_cast<std::uint64_t>(
            binomial(static_cast<long long>(a_.order() - x - 1), static_cast<long long>(need - 1)));
      } else {
        ok = dfs(depth + 1);
      }
      chosen_.pop_back();
      for (auto y : chosen_) counter_.remove(a_.add_index(x, y));
      if (!ok) return false;
    }
    return true;
  }

  const AbelianGroup& a_;
  std::size_t m_;
  bool pin_zero_;
  bool prune_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0, evaluated_ = 0, covered_ = 0;
  SumCounter counter_;
  std::vector<std::size_t> chosen_, best_set_;
  long long best_ = 0;
};

}  // namespace

GroupSumIndex group_sum_index(const Graph& g, const AbelianGroup& a, std::uint64_t node_budget) {
  const std::size_t n = g.order();
  if (n > a.order()) throw InputError("group has fewer elements than the graph has vertices");
  GroupSumIndex out;
  if (g.size() == 0) {
    out.status = GroupStatus::exact;
    for (std::size_t i = 0; i < n; ++i) out.witness.push_back(a.element(i));
    return out;
  }
  if (g.size() == n * (n - 1) / 2) {
    SubsetScan scan(a, n, true, node_budget, true);
    const auto r = scan.run();
    out.status = r.status;
    out.value = r.value;
    out.lower = r.status == GroupStatus::exact ? r.value : static_cast<long long>(g.max_degree());
    out.witness = r.witness;
    out.nodes = r.subsets_covered;
    return out;
  }
  return GroupSearch(g, a, node_budget).run();
}

RestrictedMinimum min_restricted_sumset_complete(const AbelianGroup& a, std::size_t m, std::uint64_t node_budget,
                                                 bool prune) {
  if (m < 2 || m > a.order()) throw InputError("need 2 <= m <= |A|");
  return SubsetScan(a, m, false, node_budget, prune).run();
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Zp2Construction zp2_construction(std::int64_t p) {
  if (p < 5 || !is_prime(p)) throw InputError("p must be a prime >= 5");
  const AbelianGroup a({p, p});
  Zp2Construction out;
  out.p = p;
  const std::int64_t h = (p + 1) / 2;
  out.subset.push_back({0, 0});
  for (std::int64_t i = 0; i < p; ++i) out.subset.push_back({1, i});
  for (std::int64_t j = 0; j < p; ++j) out.subset.push_back({h, j});
  out.sums = restricted_sumset(a, out.subset);
  out.achieved = static_cast<long long>(out.sums.size());

  std::set<std::int64_t> rows{1, 2, h, h + 1};
  std::vector<GroupElement> expected;
  for (auto k : rows) {
    for (std::int64_t l = 0; l < p; ++l) expected.push_back({k % p, l});
  }
  std::sort(expected.begin(), expected.end());
  if (out.achieved != 4 * p || out.sums != expected) {
    throw ValidationError("Z_p^2 construction does not give the expected 4p sums");
  }
  return out;
}

}  // namespace sumdex
