#include "sumdex/labeling.hpp"

#include "sumdex/errors.hpp"

#include <algorithm>
#include <numeric>

namespace sumdex {

BigInt parse_decimal(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw InputError("expected a decimal integer, got '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') {
      throw InputError("expected a decimal integer, got '" + std::string(text) + "'");
    }
  }
  BigInt value(std::string(text.substr(i)));
  return text[0] == '-' ? BigInt(-value) : value;
}

std::optional<LabelingViolation> validate_labeling(const Graph& g, const Labeling& f) {
  if (f.size() != g.order()) {
    return LabelingViolation{LabelingViolation::Kind::domain_mismatch, 0, 0,
                             "labeling has " + std::to_string(f.size()) + " ranks for " +
                                 std::to_string(g.order()) + " vertices"};
  }
  std::vector<Vertex> order(f.size());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return f.ranks[a] < f.ranks[b]; });
  std::optional<LabelingViolation> first_clash;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (f.ranks[order[i - 1]] != f.ranks[order[i]]) continue;
    Vertex a = std::min(order[i - 1], order[i]);
    Vertex b = std::max(order[i - 1], order[i]);
    if (!first_clash || std::pair(a, b) < std::pair(first_clash->first, first_clash->second)) {
      first_clash = LabelingViolation{LabelingViolation::Kind::duplicate_rank, a, b,
                                "vertices " + std::to_string(a) + " and " + std::to_string(b) +
                                    " share rank " + to_decimal(f.ranks[a])};
    }
  }
  return first_clash;
}

SumSignature rank_sums(const Graph& g, const Labeling& f) {
  if (auto bad = validate_labeling(g, f)) throw InputError(bad->message);
  SumSignature sig;
  sig.sums.reserve(g.size());
  for (const Edge& e : g.edges()) sig.sums.push_back(f.ranks[e.u] + f.ranks[e.v]);
  std::sort(sig.sums.begin(), sig.sums.end());
  sig.sums.erase(std::unique(sig.sums.begin(), sig.sums.end()), sig.sums.end());
  return sig;
}

Labeling affine_map(const Labeling& f, const BigInt& a, const BigInt& b) {
  if (a == 0) throw InputError("affine map needs a nonzero multiplier");
  Labeling out;
  out.ranks.reserve(f.size());
  for (const BigInt& r : f.ranks) out.ranks.push_back(a * r + b);
  return out;
}

Labeling labeling_from(std::initializer_list<long long> ranks) {
  Labeling f;
  for (long long r : ranks) f.ranks.emplace_back(r);
  return f;
}

Labeling identity_labeling(std::size_t n, long long first) {
  Labeling f;
  f.ranks.reserve(n);
  for (std::size_t i = 0; i < n; ++i) f.ranks.emplace_back(first + static_cast<long long>(i));
  return f;
}

}  // namespace sumdex
