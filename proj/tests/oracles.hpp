#pragma once

// Deliberately naive reference implementations. They share no code with the library
// beyond the Graph container and are only fast enough for the tiny inputs used here.

#include "sumdex/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using sumdex::Graph;

inline std::size_t sum_count(const Graph& g, const std::vector<long long>& ranks) {
  std::set<long long> sums;
  for (const auto& e : g.edges()) sums.insert(ranks[e.u] + ranks[e.v]);
  return sums.size();
}

// Min sum count over every injection V -> {1..b}. No pinning, no pruning.
inline std::size_t min_sums(const Graph& g, int b) {
  const std::size_t n = g.order();
  std::vector<long long> ranks(n);
  std::vector<bool> used(b + 1, false);
  std::size_t best = g.size() + 1;
  std::function<void(std::size_t)> go = [&](std::size_t v) {
    if (v == n) {
      best = std::min(best, sum_count(g, ranks));
      return;
    }
    for (int r = 1; r <= b; ++r) {
      if (used[r]) continue;
      used[r] = true;
      ranks[v] = r;
      go(v + 1);
      used[r] = false;
    }
  };
  go(0);
  return g.size() == 0 ? 0 : best;
}

// graph6 for n <= 62, written straight from the format description.
inline std::string graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  std::vector<int> bits;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
  }
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int t = 0; t < 6; ++t) v = v * 2 + bits[k + t];
    out += static_cast<char>(63 + v);
  }
  return out;
}

// Number of isomorphism classes on n vertices: minimum edge-mask over all n!
// relabelings, collected over all labeled graphs.
inline std::size_t class_count(std::size_t n) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    index[pairs[k].first][pairs[k].second] = index[pairs[k].second][pairs[k].first] = static_cast<int>(k);
  }
  std::set<std::uint32_t> classes;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = ~0u;
    do {
      std::uint32_t m = 0;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if ((mask >> k) & 1u) m |= 1u << index[perm[pairs[k].first]][perm[pairs[k].second]];
      }
      best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes.size();
}

// Chromatic index by trying every assignment of c colours to the edges.
inline std::size_t chromatic_index(const Graph& g) {
  const std::size_t m = g.size();
  if (m == 0) return 0;
  auto edges = g.edges();
  for (std::size_t c = 1;; ++c) {
    std::vector<std::size_t> col(m, 0);
    while (true) {
      bool proper = true;
      for (std::size_t a = 0; a < m && proper; ++a) {
        for (std::size_t b = a + 1; b < m && proper; ++b) {
          const bool share = edges[a].u == edges[b].u || edges[a].u == edges[b].v || edges[a].v == edges[b].u ||
                             edges[a].v == edges[b].v;
          if (share && col[a] == col[b]) proper = false;
        }
      }
      if (proper) return c;
      std::size_t k = 0;
      while (k < m && ++col[k] == c) col[k++] = 0;
      if (k == m) break;
    }
  }
}

// Elements of Z_{m1} x ... as mixed-radix integers; addition coordinate-wise.
struct Group {
  std::vector<long long> moduli;
  std::size_t order() const {
    std::size_t o = 1;
    for (auto m : moduli) o *= static_cast<std::size_t>(m);
    return o;
  }
  std::size_t add(std::size_t a, std::size_t b) const {
    std::size_t out = 0, scale = 1;
    for (std::size_t i = moduli.size(); i-- > 0;) {
      const auto m = static_cast<std::size_t>(moduli[i]);
      out += ((a % m + b % m) % m) * scale;
      a /= m;
      b /= m;
      scale *= m;
    }
    return out;
  }
};

// Group sum index by every injection V -> A (no translation pinning).
inline std::size_t group_index(const Graph& g, const Group& a) {
  const std::size_t n = g.order(), order = a.order();
  std::vector<std::size_t> val(n);
  std::vector<bool> used(order, false);
  std::size_t best = g.size() + 1;
  std::function<void(std::size_t)> go = [&](std::size_t v) {
    if (v == n) {
      std::set<std::size_t> sums;
      for (const auto& e : g.edges()) sums.insert(a.add(val[e.u], val[e.v]));
      best = std::min(best, sums.size());
      return;
    }
    for (std::size_t x = 0; x < order; ++x) {
      if (used[x]) continue;
      used[x] = true;
      val[v] = x;
      go(v + 1);
      used[x] = false;
    }
  };
  go(0);
  return g.size() == 0 ? 0 : best;
}

// Min |X +^ X| over m-subsets by bitmask enumeration.
inline std::size_t restricted_min(const Group& a, std::size_t m) {
  const std::size_t order = a.order();
  std::size_t best = ~std::size_t{0};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << order); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != m) continue;
    std::set<std::size_t> sums;
    for (std::size_t i = 0; i < order; ++i) {
      for (std::size_t j = i + 1; j < order; ++j) {
        if (((mask >> i) & 1u) && ((mask >> j) & 1u)) sums.insert(a.add(i, j));
      }
    }
    best = std::min(best, sums.size());
  }
  return best;
}

}  // namespace oracle
