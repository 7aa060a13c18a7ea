#include "sumdex/isomorphism.hpp"

#include "sumdex/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace sumdex {
namespace {

using AdjRows = std::vector<std::uint8_t>;  // bit j of row i set when i ~ j

AdjRows rows_of(const Graph& g) {
  AdjRows rows(g.order(), 0);
  for (const Edge& e : g.edges()) {
    rows[e.u] |= static_cast<std::uint8_t>(1u << e.v);
    rows[e.v] |= static_cast<std::uint8_t>(1u << e.u);
  }
  return rows;
}

std::uint32_t code_of(const AdjRows& rows, const std::vector<Vertex>& perm) {
  std::uint32_t code = 0;
  const std::size_t n = perm.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | ((rows[perm[i]] >> perm[j]) & 1u);
  }
  return code;
}

Graph graph_of_code(std::size_t n, std::uint32_t code) {
  std::vector<Edge> edges;
  std::size_t bit = n * (n - 1) / 2;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      --bit;
      if ((code >> bit) & 1u) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxEnumerationOrder) throw InputError("canonical form supports n <= 7");
  const AdjRows rows = rows_of(g);
  const auto deg = g.degrees();

  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end) of equal degree
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && deg[perm[j]] == deg[perm[i]]) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  for (auto [b, e] : groups) std::sort(perm.begin() + b, perm.begin() + e);

  // Odometer over the product of per-group permutations.
  std::uint32_t best = 0;
  bool first = true;
  while (true) {
    const std::uint32_t c = code_of(rows, perm);
    if (first || c > best) best = c;
    first = false;
    std::size_t k = 0;
    for (; k < groups.size(); ++k) {
      auto [b, e] = groups[k];
      if (std::next_permutation(perm.begin() + b, perm.begin() + e)) break;
    }
    if (k == groups.size()) break;
  }
  return {graph_of_code(n, best), best};
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a).code == canonical_form(b).code;
}

std::vector<Graph> enumerate_graphs(std::size_t n) {
  if (n > kMaxEnumerationOrder) throw InputError("graph enumeration supports n <= 7");
  std::vector<Graph> level{Graph(0, {})};
  for (std::size_t m = 1; m <= n; ++m) {
    std::map<std::pair<std::size_t, std::uint32_t>, Graph> seen;
    const auto fresh = static_cast<Vertex>(m - 1);
    for (const Graph& base : level) {
      for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
        std::vector<Edge> edges(base.edges().begin(), base.edges().end());
        for (Vertex u = 0; u < fresh; ++u) {
          if ((mask >> u) & 1u) edges.push_back({u, fresh});
        }
        auto cf = canonical_form(Graph(m, std::move(edges)));
        const auto key = std::make_pair(cf.graph.size(), cf.code);
        seen.try_emplace(key, std::move(cf.graph));
      }
    }
    level.clear();
    for (auto& [key, g] : seen) level.push_back(std::move(g));
  }
  return level;
}

}  // namespace sumdex
