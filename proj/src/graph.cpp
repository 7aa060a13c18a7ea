#include "sumdex/graph.hpp"

#include "sumdex/errors.hpp"

#include <algorithm>
#include <map>

namespace sumdex {

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::string family_tag)
    : n_(n), edges_(std::move(edges)), tag_(std::move(family_tag)) {
  for (Edge& e : edges_) {
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.u >= n_ || e.v >= n_) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") out of range for n=" + std::to_string(n_));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InputError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) +
                     ")");
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::size_t Graph::max_degree() const {
  auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

Graph Graph::with_tag(std::string tag) const {
  Graph g = *this;
  g.tag_ = std::move(tag);
  return g;
}

Graph Graph::with_edge(Vertex a, Vertex b) const {
  auto edges = edges_;
  edges.push_back({a, b});
  return Graph(n_, std::move(edges));
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  auto deg = g.degrees();
  std::sort(deg.begin(), deg.end());
  return deg;
}

namespace {

std::vector<Edge> shifted(std::span<const Edge> edges, Vertex by) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.push_back({e.u + by, e.v + by});
  return out;
}

}  // namespace

Graph join(const Graph& g1, const Graph& g2) {
  const auto n1 = static_cast<Vertex>(g1.order());
  const auto n2 = static_cast<Vertex>(g2.order());
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  auto tail = shifted(g2.edges(), n1);
  edges.insert(edges.end(), tail.begin(), tail.end());
  for (Vertex a = 0; a < n1; ++a) {
    for (Vertex b = 0; b < n2; ++b) edges.push_back({a, n1 + b});
  }
  return Graph(n1 + n2, std::move(edges));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const auto n1 = static_cast<Vertex>(g1.order());
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  auto tail = shifted(g2.edges(), n1);
  edges.insert(edges.end(), tail.begin(), tail.end());
  return Graph(g1.order() + g2.order(), std::move(edges));
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const auto n1 = static_cast<Vertex>(g1.order());
  const auto n2 = static_cast<Vertex>(g2.order());
  std::vector<Edge> edges;
  for (Vertex b = 0; b < n2; ++b) {
    for (const Edge& e : g1.edges()) edges.push_back({e.u + n1 * b, e.v + n1 * b});
  }
  for (const Edge& e : g2.edges()) {
    for (Vertex a = 0; a < n1; ++a) edges.push_back({a + n1 * e.u, a + n1 * e.v});
  }
  return Graph(static_cast<std::size_t>(n1) * n2, std::move(edges));
}

// ---------------------------------------------------------------------------
// Families

Graph empty_graph(std::size_t n) { return Graph(n, {}, "E_" + std::to_string(n)); }

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges), "K_" + std::to_string(n));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges), "P_" + std::to_string(n));
}

Graph cycle_graph(std::size_t m) {
  if (m < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < m; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % m)});
  return Graph(m, std::move(edges), "C_" + std::to_string(m));
}

Graph complete_multipartite(std::vector<std::size_t> parts) {
  if (parts.empty()) throw InputError("multipartite graph needs at least one part");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  if (parts.back() == 0) throw InputError("part sizes must be positive");
  std::vector<Vertex> part_of;
  std::string tag = "K_{";
  for (std::size_t p = 0; p < parts.size(); ++p) {
    part_of.insert(part_of.end(), parts[p], static_cast<Vertex>(p));
    tag += (p ? "," : "") + std::to_string(parts[p]);
  }
  tag += "}";
  const auto n = static_cast<Vertex>(part_of.size());
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (part_of[i] != part_of[j]) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges), tag);
}

Graph hypercube(std::size_t d) {
  if (d == 0 || d > 20) throw InputError("hypercube dimension must be in 1..20");
  const Vertex n = Vertex{1} << d;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < d; ++i) {
      Vertex w = v ^ (Vertex{1} << i);
      if (v < w) edges.push_back({v, w});
    }
  }
  return Graph(n, std::move(edges), "Q_" + std::to_string(d));
}

Graph cluster_graph(std::size_t copies, std::size_t k) {
  if (copies == 0 || k == 0) throw InputError("cluster graph needs positive copies and size");
  Graph g(0, {});
  const Graph clique = complete_graph(k);
  for (std::size_t i = 0; i < copies; ++i) g = disjoint_union(g, clique);
  return g.with_tag(std::to_string(copies) + "K_" + std::to_string(k));
}

Graph ladder(std::size_t m) {
  if (m < 2 || m % 2 != 0) throw InputError("ladder needs an even vertex count >= 2");
  return cartesian_product(path_graph(m / 2), path_graph(2)).with_tag("ladder_" + std::to_string(m));
}

Graph threshold_tail(std::size_t n) {
  if (n == 0) throw InputError("L_n needs n >= 1");
  std::vector<Edge> edges;
  // 1-based labels i < j with i + j >= n + 2.
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 1; i < j; ++i) {
      if (i + j >= n + 2) edges.push_back({static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1)});
    }
  }
  return Graph(n, std::move(edges), "L_" + std::to_string(n));
}

Graph join_family(std::vector<std::size_t> parts) {
  if (parts.size() < 2) throw InputError("join family needs at least two parts");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  if (parts.back() == 0) throw InputError("part sizes must be positive");
  Graph g = join(threshold_tail(parts[0]), threshold_tail(parts[1]));
  std::string tag = "L_" + std::to_string(parts[0]) + " v L_" + std::to_string(parts[1]);
  for (std::size_t i = 2; i < parts.size(); ++i) {
    g = join(g, complete_graph(parts[i]));
    tag += " v K_" + std::to_string(parts[i]);
  }
  return g.with_tag(tag);
}

// ---------------------------------------------------------------------------
// FamilySpec

namespace {

const std::map<std::string, FamilyKind>& kind_names() {
  static const std::map<std::string, FamilyKind> names = {
      {"complete", FamilyKind::complete},
      {"K", FamilyKind::complete},
      {"complete_bipartite", FamilyKind::complete_bipartite},
      {"bipartite", FamilyKind::complete_bipartite},
      {"complete_multipartite", FamilyKind::complete_multipartite},
      {"multipartite", FamilyKind::complete_multipartite},
      {"cycle", FamilyKind::cycle},
      {"C", FamilyKind::cycle},
      {"path", FamilyKind::path},
      {"P", FamilyKind::path},
      {"hypercube", FamilyKind::hypercube},
      {"Q", FamilyKind::hypercube},
      {"cluster", FamilyKind::cluster},
      {"ladder", FamilyKind::ladder},
      {"threshold_tail", FamilyKind::threshold_tail},
      {"L", FamilyKind::threshold_tail},
      {"join_family", FamilyKind::join_family},
      {"join", FamilyKind::join_family},
  };
  return names;
}

std::size_t expect_count(const FamilySpec& s) {
  switch (s.kind) {
    case FamilyKind::complete_bipartite:
    case FamilyKind::cluster:
      return 2;
    case FamilyKind::complete_multipartite:
    case FamilyKind::join_family:
      return 0;
    default:
      return 1;
  }
}

}  // namespace

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::complete: return "complete";
    case FamilyKind::complete_bipartite: return "complete_bipartite";
    case FamilyKind::complete_multipartite: return "complete_multipartite";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::path: return "path";
    case FamilyKind::hypercube: return "hypercube";
    case FamilyKind::cluster: return "cluster";
    case FamilyKind::ladder: return "ladder";
    case FamilyKind::threshold_tail: return "threshold_tail";
    case FamilyKind::join_family: return "join_family";
  }
  return "?";
}

FamilyKind parse_family_kind(const std::string& name) {
  auto it = kind_names().find(name);
  if (it == kind_names().end()) throw InputError("unknown graph family '" + name + "'");
  return it->second;
}

FamilySpec FamilySpec::normalized() const {
  FamilySpec out = *this;
  const std::size_t want = expect_count(out);
  if (want != 0 && out.params.size() != want) {
    throw InputError(to_string(kind) + " takes " + std::to_string(want) + " parameter(s)");
  }
  if (out.params.empty()) throw InputError(to_string(kind) + " needs parameters");
  for (auto p : out.params) {
    if (p <= 0) throw InputError("family parameters must be positive");
  }
  switch (kind) {
    case FamilyKind::complete_bipartite:
    case FamilyKind::complete_multipartite:
    case FamilyKind::join_family:
      std::sort(out.params.begin(), out.params.end(), std::greater<>());
      break;
    default:
      break;
  }
  if (kind == FamilyKind::join_family && out.params.size() < 2) {
    throw InputError("join family needs at least two parts");
  }
  if (kind == FamilyKind::cycle && out.params[0] < 3) throw InputError("cycle needs m >= 3");
  if (kind == FamilyKind::ladder && out.params[0] % 2 != 0) {
    throw InputError("ladder needs an even vertex count");
  }
  return out;
}

Graph generate(const FamilySpec& raw) {
  const FamilySpec spec = raw.normalized();
  std::vector<std::size_t> p(spec.params.begin(), spec.params.end());
  switch (spec.kind) {
    case FamilyKind::complete: return complete_graph(p[0]);
    case FamilyKind::complete_bipartite:
    case FamilyKind::complete_multipartite: return complete_multipartite(p);
    case FamilyKind::cycle: return cycle_graph(p[0]);
    case FamilyKind::path: return path_graph(p[0]);
    case FamilyKind::hypercube: return hypercube(p[0]);
    case FamilyKind::cluster: return cluster_graph(p[0], p[1]);
    case FamilyKind::ladder: return ladder(p[0]);
    case FamilyKind::threshold_tail: return threshold_tail(p[0]);
    case FamilyKind::join_family: return join_family(p);
  }
  throw InputError("unhandled family");
}

}  // namespace sumdex
