#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sumdex {

using Vertex = std::uint32_t;

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable finite simple graph on vertices 0..n-1. The edge list is kept canonical:
// every pair normalized to (min, max) and the list sorted lexicographically.
class Graph {
 public:
  Graph() = default;

  // Throws InputError on self-loops, duplicate edges or out-of-range endpoints.
  Graph(std::size_t n, std::vector<Edge> edges, std::string family_tag = {});

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const std::string& family_tag() const noexcept { return tag_; }

  bool has_edge(Vertex a, Vertex b) const;
  std::vector<std::size_t> degrees() const;
  std::size_t max_degree() const;

  Graph with_tag(std::string tag) const;
  Graph with_edge(Vertex a, Vertex b) const;

  // Structural equality: same n and same canonical edge list. Tags are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::string tag_;
};

// Degrees sorted ascending (delta_1 <= ... <= delta_n).
std::vector<std::size_t> degree_sequence(const Graph& g);

// Vertices of g2 are shifted by g1.order() in all three combinators.
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);
// Vertex (a, b) with a in g1, b in g2 is numbered a + g1.order() * b, so the copy of
// g1 indexed by b occupies a contiguous block.
Graph cartesian_product(const Graph& g1, const Graph& g2);

// ---------------------------------------------------------------------------
// Families. Numbering conventions are fixed; constructions assign ranks by position.
//
//   empty(n), complete(n)        vertices 0..n-1
//   path(n)                      0-1-...-(n-1)
//   cycle(m)                     0-1-...-(m-1)-0
//   complete_multipartite(parts) parts sorted non-increasing, each part contiguous
//   hypercube(d)                 binary index order: v ~ v xor 2^i
//   cluster(n, k)                copy i occupies k*i .. k*i+k-1
//   ladder(m)                    path(m/2) x path(2); rungs are (i, i + m/2)
//   threshold_tail(n)            L_n: vertex i-1 is v_i, edges v_i v_j with i+j >= n+2
//   join_family(parts)           L_{n1} v L_{n2} v K_{n3} v ... in that block order
// ---------------------------------------------------------------------------

enum class FamilyKind {
  complete,
  complete_bipartite,
  complete_multipartite,
  cycle,
  path,
  hypercube,
  cluster,
  ladder,
  threshold_tail,
  join_family,
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::complete;
  // complete/cycle/path/hypercube/ladder/threshold_tail: {n}; complete_bipartite: {m, n};
  // complete_multipartite/join_family: part sizes; cluster: {copies, clique size}.
  std::vector<std::int64_t> params;

  // Throws InputError when params do not fit the kind. Part sizes are sorted
  // non-increasing.
  FamilySpec normalized() const;
};

std::string to_string(FamilyKind kind);
// Accepts the enum spellings plus short aliases (K, bipartite, multipartite, Q, C, P, L, join).
FamilyKind parse_family_kind(const std::string& name);

Graph generate(const FamilySpec& spec);

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t m);
Graph complete_multipartite(std::vector<std::size_t> parts);
Graph hypercube(std::size_t d);
Graph cluster_graph(std::size_t copies, std::size_t k);
Graph ladder(std::size_t m);
Graph threshold_tail(std::size_t n);
Graph join_family(std::vector<std::size_t> parts);

}  // namespace sumdex
