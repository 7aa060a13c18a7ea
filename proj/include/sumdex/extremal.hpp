#pragma once

#include "sumdex/exact_solver.hpp"
#include "sumdex/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sumdex {

inline constexpr std::size_t kMaxExactExtremalOrder = 6;

// floor(N n / 2 - N^2 / 8 - N / 8 + floor((N+1)/2) / 4) for N <= n - 1,
// floor(N n / 4 + n^2 / 8 - N / 4 + n / 8 + floor((N+1)/2) / 4 - 1/4) for N >= n.
long long ubeg_bound(long long n, long long sums);

// floor((1 - 1/r) n^2 / 2) with r = ceil(N/2) + 1.
long long turan_bound(long long n, long long sums);

// Edge count of the layered construction: the N floor terms
// floor(n/2), floor((n-1)/2), floor((n-1)/2), floor((n-2)/2), floor((n-2)/2), ...
long long lbeg_count(long long n, long long sums);

// 8 * (N n / 2 - N^2 / 8 - N / 4 + eps) with eps in {0, 3/8, -1/8} chosen by the
// parities of N and n.
long long lbeg_closed_form_times8(long long n, long long sums);

// N = 1: floor(n/2); N = 2: n - 1; N = 3: 3n/2 - 2 (n even), 3(n-1)/2 (n odd).
// Throws InputError for other N.
long long max_edges_closed_form(long long n, long long sums);

// Exact sum index of every isomorphism class on n vertices (n <= 6), in
// enumerate_graphs order. Classes are solved by `workers` threads.
struct ClassIndex {
  Graph graph;
  SumIndexCertificate certificate;
};
std::vector<ClassIndex> sum_index_census(std::size_t n, const SolverOptions& options = {},
                                         unsigned workers = 1);

enum class EntryStatus { exact, none, unknown };

struct MaxEdges {
  EntryStatus status = EntryStatus::none;
  long long value = 0;
  std::optional<Graph> witness;
  // Classes whose sum index stayed unknown (status unknown when any exist and could matter).
  std::size_t unresolved = 0;
};

MaxEdges max_edges_from_census(const std::vector<ClassIndex>& census, long long sums);
MaxEdges max_edges_exact(std::size_t n, long long sums, const SolverOptions& options = {},
                         unsigned workers = 1);

struct ExtremalEntry {
  long long n = 0;
  long long sums = 0;
  EntryStatus status = EntryStatus::none;
  long long max_edges = 0;
  std::string witness;  // graph6
  long long lbeg = 0;
  long long ubeg = 0;
  long long turan = 0;
  bool conjecture_tight = false;
  bool sandwich_holds() const { return lbeg <= max_edges && max_edges <= std::min(ubeg, turan); }
};

struct ExtremalTable {
  std::vector<ExtremalEntry> entries;

  std::string to_csv() const;
  std::string to_json() const;
};

// All (n, N) with 2 <= n <= n_max and 1 <= N <= 2n - 3.
ExtremalTable build_extremal_table(std::size_t n_max, const SolverOptions& options = {},
                                   unsigned workers = 1);

// Entries of the table reduced to the tightness flag: exact value versus lbeg_count.
struct ConjectureRow {
  long long n = 0;
  long long sums = 0;
  long long exact = 0;
  long long lbeg = 0;
  bool tight = false;
};
std::vector<ConjectureRow> conjecture_probe(std::size_t n_max, const SolverOptions& options = {},
                                            unsigned workers = 1);

std::string to_string(EntryStatus s);

}  // namespace sumdex
