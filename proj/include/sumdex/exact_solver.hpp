#pragma once

#include "sumdex/bounds.hpp"
#include "sumdex/graph.hpp"
#include "sumdex/labeling.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sumdex {

inline constexpr std::uint64_t kDefaultSeed = 0x5D3A11CEULL;
inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr std::size_t kDefaultMaxEdges = 16;

struct SolverOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  // Exhaustive search is refused above this many edges (unless bounds already close).
  std::size_t max_edges = kDefaultMaxEdges;
  unsigned threads = 1;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::uint64_t chromatic_budget = kDefaultChromaticBudget;
};

// Proper edge colouring: color[i] is the class of g.edges()[i]. Canonical when colour
// c first appears before colour c+1 in edge order.
struct EdgeColoring {
  std::vector<std::size_t> color;
  std::size_t classes = 0;
};

bool is_proper(const Graph& g, const EdgeColoring& c);
bool is_canonical(const EdgeColoring& c);

enum class Feasibility { feasible, infeasible, unknown };

struct KSearchResult {
  Feasibility status = Feasibility::unknown;
  std::optional<Labeling> witness;
  std::optional<EdgeColoring> pattern;
  std::uint64_t nodes = 0;
};

// Searches for a labeling with at most k distinct sums by enumerating canonical
// k-colourings of the edges and keeping the linear system
//   x_u + x_v - s_{colour(uv)} = 0
// in exact echelon form. A branch dies the moment some x_u - x_v or s_c - s_c'
// vanishes on the solution space. Any surviving complete colouring is realizable;
// the witness is a generic rational point scaled to integers.
KSearchResult solve_for_k(const Graph& g, std::size_t k, const SolverOptions& options = {});

// Exact realizability test for a fixed colouring; returns a witness labeling.
std::optional<Labeling> realize_coloring(const Graph& g, const EdgeColoring& c,
                                         std::uint64_t seed = kDefaultSeed);

enum class CertificateStatus { exact, unknown };

struct LowerEvidence {
  enum class Method { bound, exhaustion };
  Method method = Method::bound;
  long long bound_value = 0;
  std::string bound_method;
  // exhaustion: every k listed had no realizable colouring; nodes[i] pairs with k_range[i].
  std::vector<long long> k_range;
  std::vector<std::uint64_t> nodes;
};

struct SumIndexCertificate {
  CertificateStatus status = CertificateStatus::unknown;
  long long value = 0;  // S(G) when status == exact
  long long lower = 0;  // bracket; lower == upper == value when exact
  long long upper = 0;
  Labeling witness;     // realizes `upper` distinct sums
  LowerEvidence lower_evidence;
  std::uint64_t budget_used = 0;
  std::string note;
};

// Scans k upward from the bound-module lower bound. Edgeless graphs give value 0.
SumIndexCertificate sum_index_exact(const Graph& g, const SolverOptions& options = {});

// Checks the certificate's self-consistency (witness valid, count == upper, evidence
// matches value). Returns an empty string when fine, else the problem.
std::string check_certificate(const Graph& g, const SumIndexCertificate& cert);

struct BruteForceResult {
  long long value = 0;
  Labeling labeling;
};

// Minimum sum count over injections V -> {1..label_budget} using rank 1 somewhere.
// Independent oracle; guarded to n <= 8 and n <= label_budget <= n + 4.
BruteForceResult brute_force_min_sums(const Graph& g, std::size_t label_budget);

}  // namespace sumdex
