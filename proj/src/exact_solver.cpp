#include "sumdex/exact_solver.hpp"

#include "sumdex/errors.hpp"
#include "sumdex/linear_system.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

namespace sumdex {

bool is_proper(const Graph& g, const EdgeColoring& c) {
  if (c.color.size() != g.size()) return false;
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (c.color[i] >= c.classes) return false;
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const bool touch = edges[i].u == edges[j].u || edges[i].u == edges[j].v ||
                         edges[i].v == edges[j].u || edges[i].v == edges[j].v;
      if (touch && c.color[i] == c.color[j]) return false;
    }
  }
  return true;
}

bool is_canonical(const EdgeColoring& c) {
  std::size_t opened = 0;
  for (auto col : c.color) {
    if (col > opened) return false;
    if (col == opened) ++opened;
  }
  return true;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kMinTasks = 64;

std::vector<std::int64_t> edge_equation(std::size_t columns, std::size_t n, Edge e, std::size_t color) {
  std::vector<std::int64_t> row(columns, 0);
  row[e.u] = 1;
  row[e.v] = 1;
  row[n + color] = -1;
  return row;
}

bool degenerate(const IncrementalSystem& sys, std::size_t n, std::size_t opened) {
  std::vector<std::size_t> vars(n + opened);
  std::iota(vars.begin(), vars.end(), std::size_t{0});
  return sys.has_equal_pair(vars);
}

struct PartialColoring {
  std::size_t depth = 0;
  std::size_t opened = 0;
  std::vector<std::size_t> color;
  std::vector<std::uint64_t> used_at;  // per-vertex colour bitmask
  IncrementalSystem system;
};

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, std::size_t k, const SolverOptions& opt)
      : g_(g), n_(g.order()), m_(g.size()), k_(k), columns_(n_ + k), opt_(opt) {}

  KSearchResult run() {
    KSearchResult out;
    std::vector<PartialColoring> tasks = make_tasks();
    if (aborted_) {
      out.status = Feasibility::unknown;
      out.nodes = prefix_nodes_;
      return out;
    }
    const std::size_t count = tasks.size();
    std::vector<Outcome> outcomes(count);
    std::atomic<std::size_t> next{0};
    global_nodes_ = prefix_nodes_;

    auto worker = [&] {
      Worker w;
      w.levels.resize(m_ + 1);
      for (;;) {
        const std::size_t t = next.fetch_add(1);
        if (t >= count) return;
        if (t > winner_.load()) {
          outcomes[t].skipped = true;
          continue;
        }
        run_task(tasks[t], t, w, outcomes[t]);
      }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(opt_.threads, static_cast<unsigned>(count)));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }

    const std::size_t win = winner_.load();
    const std::size_t last = win == kNone ? count : win + 1;
    out.nodes = prefix_nodes_;
    bool incomplete = false;
    for (std::size_t t = 0; t < last; ++t) {
      out.nodes += outcomes[t].nodes;
      if (outcomes[t].aborted || outcomes[t].skipped) incomplete = true;
    }
    if (win != kNone && !incomplete) {
      out.status = Feasibility::feasible;
      EdgeColoring pattern{outcomes[win].color, outcomes[win].opened};
      out.witness = realize_coloring(g_, pattern, opt_.seed);
      if (!out.witness) throw ValidationError("surviving colouring failed to realize");
      out.pattern = std::move(pattern);
    } else if (incomplete) {
      out.status = Feasibility::unknown;
    } else {
      out.status = Feasibility::infeasible;
    }
    return out;
  }

 private:
  struct Outcome {
    bool found = false;
    bool aborted = false;
    bool skipped = false;
    std::uint64_t nodes = 0;
    std::vector<std::size_t> color;
    std::size_t opened = 0;
  };

  struct Stop {};

  // Children of `s` that survive the adjacency and degeneracy checks, in colour order.
  template <typename Visit>
  void expand(const PartialColoring& s, IncrementalSystem& child_sys, Visit&& visit) {
    const Edge e = g_.edges()[s.depth];
    const std::size_t limit = std::min(k_, s.opened + 1);
    const std::uint64_t blocked = s.used_at[e.u] | s.used_at[e.v];
    for (std::size_t c = 0; c < limit; ++c) {
      if ((blocked >> c) & 1) continue;
      child_sys = s.system;
      const bool opens = c == s.opened;
      const bool grew = child_sys.add(edge_equation(columns_, n_, e, c));
      if ((grew || opens) && degenerate(child_sys, n_, s.opened + (opens ? 1 : 0))) continue;
      visit(c, opens);
    }
  }

  std::vector<PartialColoring> make_tasks() {
    PartialColoring root;
    root.used_at.assign(n_, 0);
    root.system = IncrementalSystem(columns_);
    std::vector<PartialColoring> frontier;
    frontier.push_back(std::move(root));
    IncrementalSystem scratch;
    while (frontier.size() < kMinTasks) {
      bool any = false;
      std::vector<PartialColoring> next;
      for (auto& s : frontier) {
        if (s.depth == m_) {
          next.push_back(std::move(s));
          continue;
        }
        any = true;
        const Edge e = g_.edges()[s.depth];
        expand(s, scratch, [&](std::size_t c, bool opens) {
          PartialColoring child;
          child.depth = s.depth + 1;
          child.opened = s.opened + (opens ? 1 : 0);
          child.color = s.color;
          child.color.push_back(c);
          child.used_at = s.used_at;
          child.used_at[e.u] |= std::uint64_t{1} << c;
          child.used_at[e.v] |= std::uint64_t{1} << c;
          child.system = scratch;
          next.push_back(std::move(child));
          ++prefix_nodes_;
        });
      }
      frontier = std::move(next);
      if (!any || frontier.empty()) break;
      if (prefix_nodes_ > opt_.node_budget) {
        aborted_ = true;
        break;
      }
    }
    return frontier;
  }

  struct Worker {
    std::vector<IncrementalSystem> levels;
    std::vector<std::size_t> color;
    std::vector<std::uint64_t> used_at;
    std::uint64_t nodes = 0;
    std::uint64_t pending = 0;
    std::size_t task = 0;
    std::size_t found_opened = 0;
  };

  void run_task(const PartialColoring& task, std::size_t index, Worker& w, Outcome& out) {
    w.color = task.color;
    w.color.resize(m_, 0);
    w.used_at = task.used_at;
    w.levels[task.depth] = task.system;
    w.nodes = 0;
    w.pending = 0;
    w.task = index;
    try {
      if (dfs(w, task.depth, task.opened)) {
        out.found = true;
        out.color = w.color;
        out.opened = w.found_opened;
        std::size_t expected = winner_.load();
        while (index < expected && !winner_.compare_exchange_weak(expected, index)) {
        }
      }
    } catch (const Stop&) {
      out.aborted = !cancelled(w);
      out.skipped = cancelled(w);
    }
    global_nodes_.fetch_add(w.pending);
    out.nodes = w.nodes;
  }

  bool cancelled(const Worker& w) const { return winner_.load() < w.task; }

  void tick(Worker& w) {
    ++w.nodes;
    if (++w.pending < 1024) return;
    const std::uint64_t total = global_nodes_.fetch_add(w.pending) + w.pending;
    w.pending = 0;
    if (total > opt_.node_budget) throw Stop{};
    if (cancelled(w)) throw Stop{};
    if (opt_.deadline && std::chrono::steady_clock::now() > *opt_.deadline) throw Stop{};
  }

  bool dfs(Worker& w, std::size_t depth, std::size_t opened) {
    if (depth == m_) {
      w.found_opened = opened;
      return true;
    }
    const Edge e = g_.edges()[depth];
    const std::size_t limit = std::min(k_, opened + 1);
    const std::uint64_t blocked = w.used_at[e.u] | w.used_at[e.v];
    for (std::size_t c = 0; c < limit; ++c) {
      if ((blocked >> c) & 1) continue;
      IncrementalSystem& sys = w.levels[depth + 1];
      sys = w.levels[depth];
      const bool opens = c == opened;
      const bool grew = sys.add(edge_equation(columns_, n_, e, c));
      if ((grew || opens) && degenerate(sys, n_, opened + (opens ? 1 : 0))) continue;
      tick(w);
      w.color[depth] = c;
      w.used_at[e.u] |= std::uint64_t{1} << c;
      w.used_at[e.v] |= std::uint64_t{1} << c;
      if (dfs(w, depth + 1, opened + (opens ? 1 : 0))) return true;
      w.used_at[e.u] &= ~(std::uint64_t{1} << c);
      w.used_at[e.v] &= ~(std::uint64_t{1} << c);
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_, m_, k_, columns_;
  const SolverOptions& opt_;
  std::uint64_t prefix_nodes_ = 0;
  bool aborted_ = false;
  std::atomic<std::size_t> winner_{kNone};
  std::atomic<std::uint64_t> global_nodes_{0};
};

BigInt lcm_big(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

// Shift to minimum rank 1 and divide out the common step.
Labeling tidy(std::vector<BigInt> values) {
  if (values.empty()) return {};
  const BigInt low = *std::min_element(values.begin(), values.end());
  BigInt step = 0;
  for (auto& v : values) {
    v -= low;
    step = boost::multiprecision::gcd(step, v);
  }
  if (step == 0) step = 1;
  Labeling f;
  f.ranks.reserve(values.size());
  for (auto& v : values) f.ranks.push_back(v / step + 1);
  return f;
}

}  // namespace

std::optional<Labeling> realize_coloring(const Graph& g, const EdgeColoring& c, std::uint64_t seed) {
  if (!is_proper(g, c)) return std::nullopt;
  const std::size_t n = g.order();
  const std::size_t columns = n + c.classes;
  IncrementalSystem sys(columns);
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) sys.add(edge_equation(columns, n, edges[i], c.color[i]));
  if (degenerate(sys, n, c.classes)) return std::nullopt;

  std::mt19937_64 rng(seed);
  std::int64_t range = 16;
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<std::int64_t> param(columns, 0);
    for (std::size_t j = 0; j < columns; ++j) {
      if (!sys.is_pivot(j)) {
        param[j] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range;
      }
    }
    // value_j = num_j / den_j
    std::vector<BigInt> num(columns);
    std::vector<BigInt> den(columns, 1);
    BigInt common = 1;
    for (std::size_t j = 0; j < columns; ++j) {
      if (!sys.is_pivot(j)) {
        num[j] = param[j];
        continue;
      }
      auto row = sys.pivot_row(j);
      BigInt acc = 0;
      for (std::size_t f = 0; f < columns; ++f) {
        if (f != j && row[f] != 0) acc -= BigInt(row[f]) * param[f];
      }
      num[j] = acc;
      den[j] = row[j];
      common = lcm_big(common, den[j]);
    }
    std::vector<BigInt> scaled(columns);
    for (std::size_t j = 0; j < columns; ++j) scaled[j] = num[j] * (common / den[j]);

    auto distinct = [](std::vector<BigInt> v) {
      std::sort(v.begin(), v.end());
      return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    std::vector<BigInt> ranks(scaled.begin(), scaled.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<BigInt> sums(scaled.begin() + static_cast<std::ptrdiff_t>(n), scaled.end());
    if (distinct(ranks) && distinct(sums)) return tidy(std::move(ranks));
    range *= 2;
  }
  throw ValidationError("generic point search did not terminate");
}

KSearchResult solve_for_k(const Graph& g, std::size_t k, const SolverOptions& options) {
  if (k == 0) throw InputError("k must be at least 1");
  if (g.size() == 0) throw InputError("solve_for_k needs a graph with at least one edge");
  if (g.size() > options.max_edges || g.size() > 64) {
    KSearchResult r;
    r.status = Feasibility::unknown;
    return r;
  }
  const std::size_t effective = std::min(k, g.size());
  ColoringSearch search(g, effective, options);
  return search.run();
}

// ---------------------------------------------------------------------------

std::string check_certificate(const Graph& g, const SumIndexCertificate& cert) {
  if (auto bad = validate_labeling(g, cert.witness)) return "witness invalid: " + bad->message;
  const auto count = static_cast<long long>(rank_sums(g, cert.witness).count());
  if (count != cert.upper) {
    return "witness has " + std::to_string(count) + " sums, certificate claims " + std::to_string(cert.upper);
  }
  if (cert.status != CertificateStatus::exact) return {};
  if (cert.lower != cert.value || cert.upper != cert.value) return "exact certificate with open bracket";
  const auto& ev = cert.lower_evidence;
  if (ev.method == LowerEvidence::Method::bound) {
    if (ev.bound_value != cert.value) return "bound evidence does not match value";
  } else {
    if (ev.k_range.empty() || ev.k_range.back() + 1 != cert.value) return "exhaustion range does not end at value-1";
    if (ev.k_range.front() != ev.bound_value) return "exhaustion does not start at the proven bound";
    for (std::size_t i = 1; i < ev.k_range.size(); ++i) {
      if (ev.k_range[i] != ev.k_range[i - 1] + 1) return "exhaustion range has gaps";
    }
  }
  return {};
}

SumIndexCertificate sum_index_exact(const Graph& g, const SolverOptions& options) {
  SumIndexCertificate cert;
  if (g.size() == 0) {
    cert.status = CertificateStatus::exact;
    cert.witness = identity_labeling(g.order());
    cert.lower_evidence.bound_method = "edgeless";
    return cert;
  }
  const BoundReport bounds = sum_index_bounds(g, options.chromatic_budget);
  const long long lb = bounds.best_lower;
  cert.lower_evidence.bound_value = lb;
  cert.lower_evidence.bound_method = bounds.lower_method;

  // 1..n always gives at most 2n-3 sums; it closes the gap whenever lb == 2n-3.
  cert.witness = identity_labeling(g.order());
  long long ub = static_cast<long long>(rank_sums(g, cert.witness).count());
  cert.lower = lb;
  cert.upper = ub;

  auto finish_exact = [&](long long value) {
    cert.status = CertificateStatus::exact;
    cert.value = cert.lower = cert.upper = value;
    cert.lower_evidence.method =
        cert.lower_evidence.k_range.empty() ? LowerEvidence::Method::bound : LowerEvidence::Method::exhaustion;
    if (auto problem = check_certificate(g, cert); !problem.empty()) throw ValidationError(problem);
  };

  if (ub == lb) {
    finish_exact(lb);
    return cert;
  }
  if (g.size() > options.max_edges) {
    cert.note = "edge count " + std::to_string(g.size()) + " exceeds exhaustive limit " +
                std::to_string(options.max_edges);
    return cert;
  }
  for (long long k = lb; k < ub; ++k) {
    SolverOptions per_k = options;
    per_k.node_budget = options.node_budget > cert.budget_used ? options.node_budget - cert.budget_used : 0;
    KSearchResult r = solve_for_k(g, static_cast<std::size_t>(k), per_k);
    cert.budget_used += r.nodes;
    if (r.status == Feasibility::feasible) {
      cert.witness = std::move(*r.witness);
      finish_exact(k);
      return cert;
    }
    if (r.status == Feasibility::unknown) {
      cert.lower = k;
      cert.note = "search budget exhausted at k=" + std::to_string(k);
      return cert;
    }
    cert.lower_evidence.k_range.push_back(k);
    cert.lower_evidence.nodes.push_back(r.nodes);
    cert.lower = k + 1;
  }
  finish_exact(ub);
  return cert;
}

// ---------------------------------------------------------------------------

BruteForceResult brute_force_min_sums(const Graph& g, std::size_t label_budget) {
  const std::size_t n = g.order();
  if (n > 8) throw InputError("brute force limited to n <= 8");
  if (label_budget < n || label_budget > n + 4) throw InputError("label budget must be in [n, n+4]");
  BruteForceResult best;
  best.labeling = identity_labeling(n);
  if (g.size() == 0) return best;

  // Edges to earlier vertices, so sums are known as soon as a vertex is placed.
  std::vector<std::vector<Vertex>> back(n);
  for (const Edge& e : g.edges()) back[e.v].push_back(e.u);
  std::vector<int> rank(n, 0);
  std::vector<int> sum_count(2 * label_budget + 2, 0);
  int distinct = 0;
  int best_value = std::numeric_limits<int>::max();
  std::vector<int> best_rank;
  std::vector<bool> used(label_budget + 1, false);

  auto place = [&](auto&& self, std::size_t v) -> void {
    if (distinct >= best_value) return;
    if (v == n) {
      if (!used[1]) return;
      best_value = distinct;
      best_rank = rank;
      return;
    }
    for (std::size_t r = 1; r <= label_budget; ++r) {
      if (used[r]) continue;
      used[r] = true;
      rank[v] = static_cast<int>(r);
      for (Vertex u : back[v]) {
        if (sum_count[rank[u] + rank[v]]++ == 0) ++distinct;
      }
      self(self, v + 1);
      for (Vertex u : back[v]) {
        if (--sum_count[rank[u] + rank[v]] == 0) --distinct;
      }
      used[r] = false;
    }
  };
  place(place, 0);
  best.value = best_value;
  best.labeling.ranks.assign(best_rank.begin(), best_rank.end());
  return best;
}

}  // namespace sumdex
