#include "sumdex/extremal.hpp"

#include "sumdex/errors.hpp"
#include "sumdex/graph_io.hpp"
#include "sumdex/isomorphism.hpp"

#include <json.hpp>

#include <atomic>
#include <sstream>
#include <thread>

namespace sumdex {
namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void require_range(long long n, long long sums) {
  if (sums < 1 || n < 2 || sums > 2 * n - 3) throw InputError("need 1 <= N <= 2n - 3");
}

}  // namespace

long long ubeg_bound(long long n, long long sums) {
  if (sums < 1 || n < 2) throw InputError("ubeg bound needs N >= 1 and n >= 2");
  const long long half = (sums + 1) / 2;
  if (sums <= n - 1) return floor_div(4 * sums * n - sums * sums - sums + 2 * half, 8);
  return floor_div(2 * sums * n + n * n - 2 * sums + n + 2 * half - 2, 8);
}

long long turan_bound(long long n, long long sums) {
  if (sums < 1) throw InputError("Turan bound needs N >= 1");
  const long long r = (sums + 1) / 2 + 1;
  return floor_div((r - 1) * n * n, 2 * r);
}

long long lbeg_count(long long n, long long sums) {
  require_range(n, sums);
  long long total = n / 2;
  for (long long t = 1; t < sums; ++t) total += (n - (t + 1) / 2) / 2;
  return total;
}

long long lbeg_closed_form_times8(long long n, long long sums) {
  require_range(n, sums);
  long long eps8 = 0;
  if (sums % 2 == 1) {
    const bool n_even = n % 2 == 0;
    const bool one_mod_4 = sums % 4 == 1;
    eps8 = (n_even == one_mod_4) ? 3 : -1;
  }
  return 4 * sums * n - sums * sums - 2 * sums + eps8;
}

long long max_edges_closed_form(long long n, long long sums) {
  switch (sums) {
    case 1: return n / 2;
    case 2: return n - 1;
    case 3:
      if (n < 3) throw InputError("no graph on fewer than 3 vertices has sum index 3");
      return n % 2 == 0 ? 3 * n / 2 - 2 : 3 * (n - 1) / 2;
    default: throw InputError("closed form covers N in {1, 2, 3} only");
  }
}

std::vector<ClassIndex> sum_index_census(std::size_t n, const SolverOptions& options, unsigned workers) {
  if (n > kMaxExactExtremalOrder) throw InputError("exact census supports n <= 6");
  const auto graphs = enumerate_graphs(n);
  std::vector<ClassIndex> out(graphs.size());
  SolverOptions per_class = options;
  per_class.threads = 1;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < graphs.size();) {
      out[i] = {graphs[i], sum_index_exact(graphs[i], per_class)};
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < std::max(1u, workers); ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

MaxEdges max_edges_from_census(const std::vector<ClassIndex>& census, long long sums) {
  MaxEdges best;
  for (const auto& c : census) {
    if (c.certificate.status != CertificateStatus::exact) {
      if (c.certificate.lower <= sums && sums <= c.certificate.upper) ++best.unresolved;
      continue;
    }
    if (c.certificate.value != sums) continue;
    const auto edges = static_cast<long long>(c.graph.size());
    if (!best.witness || edges > best.value) {
      best.value = edges;
      best.witness = c.graph;
      best.status = EntryStatus::exact;
    }
  }
  if (best.unresolved > 0) {
    // An unresolved class could beat the recorded maximum.
    for (const auto& c : census) {
      if (c.certificate.status != CertificateStatus::exact && c.certificate.lower <= sums &&
          sums <= c.certificate.upper && static_cast<long long>(c.graph.size()) > best.value) {
        best.status = EntryStatus::unknown;
      }
    }
  }
  return best;
}

MaxEdges max_edges_exact(std::size_t n, long long sums, const SolverOptions& options, unsigned workers) {
  return max_edges_from_census(sum_index_census(n, options, workers), sums);
}

ExtremalTable build_extremal_table(std::size_t n_max, const SolverOptions& options, unsigned workers) {
  if (n_max > kMaxExactExtremalOrder) throw InputError("extremal table supports n <= 6");
  ExtremalTable table;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const auto census = sum_index_census(n, options, workers);
    const auto nn = static_cast<long long>(n);
    for (long long sums = 1; sums <= 2 * nn - 3; ++sums) {
      const MaxEdges m = max_edges_from_census(census, sums);
      ExtremalEntry e;
      e.n = nn;
      e.sums = sums;
      e.status = m.status;
      e.max_edges = m.value;
      if (m.witness) e.witness = encode_graph6(*m.witness);
      e.lbeg = lbeg_count(nn, sums);
      e.ubeg = ubeg_bound(nn, sums);
      e.turan = turan_bound(nn, sums);
      e.conjecture_tight = m.status == EntryStatus::exact && m.value == e.lbeg;
      table.entries.push_back(std::move(e));
    }
  }
  return table;
}

std::vector<ConjectureRow> conjecture_probe(std::size_t n_max, const SolverOptions& options, unsigned workers) {
  std::vector<ConjectureRow> rows;
  for (const auto& e : build_extremal_table(n_max, options, workers).entries) {
    if (e.status != EntryStatus::exact) continue;
    rows.push_back({e.n, e.sums, e.max_edges, e.lbeg, e.conjecture_tight});
  }
  return rows;
}

std::string to_string(EntryStatus s) {
  switch (s) {
    case EntryStatus::exact: return "exact";
    case EntryStatus::none: return "none";
    case EntryStatus::unknown: return "unknown";
  }
  return "?";
}

std::string ExtremalTable::to_csv() const {
  std::ostringstream out;
  out << "n,N,status,max_edges,lbeg,ubeg,turan,tight,witness\n";
  for (const auto& e : entries) {
    out << e.n << ',' << e.sums << ',' << to_string(e.status) << ',';
    if (e.status == EntryStatus::exact) out << e.max_edges;
    out << ',' << e.lbeg << ',' << e.ubeg << ',' << e.turan << ',' << (e.conjecture_tight ? "yes" : "no") << ','
        << e.witness << '\n';
  }
  return out.str();
}

std::string ExtremalTable::to_json() const {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json row;
    row["n"] = e.n;
    row["N"] = e.sums;
    row["status"] = to_string(e.status);
    row["max_edges"] = e.status == EntryStatus::exact ? nlohmann::ordered_json(e.max_edges) : nullptr;
    row["witness"] = e.witness.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(e.witness);
    row["lbeg"] = e.lbeg;
    row["ubeg"] = e.ubeg;
    row["turan"] = e.turan;
    row["conjecture_tight"] = e.conjecture_tight;
    rows.push_back(std::move(row));
  }
  return nlohmann::ordered_json{{"entries", rows}}.dump(2);
}

}  // namespace sumdex
