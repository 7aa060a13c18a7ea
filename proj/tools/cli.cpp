#include "cli.hpp"

#include "sumdex/bounds.hpp"
#include "sumdex/catalog.hpp"
#include "sumdex/constructions.hpp"
#include "sumdex/errors.hpp"
#include "sumdex/exact_solver.hpp"
#include "sumdex/extremal.hpp"
#include "sumdex/graph_io.hpp"
#include "sumdex/group.hpp"
#include "sumdex/json_io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sumdex::cli {
namespace {

struct Common {
  std::string graph6;
  std::string file;
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  std::uint64_t nodes = kDefaultNodeBudget;
  double time_limit = 0;
  std::size_t max_edges = kDefaultMaxEdges;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

Graph load_graph(const Common& c) {
  if (c.graph6.empty() == c.file.empty()) throw InputError("give exactly one of --graph6 or --file");
  if (!c.graph6.empty()) return decode_graph6(c.graph6);
  return decode_graph_text(read_file(c.file));
}

SolverOptions solver_options(const Common& c) {
  SolverOptions o;
  o.node_budget = c.nodes;
  o.threads = std::max(1u, c.threads);
  o.seed = c.seed;
  o.max_edges = c.max_edges;
  if (c.time_limit > 0) {
    o.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(c.time_limit));
  }
  return o;
}

std::string join_decimal(const std::vector<BigInt>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + to_decimal(xs[i]);
  return out;
}

std::string tuple_text(const GroupElement& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + std::to_string(x[i]);
  return out + ")";
}

std::string tuples_text(const std::vector<GroupElement>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + tuple_text(xs[i]);
  return out;
}

void add_graph_flags(CLI::App* sub, Common& c) {
  sub->add_option("--graph6", c.graph6, "graph in graph6 format");
  sub->add_option("--file", c.file, "file holding graph6 text or an edge list");
}

void add_solver_flags(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "seed for witness generation");
  sub->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1u, 256u));
  sub->add_option("--nodes", c.nodes, "search node budget");
  sub->add_option("--time-limit", c.time_limit, "wall-clock limit in seconds (0 = none)");
  sub->add_option("--max-edges", c.max_edges, "refuse exhaustive search above this many edges");
}

// ---------------------------------------------------------------------------

int cmd_gen(const std::string& family, const std::vector<std::int64_t>& params, bool edge_list, const Common& c,
            std::ostream& out) {
  const Graph g = generate(FamilySpec{parse_family_kind(family), params});
  if (c.json) {
    Json j;
    j["family"] = g.family_tag();
    j["n"] = g.order();
    j["m"] = g.size();
    j["graph6"] = encode_graph6(g);
    out << j.dump(2) << '\n';
  } else if (edge_list) {
    out << encode_edge_list(g);
  } else {
    out << encode_graph6(g) << '\n';
  }
  return kOk;
}

int cmd_exact(const Common& c, std::ostream& out) {
  const Graph g = load_graph(c);
  const auto cert = sum_index_exact(g, solver_options(c));
  const std::string problem = check_certificate(g, cert);
  if (!problem.empty()) throw ValidationError("certificate failed its own check: " + problem);
  if (c.json) {
    out << certificate_json(g, cert).dump(2) << '\n';
  } else {
    out << "graph " << encode_graph6(g) << " n=" << g.order() << " m=" << g.size() << '\n';
    if (cert.status == CertificateStatus::exact) {
      out << "sum_index " << cert.value << '\n';
    } else {
      out << "sum_index unknown, bracket [" << cert.lower << ", " << cert.upper << "]\n";
    }
    const auto& ev = cert.lower_evidence;
    if (ev.method == LowerEvidence::Method::bound) {
      out << "lower_evidence bound " << ev.bound_method << " = " << ev.bound_value << '\n';
    } else {
      out << "lower_evidence exhaustion of k =";
      for (auto k : ev.k_range) out << ' ' << k;
      out << '\n';
    }
    out << "witness " << join_decimal(cert.witness.ranks) << '\n';
    out << "sums " << join_decimal(rank_sums(g, cert.witness).sums) << '\n';
    out << "nodes " << cert.budget_used << '\n';
    if (!cert.note.empty()) out << "note " << cert.note << '\n';
  }
  return cert.status == CertificateStatus::exact ? kOk : kUnknown;
}

int cmd_bounds(const Common& c, std::ostream& out) {
  const Graph g = load_graph(c);
  const auto r = sum_index_bounds(g);
  if (c.json) {
    out << bounds_json(g, r).dump(2) << '\n';
    return kOk;
  }
  out << "max_degree " << r.max_degree << '\n'
      << "chromatic_index " << r.chromatic_index_lower << ".." << r.chromatic_index_upper
      << (r.chromatic_index_exact ? " (exact)" : "") << '\n'
      << "haslegrave " << r.haslegrave << '\n'
      << "trivial_upper " << r.trivial_upper << '\n'
      << "lower " << r.best_lower << " (" << r.lower_method << ")\n"
      << "upper " << r.best_upper << " (" << r.upper_method << ")\n";
  return kOk;
}

std::vector<std::size_t> as_sizes(const std::vector<std::int64_t>& params) {
  std::vector<std::size_t> out;
  for (auto p : params) {
    if (p < 0) throw InputError("sizes must be non-negative");
    out.push_back(static_cast<std::size_t>(p));
  }
  return out;
}

int cmd_construct(const std::string& kind, const std::vector<std::int64_t>& params, const Common& c, std::ostream& out) {
  const auto p = as_sizes(params);
  auto need = [&](std::size_t k) {
    if (p.size() != k) throw InputError(kind + " takes " + std::to_string(k) + " parameter(s)");
  };
  ConstructionResult r;
  if (kind == "multipartite" || kind == "bipartite") {
    r = label_multipartite(p);
  } else if (kind == "join") {
    r = label_join_family(p);
  } else if (kind == "hypercube") {
    need(1);
    r = label_hypercube(p[0]);
  } else if (kind == "cluster") {
    need(2);
    r = label_cluster(p[0], p[1]);
  } else if (kind == "extremal") {
    need(2);
    r = extremal_construction(p[0], p[1]);
  } else {
    throw InputError("unknown construction '" + kind + "' (multipartite, join, hypercube, cluster, extremal)");
  }
  if (c.json) {
    out << construction_json(r).dump(2) << '\n';
    return kOk;
  }
  out << "graph " << r.graph.family_tag() << " n=" << r.graph.order() << " m=" << r.graph.size() << '\n'
      << "claimed " << r.claimed << '\n'
      << "achieved " << r.achieved << '\n';
  for (const auto& [k, v] : r.details) out << k << ' ' << v << '\n';
  out << "ranks " << join_decimal(r.labeling.ranks) << '\n'
      << "sums " << join_decimal(rank_sums(r.graph, r.labeling).sums) << '\n';
  return kOk;
}

int cmd_verify(const Common& c, std::ostream& out, std::ostream& err) {
  if (c.file.empty()) throw InputError("verify needs --file with a labeling JSON document");
  const auto doc = parse_labeling_json(read_file(c.file));
  if (auto bad = validate_labeling(doc.graph, doc.labeling)) throw InputError(bad->message);
  const auto count = static_cast<long long>(rank_sums(doc.graph, doc.labeling).count());
  if (c.json) {
    Json j = labeling_json(doc.graph, doc.labeling);
    j["recorded_sum_count"] = doc.recorded_sum_count ? Json(*doc.recorded_sum_count) : Json(nullptr);
    j["matches"] = !doc.recorded_sum_count || *doc.recorded_sum_count == count;
    out << j.dump(2) << '\n';
  } else {
    out << "sum_count " << count << '\n';
  }
  if (doc.recorded_sum_count && *doc.recorded_sum_count != count) {
    err << "recorded sum_count " << *doc.recorded_sum_count << " but the labeling gives " << count << '\n';
    return kValidationFailure;
  }
  return kOk;
}

int cmd_extremal(std::size_t n_max, const Common& c, std::ostream& out) {
  const auto table = build_extremal_table(n_max, solver_options(c), std::max(1u, c.threads));
  out << (c.json ? table.to_json() + "\n" : table.to_csv());
  for (const auto& e : table.entries) {
    if (e.status == EntryStatus::unknown) return kUnknown;
  }
  return kOk;
}

int cmd_group_min(const std::string& group, std::size_t m, bool full, const Common& c, std::ostream& out) {
  const auto a = AbelianGroup::parse(group);
  const auto r = min_restricted_sumset_complete(a, m, c.nodes, !full);
  if (c.json) {
    out << restricted_minimum_json(a, m, r).dump(2) << '\n';
  } else {
    out << "group " << a.name() << " m=" << m << '\n';
    out << (r.status == GroupStatus::exact ? "minimum " : "best_found ") << r.value << '\n';
    out << "witness " << tuples_text(r.witness) << '\n';
    out << "subsets " << r.subsets_evaluated << " evaluated, " << r.subsets_covered << " covered of "
        << r.subsets_total << '\n';
  }
  return r.status == GroupStatus::exact ? kOk : kUnknown;
}

int cmd_group_index(const std::string& group, const Common& c, std::ostream& out) {
  const auto a = AbelianGroup::parse(group);
  const Graph g = load_graph(c);
  const auto r = group_sum_index(g, a, c.nodes);
  if (c.json) {
    out << group_index_json(a, g, r).dump(2) << '\n';
  } else {
    out << "group " << a.name() << '\n';
    if (r.status == GroupStatus::exact) out << "group_sum_index " << r.value << '\n';
    else out << "group_sum_index unknown, bracket [" << r.lower << ", " << r.value << "]\n";
    out << "witness " << tuples_text(r.witness) << '\n';
  }
  return r.status == GroupStatus::exact ? kOk : kUnknown;
}

int cmd_group_zp2(std::int64_t p, const Common& c, std::ostream& out) {
  const auto r = zp2_construction(p);
  if (c.json) {
    out << zp2_json(r).dump(2) << '\n';
  } else {
    out << "p " << p << " |X| " << r.subset.size() << " achieved " << r.achieved << " (4p = " << 4 * p << ")\n";
    out << "subset " << tuples_text(r.subset) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// repro

struct Report {
  std::ostream& out;
  int failures = 0;

  void check(bool ok, const std::string& what) {
    out << (ok ? "PASS " : "FAIL ") << what << '\n';
    if (!ok) ++failures;
  }
};

void repro_catalog(const Common& c, const std::filesystem::path& dir, Report& rep) {
  std::ostringstream csv;
  csv << "family,graph6,expected,solver,status,lower_evidence\n";
  Json rows = Json::array();
  for (const auto& spec : closed_form_catalog()) {
    const Graph g = generate(spec);
    const auto cert = sum_index_exact(g, solver_options(c));
    const long long expected = *known_formula(spec);
    const bool ok = cert.status == CertificateStatus::exact && cert.value == expected && check_certificate(g, cert).empty();
    const std::string evidence =
        cert.lower_evidence.method == LowerEvidence::Method::bound ? cert.lower_evidence.bound_method : "exhaustion";
    csv << g.family_tag() << ',' << encode_graph6(g) << ',' << expected << ',' << cert.value << ','
        << (cert.status == CertificateStatus::exact ? "exact" : "unknown") << ',' << evidence << '\n';
    Json row = certificate_json(g, cert);
    row["family"] = g.family_tag();
    row["expected"] = expected;
    rows.push_back(std::move(row));
    rep.check(ok, "catalog " + g.family_tag() + ": expected " + std::to_string(expected) + ", solver " +
                      (cert.status == CertificateStatus::exact ? std::to_string(cert.value) : "unknown"));
  }
  write_file(dir / "catalog.csv", csv.str());
  write_file(dir / "catalog.json", rows.dump(2) + "\n");
}

void repro_extremal(const Common& c, const std::filesystem::path& dir, Report& rep) {
  const auto table = build_extremal_table(kMaxExactExtremalOrder, solver_options(c), std::max(1u, c.threads));
  write_file(dir / "extremal_table.csv", table.to_csv());
  write_file(dir / "extremal_table.json", table.to_json() + "\n");
  for (const auto& e : table.entries) {
    const std::string at = "(" + std::to_string(e.n) + "," + std::to_string(e.sums) + ")";
    if (e.status != EntryStatus::exact) {
      rep.check(false, "extremal " + at + " status " + to_string(e.status));
      continue;
    }
    rep.check(e.sandwich_holds(), "extremal " + at + " lbeg " + std::to_string(e.lbeg) + " <= " +
                                      std::to_string(e.max_edges) + " <= min(" + std::to_string(e.ubeg) + ", " +
                                      std::to_string(e.turan) + ")");
    if (e.sums <= 3 && e.n >= 3) {
      const long long closed = max_edges_closed_form(e.n, e.sums);
      rep.check(closed == e.max_edges, "extremal " + at + " closed form " + std::to_string(closed));
    }
  }
}

void repro_zp2(const Common& c, const std::filesystem::path& dir, Report& rep) {
  const AbelianGroup z5({5, 5});
  const auto full = min_restricted_sumset_complete(z5, 11, std::max<std::uint64_t>(c.nodes, kDefaultGroupBudget), false);
  rep.check(full.status == GroupStatus::exact && full.value == 20 && full.subsets_evaluated == full.subsets_total,
            "zp2 exhaustive minimum over " + std::to_string(full.subsets_evaluated) + " subsets = " +
                std::to_string(full.value));
  Json doc;
  doc["exhaustive"] = restricted_minimum_json(z5, 11, full);
  doc["constructions"] = Json::array();
  for (std::int64_t p : {5, 7, 11, 13}) {
    const auto r = zp2_construction(p);
    rep.check(r.achieved == 4 * p, "zp2 construction p=" + std::to_string(p) + " achieves " + std::to_string(r.achieved));
    doc["constructions"].push_back(zp2_json(r));
  }
  write_file(dir / "zp2.json", doc.dump(2) + "\n");
}

void repro_conjecture(const Common& c, const std::filesystem::path& dir, Report& rep) {
  const auto rows = conjecture_probe(kMaxExactExtremalOrder, solver_options(c), std::max(1u, c.threads));
  std::ostringstream csv;
  csv << "n,N,exact,lbeg,tight\n";
  std::size_t tight = 0;
  for (const auto& r : rows) {
    csv << r.n << ',' << r.sums << ',' << r.exact << ',' << r.lbeg << ',' << (r.tight ? "yes" : "no") << '\n';
    tight += r.tight;
  }
  write_file(dir / "conjecture.csv", csv.str());
  rep.out << "conjecture: " << tight << " of " << rows.size() << " entries attained by the layered construction\n";
  rep.check(!rows.empty(), "conjecture probe produced exact data");
}

int cmd_repro(const std::string& target, const std::string& out_dir, const Common& c, std::ostream& out) {
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  Report rep{out};
  if (target == "catalog") repro_catalog(c, dir, rep);
  else if (target == "extremal-table") repro_extremal(c, dir, rep);
  else if (target == "zp2") repro_zp2(c, dir, rep);
  else if (target == "conjecture") repro_conjecture(c, dir, rep);
  else if (target == "all") {
    repro_catalog(c, dir, rep);
    repro_extremal(c, dir, rep);
    repro_zp2(c, dir, rep);
    repro_conjecture(c, dir, rep);
  }
  out << (rep.failures == 0 ? "all checks passed" : std::to_string(rep.failures) + " check(s) failed") << '\n';
  return rep.failures == 0 ? kOk : kValidationFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"sumdex: sum index of graphs"};
  app.name("sumdex");
  app.require_subcommand(1, 1);
  Common c;

  std::string family, kind, target = "all", out_dir = "reports", group = "5,5";
  std::vector<std::int64_t> params;
  bool edge_list = false, full_scan = false;
  std::size_t m = 11, n_max = kMaxExactExtremalOrder;
  std::int64_t p = 5;

  auto* gen = app.add_subcommand("gen", "generate a catalog graph");
  gen->add_option("family", family, "family name")->required();
  gen->add_option("params", params, "family parameters")->required();
  gen->add_flag("--edge-list", edge_list, "print an edge list instead of graph6");
  gen->add_flag("--json", c.json);

  auto* exact = app.add_subcommand("exact", "certified exact sum index");
  add_graph_flags(exact, c);
  add_solver_flags(exact, c);
  exact->add_flag("--json", c.json);

  auto* bounds = app.add_subcommand("bounds", "lower and upper bounds");
  add_graph_flags(bounds, c);
  bounds->add_flag("--json", c.json);

  auto* construct = app.add_subcommand("construct", "explicit labeling constructions");
  construct->add_option("kind", kind, "multipartite | join | hypercube | cluster | extremal")->required();
  construct->add_option("params", params, "construction parameters")->required();
  construct->add_flag("--json", c.json);

  auto* verify = app.add_subcommand("verify", "recompute the sum count of a labeling JSON file");
  verify->add_option("--file", c.file, "labeling JSON")->required();
  verify->add_flag("--json", c.json);

  auto* extremal = app.add_subcommand("extremal", "exact max-edge table for small n");
  extremal->add_option("--n-max", n_max, "largest order")->check(CLI::Range(2, 6));
  add_solver_flags(extremal, c);
  extremal->add_flag("--json", c.json);

  auto* grp = app.add_subcommand("group", "sum index inside finite abelian groups");
  grp->require_subcommand(1, 1);
  auto* gmin = grp->add_subcommand("min-complete", "min |X +^ X| over m-subsets");
  gmin->add_option("--group", group, "moduli, e.g. 5,5");
  gmin->add_option("--m", m, "subset size");
  gmin->add_option("--nodes", c.nodes, "search node budget");
  gmin->add_flag("--full", full_scan, "evaluate every subset without pruning");
  gmin->add_flag("--json", c.json);
  auto* gidx = grp->add_subcommand("index", "group sum index of a graph");
  gidx->add_option("--group", group, "moduli, e.g. 5,5")->required();
  add_graph_flags(gidx, c);
  gidx->add_option("--nodes", c.nodes, "search node budget");
  gidx->add_flag("--json", c.json);
  auto* gzp2 = grp->add_subcommand("zp2", "the 2p+1 element construction in Z_p x Z_p");
  gzp2->add_option("--p", p, "prime >= 5");
  gzp2->add_flag("--json", c.json);

  auto* repro = app.add_subcommand("repro", "regenerate report artifacts");
  repro->add_option("target", target, "catalog | extremal-table | zp2 | conjecture | all")
      ->check(CLI::IsMember({"catalog", "extremal-table", "zp2", "conjecture", "all"}));
  repro->add_option("--out-dir", out_dir, "report directory");
  add_solver_flags(repro, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (gen->parsed()) return cmd_gen(family, params, edge_list, c, out);
    if (exact->parsed()) return cmd_exact(c, out);
    if (bounds->parsed()) return cmd_bounds(c, out);
    if (construct->parsed()) return cmd_construct(kind, params, c, out);
    if (verify->parsed()) return cmd_verify(c, out, err);
    if (extremal->parsed()) return cmd_extremal(n_max, c, out);
    if (gmin->parsed()) return cmd_group_min(group, m, full_scan, c, out);
    if (gidx->parsed()) return cmd_group_index(group, c, out);
    if (gzp2->parsed()) return cmd_group_zp2(p, c, out);
    if (repro->parsed()) return cmd_repro(target, out_dir, c, out);
  } catch (const ValidationError& e) {
    err << "validation failure: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::overflow_error& e) {
    err << "arithmetic overflow: " << e.what() << '\n';
    return kUnknown;
  }
  return kInvalidInput;
}

}  // namespace sumdex::cli
