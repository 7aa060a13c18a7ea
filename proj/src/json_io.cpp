#include "sumdex/json_io.hpp"

#include "sumdex/errors.hpp"
#include "sumdex/graph_io.hpp"

namespace sumdex {
namespace {

Json decimal_array(const std::vector<BigInt>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_decimal(x));
  return out;
}

BigInt read_integer(const Json& v, const char* field) {
  if (v.is_string()) return parse_decimal(v.get<std::string>());
  if (v.is_number_integer()) return BigInt(v.get<long long>());
  throw InputError(std::string("field '") + field + "' must hold integers or decimal strings");
}

const char* status_name(CertificateStatus s) { return s == CertificateStatus::exact ? "exact" : "unknown"; }
const char* status_name(GroupStatus s) { return s == GroupStatus::exact ? "exact" : "unknown"; }

}  // namespace

Json labeling_json(const Graph& g, const Labeling& f) {
  const auto sig = rank_sums(g, f);
  Json out;
  out["graph6"] = encode_graph6(g);
  out["ranks"] = decimal_array(f.ranks);
  out["sums"] = decimal_array(sig.sums);
  out["sum_count"] = sig.count();
  return out;
}

LabeledGraph parse_labeling_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  // A certificate or construction wraps the labeling under "witness".
  const Json* node = &doc;
  if (doc.is_object() && !doc.contains("ranks") && doc.contains("witness")) node = &doc["witness"];
  if (!node->is_object()) throw InputError("labeling JSON must be an object");
  if (!node->contains("graph6") || !(*node)["graph6"].is_string()) throw InputError("labeling JSON needs a graph6 string");
  if (!node->contains("ranks") || !(*node)["ranks"].is_array()) throw InputError("labeling JSON needs a ranks array");
  LabeledGraph out;
  out.graph = decode_graph6((*node)["graph6"].get<std::string>());
  for (const auto& r : (*node)["ranks"]) out.labeling.ranks.push_back(read_integer(r, "ranks"));
  if (node->contains("sum_count")) {
    const auto& c = (*node)["sum_count"];
    if (!c.is_number_integer()) throw InputError("sum_count must be an integer");
    out.recorded_sum_count = c.get<long long>();
  }
  return out;
}

Json certificate_json(const Graph& g, const SumIndexCertificate& cert) {
  Json out;
  out["graph6"] = encode_graph6(g);
  out["status"] = status_name(cert.status);
  out["sum_index"] = cert.status == CertificateStatus::exact ? Json(cert.value) : Json(nullptr);
  out["lower"] = cert.lower;
  out["upper"] = cert.upper;
  out["witness"] = labeling_json(g, cert.witness);
  Json ev;
  const auto& le = cert.lower_evidence;
  ev["method"] = le.method == LowerEvidence::Method::bound ? "bound" : "exhaustion";
  ev["bound_value"] = le.bound_value;
  ev["bound_method"] = le.bound_method;
  ev["k_range"] = le.k_range;
  ev["nodes"] = le.nodes;
  out["lower_evidence"] = ev;
  out["budget_used"] = cert.budget_used;
  if (!cert.note.empty()) out["note"] = cert.note;
  return out;
}

Json bounds_json(const Graph& g, const BoundReport& r) {
  Json out;
  out["graph6"] = encode_graph6(g);
  out["max_degree"] = r.max_degree;
  out["chromatic_index"] = {{"lower", r.chromatic_index_lower},
                            {"upper", r.chromatic_index_upper},
                            {"exact", r.chromatic_index_exact}};
  out["haslegrave"] = r.haslegrave;
  out["trivial_upper"] = r.trivial_upper;
  out["best_lower"] = r.best_lower;
  out["best_upper"] = r.best_upper;
  out["lower_method"] = r.lower_method;
  out["upper_method"] = r.upper_method;
  return out;
}

Json construction_json(const ConstructionResult& r) {
  Json out = labeling_json(r.graph, r.labeling);
  out["family"] = r.graph.family_tag();
  out["claimed"] = r.claimed;
  out["achieved"] = r.achieved;
  for (const auto& [k, v] : r.details) out["details"][k] = v;
  return out;
}

Json element_list_json(const std::vector<GroupElement>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x);
  return out;
}

Json group_index_json(const AbelianGroup& a, const Graph& g, const GroupSumIndex& r) {
  Json out;
  out["group"] = a.moduli();
  out["graph6"] = encode_graph6(g);
  out["status"] = status_name(r.status);
  out["value"] = r.value;
  out["lower"] = r.lower;
  out["witness"] = element_list_json(r.witness);
  out["nodes"] = r.nodes;
  return out;
}

Json restricted_minimum_json(const AbelianGroup& a, std::size_t m, const RestrictedMinimum& r) {
  Json out;
  out["group"] = a.moduli();
  out["m"] = m;
  out["status"] = status_name(r.status);
  out["value"] = r.value;
  out["witness"] = element_list_json(r.witness);
  out["subsets_evaluated"] = r.subsets_evaluated;
  out["subsets_covered"] = r.subsets_covered;
  out["subsets_total"] = r.subsets_total;
  return out;
}

Json zp2_json(const Zp2Construction& r) {
  Json out;
  out["p"] = r.p;
  out["subset"] = element_list_json(r.subset);
  out["sums"] = element_list_json(r.sums);
  out["achieved"] = r.achieved;
  out["expected"] = 4 * r.p;
  return out;
}

}  // namespace sumdex
