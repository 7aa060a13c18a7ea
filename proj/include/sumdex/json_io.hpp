#pragma once

#include "sumdex/bounds.hpp"
#include "sumdex/constructions.hpp"
#include "sumdex/exact_solver.hpp"
#include "sumdex/group.hpp"
#include "sumdex/labeling.hpp"

#include <json.hpp>

#include <optional>
#include <string_view>

namespace sumdex {

using Json = nlohmann::ordered_json;

// {"graph6", "ranks", "sums", "sum_count"}; ranks and sums as decimal strings.
Json labeling_json(const Graph& g, const Labeling& f);

struct LabeledGraph {
  Graph graph;
  Labeling labeling;
  std::optional<long long> recorded_sum_count;
};
// Reads a Labeling JSON document (extra keys are ignored). Throws ParseError on
// malformed JSON and InputError on missing or ill-typed fields.
LabeledGraph parse_labeling_json(std::string_view text);

Json certificate_json(const Graph& g, const SumIndexCertificate& cert);
Json bounds_json(const Graph& g, const BoundReport& report);
// Labeling JSON plus "claimed", "achieved" and any construction details.
Json construction_json(const ConstructionResult& r);

Json element_list_json(const std::vector<GroupElement>& xs);
Json group_index_json(const AbelianGroup& a, const Graph& g, const GroupSumIndex& r);
Json restricted_minimum_json(const AbelianGroup& a, std::size_t m, const RestrictedMinimum& r);
Json zp2_json(const Zp2Construction& r);

}  // namespace sumdex
