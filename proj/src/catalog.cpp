#include "sumdex/catalog.hpp"

namespace sumdex {

std::vector<FamilySpec> closed_form_catalog() {
  std::vector<FamilySpec> out;
  for (std::int64_t n = 3; n <= 5; ++n) out.push_back({FamilyKind::complete, {n}});
  for (std::int64_t m = 1; m <= 5; ++m) {
    for (std::int64_t n = 1; n <= m && m + n <= 6; ++n) out.push_back({FamilyKind::complete_bipartite, {m, n}});
  }
  for (std::int64_t m = 3; m <= 8; ++m) out.push_back({FamilyKind::cycle, {m}});
  out.push_back({FamilyKind::hypercube, {2}});
  out.push_back({FamilyKind::hypercube, {3}});
  for (std::int64_t n = 1; n <= 3; ++n) out.push_back({FamilyKind::cluster, {n, 3}});
  out.push_back({FamilyKind::cluster, {2, 4}});
  out.push_back({FamilyKind::complete_multipartite, {2, 1, 1}});
  out.push_back({FamilyKind::complete_multipartite, {2, 2, 1}});
  return out;
}

}  // namespace sumdex
