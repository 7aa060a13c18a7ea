#include <doctest.h>

#include "sumdex/errors.hpp"
#include "sumdex/labeling.hpp"

using namespace sumdex;

namespace {
std::vector<BigInt> big(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }
}  // namespace

TEST_CASE("rank sums of small graphs") {
  const auto k3 = rank_sums(complete_graph(3), labeling_from({1, 2, 3}));
  CHECK(k3.sums == big({3, 4, 5}));
  CHECK(k3.count() == 3);

  // Part {1,2} against {3,4,5}.
  const auto k23 = rank_sums(complete_multipartite({3, 2}), labeling_from({3, 4, 5, 1, 2}));
  CHECK(k23.sums == big({4, 5, 6, 7}));

  CHECK(rank_sums(complete_graph(2), labeling_from({0, 7})).sums == big({7}));
  CHECK(rank_sums(empty_graph(3), labeling_from({5, 1, 2})).count() == 0);
}

TEST_CASE("validation reports duplicates and domain mismatch") {
  auto dup = validate_labeling(complete_graph(3), labeling_from({1, 1, 2}));
  REQUIRE(dup);
  CHECK(dup->kind == LabelingViolation::Kind::duplicate_rank);
  CHECK(dup->first == 0);
  CHECK(dup->second == 1);

  auto later = validate_labeling(complete_graph(4), labeling_from({9, 3, 5, 3}));
  REQUIRE(later);
  CHECK(later->first == 1);
  CHECK(later->second == 3);

  CHECK_FALSE(validate_labeling(complete_graph(3), labeling_from({1, 2, 3})));

  auto dom = validate_labeling(complete_graph(3), labeling_from({1, 2}));
  REQUIRE(dom);
  CHECK(dom->kind == LabelingViolation::Kind::domain_mismatch);

  CHECK_THROWS_AS(rank_sums(complete_graph(3), labeling_from({1, 1, 2})), InputError);
  CHECK_THROWS_AS(rank_sums(complete_graph(3), labeling_from({1, 2, 3, 4})), InputError);
}

TEST_CASE("affine maps") {
  const Labeling f = labeling_from({1, 2, 3});
  CHECK(affine_map(f, 1, 0) == f);
  const Labeling neg = affine_map(f, -1, 0);
  CHECK(neg == labeling_from({-1, -2, -3}));
  CHECK(rank_sums(complete_graph(3), neg).sums == big({-5, -4, -3}));
  CHECK(affine_map(f, 2, 5) == labeling_from({7, 9, 11}));
  CHECK_FALSE(validate_labeling(complete_graph(3), affine_map(f, 2, 5)));
  CHECK_THROWS_AS(affine_map(f, 0, 1), InputError);
}

TEST_CASE("ranks are arbitrary precision") {
  const BigInt huge = parse_decimal("123456789012345678901234567890");
  Labeling f{{huge, huge + 1}};
  const auto s = rank_sums(complete_graph(2), f);
  CHECK(to_decimal(s.sums[0]) == "246913578024691357802469135781");
  CHECK(parse_decimal("-42") == -42);
  CHECK_THROWS_AS(parse_decimal("4x2"), InputError);
  CHECK_THROWS_AS(parse_decimal(""), InputError);
  CHECK_THROWS_AS(parse_decimal("-"), InputError);
}

TEST_CASE("identity labeling") {
  CHECK(identity_labeling(3) == labeling_from({1, 2, 3}));
  CHECK(identity_labeling(2, 0) == labeling_from({0, 1}));
}
