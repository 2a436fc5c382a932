#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "valgroup/finite_algebra.hpp"

using namespace valgroup;

TEST_CASE("cyclic groups") {
  CHECK(make_cyclic_group(1)->order == 1);

  auto c2 = make_cyclic_group(2);
  CHECK(c2->table == std::vector<std::vector<int>>{{0, 1}, {1, 0}});

  auto c6 = make_cyclic_group(6);
  CHECK(c6->inv(2) == 4);
  CHECK(c6->element_names[3] == "g^3");
  CHECK(c6->pow(1, 4) == 4);
  CHECK(c6->pow(1, -1) == 5);

  CHECK_THROWS_AS(make_cyclic_group(0), Error);
}

TEST_CASE("table validation") {
  CHECK(validate_table({{0, 1}, {1, 0}})->order == 2);

  CHECK_THROWS_WITH_AS(validate_table({{0, 1}, {1, 1}}),
                       doctest::Contains("not a permutation"), Error);

  // Klein four-group: every element is its own inverse
  auto v4 = validate_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  for (int i = 0; i < 4; ++i) CHECK(v4->inv(i) == i);

  CHECK_THROWS_AS(validate_table({}), Error);
  CHECK_THROWS_AS(validate_table({{1, 0}, {0, 1}}), Error);  // 0 not neutral
}

TEST_CASE("group axioms hold exhaustively on a validated table") {
  auto g = make_cyclic_group(6);
  for (int i = 0; i < 6; ++i) {
    CHECK(g->mul(i, 0) == i);
    CHECK(g->mul(0, i) == i);
    CHECK(g->mul(i, g->inv(i)) == 0);
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k)
        CHECK(g->mul(g->mul(i, j), k) == g->mul(i, g->mul(j, k)));
  }
}

TEST_CASE("subgroup generation") {
  auto c4 = make_cyclic_group(4);
  CHECK(subgroup_from_generators(c4, {}).members == std::vector<int>{0});
  CHECK(subgroup_from_generators(c4, {2}).members == std::vector<int>{0, 2});

  auto c6 = make_cyclic_group(6);
  Subgroup s = subgroup_from_generators(c6, {3});
  CHECK(s.members == std::vector<int>{0, 3});
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(1));

  // closing the closed set changes nothing
  CHECK(subgroup_from_generators(c6, s.members).members == s.members);

  CHECK_THROWS_AS(subgroup_from_generators(c4, {7}), Error);
}

TEST_CASE("isomorphisms") {
  auto c4 = make_cyclic_group(4);
  auto c6 = make_cyclic_group(6);
  Subgroup a1 = subgroup_from_generators(c4, {2});
  Subgroup a2 = subgroup_from_generators(c6, {3});

  Isomorphism id = identity_isomorphism(a1);
  CHECK(id.apply(2) == 2);

  Isomorphism phi = make_isomorphism(a1, a2, {{2, 3}});
  CHECK(phi.apply(2) == 3);
  CHECK(phi.apply_inverse(3) == 2);
  for (int m : a1.members) CHECK(phi.apply_inverse(phi.apply(m)) == m);

  Subgroup full = full_subgroup(c4);
  CHECK_THROWS_AS(make_isomorphism(full, full, {{1, 2}}), Error);  // not injective
  CHECK_THROWS_AS(make_isomorphism(a1, full, {{2, 2}}), Error);    // order mismatch
}
