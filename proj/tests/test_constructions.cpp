#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "contexts.hpp"

using namespace valgroup;
using namespace valgroup::testctx;

TEST_CASE("canonicalization reduces and is idempotent") {
  auto f2 = make_F2();
  GroupElement aa = multiply(w(f2, "a"), w(f2, "a^-1"));
  CHECK(is_identity(aa));

  auto p = make_P();
  CHECK(is_identity(power(w(p, "y"), 3)));
  CHECK(power(w(p, "y"), 2) == w(p, "y2"));

  auto h = make_H();
  // Britton pinch: t^-1 u^2 t = phi(u^2) = u^2
  CHECK(w(h, "t^-1 u2 t") == w(h, "u2"));
  CHECK(length(w(h, "u2")) == 0);
  // no pinch when the base element is off the associated subgroup
  CHECK(length(w(h, "t^-1 u1 t")) == 2);

  for (const ContextPtr& ctx : {make_F2(), make_P(), make_Q(), make_M(), make_H(), make_H2()}) {
    Ball ball = enumerate_ball(*ctx, 2);
    for (const GroupElement& g : ball.elements) {
      CHECK(canonicalize(*ctx, g.atoms) == g);
      CHECK(multiply(g, identity_element(*ctx)) == g);
      CHECK(multiply(identity_element(*ctx), g) == g);
      CHECK(is_identity(multiply(g, invert(g))));
    }
  }
}

TEST_CASE("multiplication examples") {
  auto p = make_P();
  CHECK(multiply(w(p, "x y"), w(p, "y2")) == w(p, "x"));
  CHECK(invert(w(p, "x y")) == w(p, "y2 x"));
  CHECK(conjugate(w(p, "y"), w(p, "x")) == w(p, "x y x"));

  auto m = make_M();
  // x^2 ~ y^3 is the amalgamated C2
  CHECK(w(m, "x2") == w(m, "y3"));
  CHECK(length(w(m, "x2")) == 0);
  CHECK(length(w(m, "x")) == 1);
  CHECK(length(w(m, "x y")) == 2);
}

TEST_CASE("lengths") {
  auto h = make_H();
  CHECK(length(identity_element(*h)) == 0);
  CHECK(length(w(h, "t")) == 1);
  CHECK(length(w(h, "t^2")) == 2);
  CHECK(length(w(h, "u1")) == 0);
  CHECK(length(w(h, "t u1 t^-1")) == 2);

  auto p = make_P();
  CHECK(length(w(p, "x y x")) == 3);
  auto f2 = make_F2();
  CHECK(length(w(f2, "a^3 b^-2")) == 5);
}

TEST_CASE("ball enumeration") {
  auto p = make_P();
  Ball b1 = enumerate_ball(*p, 1);
  REQUIRE(b1.size() == 4);
  CHECK(b1.elements[0] == identity_element(*p));
  CHECK(b1.contains(w(p, "x")));
  CHECK(b1.contains(w(p, "y")));
  CHECK(b1.contains(w(p, "y2")));

  CHECK(enumerate_ball(*p, 4).size() == 22);
  CHECK(enumerate_ball(*make_F2(), 2).size() == 17);
  CHECK(enumerate_ball(*make_M(), 0).size() == 2);
  CHECK(enumerate_ball(*make_H(), 0).size() == 4);
  CHECK(enumerate_ball(*make_H2(), 4).size() == 36);
}

TEST_CASE("ball invariants") {
  for (const ContextPtr& ctx : {make_P(), make_M(), make_H2()}) {
    Ball b2 = enumerate_ball(*ctx, 2);
    Ball b3 = enumerate_ball(*ctx, 3);
    // nesting: ball(2) is the length <= 2 prefix of ball(3)
    REQUIRE(b3.size() >= b2.size());
    for (std::size_t i = 0; i < b2.size(); ++i) CHECK(b3.elements[i] == b2.elements[i]);

    for (std::size_t i = 0; i < b3.size(); ++i) {
      const GroupElement& g = b3.elements[i];
      CHECK(length(g) <= 3);
      CHECK(b3.elements[b3.inverse_at[i]] == invert(g));
      CHECK(length(invert(g)) == length(g));
      CHECK(b3.index_of(g) == i);
    }

    // triangle inequality on all pairs within reach
    for (const GroupElement& x : b2.elements)
      for (const GroupElement& y : b2.elements) {
        int lp = length(multiply(x, y));
        CHECK(lp <= length(x) + length(y));
        CHECK(lp >= std::abs(length(x) - length(y)));
      }
  }
}

TEST_CASE("generating sphere") {
  auto m = make_M();
  for (const GroupElement& s : generating_sphere(*m)) CHECK(length(s) <= 1);
  // S = ball(1) for every kind
  for (const ContextPtr& ctx : {make_F2(), make_P(), make_M(), make_H(), make_H2()}) {
    Ball b1 = enumerate_ball(*ctx, 1);
    auto sphere = generating_sphere(*ctx);
    REQUIRE(sphere.size() == b1.size());
    for (std::size_t i = 0; i < sphere.size(); ++i) CHECK(sphere[i] == b1.elements[i]);
  }
}

TEST_CASE("product is independent of bracketing") {
  std::mt19937 rng(20240817);
  for (const ContextPtr& ctx : {make_F2(), make_P(), make_M(), make_H(), make_H2()}) {
    auto sphere = generating_sphere(*ctx);
    std::uniform_int_distribution<std::size_t> pick(0, sphere.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<GroupElement> parts;
      for (int i = 0; i < 6; ++i) parts.push_back(sphere[pick(rng)]);

      GroupElement left = identity_element(*ctx);
      for (const auto& g : parts) left = multiply(left, g);
      GroupElement right = identity_element(*ctx);
      for (auto it = parts.rbegin(); it != parts.rend(); ++it) right = multiply(*it, right);

      std::vector<Atom> raw;
      for (const auto& g : parts) raw.insert(raw.end(), g.atoms.begin(), g.atoms.end());

      CHECK(left == right);
      CHECK(left == canonicalize(*ctx, raw));
    }
  }
}

TEST_CASE("capacity cap") {
  auto f2 = make_F2();
  try {
    enumerate_ball(*f2, 4, 10);
    FAIL("capacity error expected");
  } catch (const Error& e) {
    CHECK(e.code() == errc::capacity);
  }
}

TEST_CASE("construction validation") {
  auto c4 = make_cyclic_group(4);
  auto c6 = make_cyclic_group(6);
  Subgroup a1 = subgroup_from_generators(c4, {2});
  Subgroup a2 = subgroup_from_generators(c6, {3});
  Subgroup wrong = subgroup_from_generators(c6, {2});
  Isomorphism phi = make_isomorphism(a1, a2, {{2, 3}});
  CHECK_THROWS_AS(build_amalgam(c4, c6, a1, wrong, phi), Error);
  CHECK_THROWS_AS(build_free_group(0), Error);
}
