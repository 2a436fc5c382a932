#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "contexts.hpp"
#include "valgroup/normal_forms.hpp"
#include "valgroup/valuation.hpp"

using namespace valgroup;
using namespace valgroup::testctx;

namespace {

GroupElement product_of(const std::vector<GroupElement>& pieces, const GroupContext& ctx) {
  GroupElement acc = identity_element(ctx);
  for (const auto& p : pieces) acc = multiply(acc, p);
  return acc;
}

void check_form(const SReducedForm& f) {
  REQUIRE((int)f.pieces.size() == length(f.element));
  CHECK(product_of(f.pieces, *f.element.ctx) == f.element);
  for (const auto& p : f.pieces) {
    CHECK(length(p) <= 1);
    CHECK_FALSE(is_identity(p));
  }
  REQUIRE(f.junction_lengths.size() + 1 == f.pieces.size());
  for (std::size_t i = 0; i + 1 < f.pieces.size(); ++i) {
    CHECK(f.junction_lengths[i] == 2);
    CHECK(length(multiply(f.pieces[i], f.pieces[i + 1])) == 2);
  }
}

}  // namespace

TEST_CASE("s_reduced_decomposition examples") {
  auto p = make_P();
  SReducedForm f = s_reduced_decomposition(w(p, "x y x"));
  REQUIRE(f.pieces.size() == 3);
  CHECK(f.pieces[0] == w(p, "x"));
  CHECK(f.pieces[1] == w(p, "y"));
  CHECK(f.pieces[2] == w(p, "x"));
  check_form(f);

  auto f2 = make_F2();
  SReducedForm g = s_reduced_decomposition(w(f2, "a b^-1"));
  REQUIRE(g.pieces.size() == 2);
  CHECK(g.pieces[0] == w(f2, "a"));
  CHECK(g.pieces[1] == w(f2, "b^-1"));

  CHECK_THROWS_AS(s_reduced_decomposition(identity_element(*p)), Error);
  auto m = make_M();
  CHECK_THROWS_AS(s_reduced_decomposition(w(m, "x2")), Error);
}

TEST_CASE("s_reduced_decomposition on whole balls") {
  for (const ContextPtr& ctx : {make_P(), make_Q(), make_M(), make_H(), make_H2()}) {
    Ball ball = enumerate_ball(*ctx, 3);
    for (const GroupElement& g : ball.elements) {
      if (length(g) == 0) continue;
      check_form(s_reduced_decomposition(g));
    }
  }
}

TEST_CASE("concatenation cases") {
  auto p = make_P();
  auto form = [&](const char* s) { return s_reduced_decomposition(w(p, s)); };

  // junction length 2: plain concatenation
  ConcatResult r = concat_normal_forms(form("x y"), form("x y"));
  CHECK(r.top_case == ConcatCase::full_junction);
  CHECK(r.result.element == w(p, "x y x y"));
  CHECK(r.cancellations == 0);

  // junction length 1: seam pieces merge (y * y = y^2 stays a unit)
  r = concat_normal_forms(form("x y"), form("y x"));
  CHECK(r.top_case == ConcatCase::merged_junction);
  CHECK(r.result.element == w(p, "x y2 x"));
  CHECK(r.result.pieces.size() == 3);

  // junction length 0: cancellation cascades
  r = concat_normal_forms(form("x y"), form("y2 x"));
  CHECK(r.top_case == ConcatCase::cancellation);
  CHECK(r.cancellations >= 1);
  CHECK(is_identity(r.result.element));
  CHECK(r.result.pieces.empty());

  // concat agrees with multiply on all pairs in a ball
  Ball ball = enumerate_ball(*p, 3);
  for (const GroupElement& x : ball.elements)
    for (const GroupElement& y : ball.elements) {
      if (length(x) == 0 || length(y) == 0) continue;
      ConcatResult c = concat_normal_forms(s_reduced_decomposition(x), s_reduced_decomposition(y));
      CHECK(c.result.element == multiply(x, y));
      if (length(c.result.element) >= 1) check_form(c.result);
    }
}

TEST_CASE("concatenation with nontrivial B leftovers") {
  auto m = make_M();
  Ball ball = enumerate_ball(*m, 3);
  for (const GroupElement& x : ball.elements)
    for (const GroupElement& y : ball.elements) {
      if (length(x) == 0 || length(y) == 0) continue;
      ConcatResult c = concat_normal_forms(s_reduced_decomposition(x), s_reduced_decomposition(y));
      CHECK(c.result.element == multiply(x, y));
    }
}

TEST_CASE("cyclic reducedness predicates") {
  auto p = make_P();
  CHECK(is_cyclically_reduced(identity_element(*p)));
  CHECK(is_cyclically_reduced(w(p, "x")));
  CHECK(is_cyclically_reduced(w(p, "x y")));
  CHECK_FALSE(is_cyclically_reduced(w(p, "x y x")));
  CHECK_FALSE(is_weakly_cyclically_reduced(w(p, "x y x")));

  // y x y: (yxy)^2 = yxy^2xy has length 5 = 2*3 - 1, weakly but not c.r.
  CHECK_FALSE(is_cyclically_reduced(w(p, "y x y")));
  CHECK(is_weakly_cyclically_reduced(w(p, "y x y")));

  // c.r. implies w.c.r. everywhere
  for (const ContextPtr& ctx : {make_P(), make_M(), make_H()}) {
    Ball ball = enumerate_ball(*ctx, 3);
    for (const GroupElement& g : ball.elements)
      if (is_cyclically_reduced(g)) CHECK(is_weakly_cyclically_reduced(g));
  }
}

TEST_CASE("cyclic_reduce") {
  auto p = make_P();
  CyclicReduction cr = cyclic_reduce(w(p, "x y x"));
  CHECK(cr.conjugator == w(p, "x"));
  CHECK(cr.core == w(p, "y"));
  CHECK(multiply(invert(cr.conjugator), cr.core, cr.conjugator) == cr.original);

  // already reduced: trivial conjugator
  cr = cyclic_reduce(w(p, "x y"));
  CHECK(is_identity(cr.conjugator));
  CHECK(cr.core == w(p, "x y"));

  for (const ContextPtr& ctx : {make_P(), make_M()}) {
    Ball ball = enumerate_ball(*ctx, 4);
    for (const GroupElement& g : ball.elements) {
      CyclicReduction c = cyclic_reduce(g);
      CHECK(c.original == g);
      CHECK(is_cyclically_reduced(c.core));
      CHECK(multiply(invert(c.conjugator), c.core, c.conjugator) == g);
      if (in_N(g)) {
        CHECK(length(g) == 2 * length(c.conjugator) + length(c.core));
        CHECK(length(c.core) <= 1);
        CHECK(in_N(c.core));
      }
    }
  }
}
