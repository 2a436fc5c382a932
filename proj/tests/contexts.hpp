#pragma once

#include "valgroup/context.hpp"
#include "valgroup/spec_parser.hpp"

namespace valgroup::testctx {

// Shared reference contexts used across the test suites.

inline ContextPtr make_F2() { return build_free_group(2); }

inline ContextPtr make_P() {
  return build_free_product(make_cyclic_group(2), make_cyclic_group(3));
}

inline ContextPtr make_Q() {
  return build_free_product(make_cyclic_group(3), make_cyclic_group(3));
}

// C4 *_{C2} C6 along 2 -> 3.
inline ContextPtr make_M() {
  auto c4 = make_cyclic_group(4);
  auto c6 = make_cyclic_group(6);
  Subgroup a1 = subgroup_from_generators(c4, {2});
  Subgroup a2 = subgroup_from_generators(c6, {3});
  return build_amalgam(c4, c6, a1, a2, make_isomorphism(a1, a2, {{2, 3}}));
}

// HNN over C4 with associated subgroup {0,2} and identity isomorphism.
inline ContextPtr make_H() {
  auto c4 = make_cyclic_group(4);
  Subgroup a = subgroup_from_generators(c4, {2});
  return build_hnn(c4, a, a, make_isomorphism(a, a, {{2, 2}}));
}

// Ascending-free HNN over C4: both associated subgroups full, u -> u^-1.
inline ContextPtr make_H2() {
  auto c4 = make_cyclic_group(4);
  Subgroup full = full_subgroup(c4);
  return build_hnn(c4, full, full, make_isomorphism(full, full, {{1, 3}}));
}

inline GroupElement w(const ContextPtr& ctx, const std::string& text) {
  return parse_word(*ctx, text);
}

}  // namespace valgroup::testctx
