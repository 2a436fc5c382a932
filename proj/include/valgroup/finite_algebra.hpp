#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "valgroup/errors.hpp"

namespace valgroup {

/// Finite group given by its full multiplication table. Index 0 is always
/// the identity. The table is validated exhaustively at construction.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;
  std::vector<int> inverse;
  std::vector<std::string> element_names;

  int mul(int i, int j) const { return table[i][j]; }
  int inv(int i) const { return inverse[i]; }
  int pow(int i, long long k) const;
};

using FiniteGroupPtr = std::shared_ptr<const FiniteGroup>;

FiniteGroupPtr make_cyclic_group(int n);

/// Checks closure, identity-at-0, associativity (all triples) and inverses;
/// throws Error(closure/associativity) with a witness otherwise.
FiniteGroupPtr validate_table(std::vector<std::vector<int>> table,
                              std::vector<std::string> names = {});

struct Subgroup {
  FiniteGroupPtr parent;
  std::vector<int> members;       // sorted, always contains 0
  std::vector<char> member_mask;  // indexed by parent element

  bool contains(int i) const { return i >= 0 && i < (int)member_mask.size() && member_mask[i]; }
  int order() const { return (int)members.size(); }
};

Subgroup subgroup_from_generators(FiniteGroupPtr g, const std::vector<int>& gens);
Subgroup full_subgroup(FiniteGroupPtr g);

/// Validated isomorphism between two subgroups, stored as a full element map.
struct Isomorphism {
  Subgroup source;
  Subgroup target;
  std::vector<int> map;      // parent-index -> parent-index, -1 off source
  std::vector<int> inv_map;  // -1 off target

  int apply(int i) const { return map[i]; }
  int apply_inverse(int i) const { return inv_map[i]; }
};

/// Extends generator images to the whole subgroup and verifies the
/// homomorphism property on all member pairs.
Isomorphism make_isomorphism(const Subgroup& src, const Subgroup& dst,
                             const std::vector<std::pair<int, int>>& gen_images);

Isomorphism identity_isomorphism(const Subgroup& s);

}  // namespace valgroup
