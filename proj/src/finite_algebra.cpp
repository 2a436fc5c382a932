#include "valgroup/finite_algebra.hpp"

#include <algorithm>
#include <set>

namespace valgroup {

int FiniteGroup::pow(int i, long long k) const {
  int base = k >= 0 ? i : inv(i);
  long long e = k >= 0 ? k : -k;
  int acc = 0;
  for (long long t = 0; t < e; ++t) acc = mul(acc, base);
  return acc;
}

FiniteGroupPtr make_cyclic_group(int n) {
  if (n < 1) fail(errc::invalid_order, "cyclic group order must be >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    names[i] = "g^" + std::to_string(i);
  }
  return validate_table(std::move(table), std::move(names));
}

FiniteGroupPtr validate_table(std::vector<std::vector<int>> table,
                              std::vector<std::string> names) {
  const int n = (int)table.size();
  if (n == 0) fail(errc::invalid_order, "empty multiplication table");
  for (int i = 0; i < n; ++i)
    if ((int)table[i].size() != n)
      fail(errc::closure, "table row " + std::to_string(i) + " is not of size " + std::to_string(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        fail(errc::closure, "table entry (" + std::to_string(i) + "," + std::to_string(j) +
                                ") out of range");
  // index 0 must act as identity on both sides
  for (int i = 0; i < n; ++i)
    if (table[0][i] != i || table[i][0] != i)
      fail(errc::closure, "index 0 is not a two-sided identity at " + std::to_string(i));
  // rows and columns are permutations
  for (int i = 0; i < n; ++i) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int j = 0; j < n; ++j) {
      if (row[table[i][j]]++)
        fail(errc::closure, "row " + std::to_string(i) + " is not a permutation");
      if (col[table[j][i]]++)
        fail(errc::closure, "column " + std::to_string(i) + " is not a permutation");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          fail(errc::associativity, "associativity fails at (" + std::to_string(i) + "," +
                                        std::to_string(j) + "," + std::to_string(k) + ")");
  auto g = std::make_shared<FiniteGroup>();
  g->order = n;
  g->table = std::move(table);
  g->inverse.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g->table[i][j] == 0) g->inverse[i] = j;
  if (names.empty()) {
    names.resize(n);
    for (int i = 0; i < n; ++i) names[i] = "e" + std::to_string(i);
  }
  g->element_names = std::move(names);
  return g;
}

Subgroup subgroup_from_generators(FiniteGroupPtr g, const std::vector<int>& gens) {
  for (int x : gens)
    if (x < 0 || x >= g->order) fail(errc::domain, "generator index out of range");
  std::set<int> cur = {0};
  cur.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> snapshot(cur.begin(), cur.end());
    for (int a : snapshot)
      for (int b : snapshot) {
        if (cur.insert(g->mul(a, b)).second) grew = true;
        if (cur.insert(g->inv(a)).second) grew = true;
      }
  }
  Subgroup s;
  s.parent = std::move(g);
  s.members.assign(cur.begin(), cur.end());
  s.member_mask.assign(s.parent->order, 0);
  for (int x : s.members) s.member_mask[x] = 1;
  return s;
}

Subgroup full_subgroup(FiniteGroupPtr g) {
  Subgroup s;
  s.parent = std::move(g);
  s.members.resize(s.parent->order);
  for (int i = 0; i < s.parent->order; ++i) s.members[i] = i;
  s.member_mask.assign(s.parent->order, 1);
  return s;
}

Isomorphism make_isomorphism(const Subgroup& src, const Subgroup& dst,
                             const std::vector<std::pair<int, int>>& gen_images) {
  if (src.order() != dst.order())
    fail(errc::iso_validation, "subgroups have different orders");
  const auto& gs = *src.parent;
  const auto& gd = *dst.parent;
  std::vector<int> map(gs.order, -1);
  map[0] = 0;
  for (auto [a, b] : gen_images) {
    if (!src.contains(a)) fail(errc::iso_validation, "generator not in source subgroup");
    if (!dst.contains(b)) fail(errc::iso_validation, "image not in target subgroup");
    if (map[a] != -1 && map[a] != b) fail(errc::iso_validation, "conflicting generator images");
    map[a] = b;
  }
  // close under products until stable
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a : src.members)
      for (int b : src.members) {
        if (map[a] == -1 || map[b] == -1) continue;
        int p = gs.mul(a, b);
        int q = gd.mul(map[a], map[b]);
        if (map[p] == -1) {
          map[p] = q;
          grew = true;
        } else if (map[p] != q) {
          fail(errc::iso_validation, "not a homomorphism at pair (" + std::to_string(a) + "," +
                                         std::to_string(b) + ")");
        }
      }
  }
  for (int a : src.members)
    if (map[a] == -1)
      fail(errc::iso_validation, "generator images do not generate the source subgroup");
  std::vector<int> inv_map(gd.order, -1);
  for (int a : src.members) {
    if (!dst.contains(map[a])) fail(errc::iso_validation, "image escapes target subgroup");
    if (inv_map[map[a]] != -1)
      fail(errc::iso_validation, "map is not injective at " + std::to_string(a));
    inv_map[map[a]] = a;
  }
  for (int b : dst.members)
    if (inv_map[b] == -1) fail(errc::iso_validation, "map is not onto the target subgroup");
  // full homomorphism check over all member pairs
  for (int a : src.members)
    for (int b : src.members)
      if (map[gs.mul(a, b)] != gd.mul(map[a], map[b]))
        fail(errc::iso_validation, "not a homomorphism at pair (" + std::to_string(a) + "," +
                                       std::to_string(b) + ")");
  return Isomorphism{src, dst, std::move(map), std::move(inv_map)};
}

Isomorphism identity_isomorphism(const Subgroup& s) {
  std::vector<std::pair<int, int>> pairs;
  for (int m : s.members) pairs.emplace_back(m, m);
  return make_isomorphism(s, s, pairs);
}

}  // namespace valgroup
