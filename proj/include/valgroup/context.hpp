#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "valgroup/finite_algebra.hpp"

namespace valgroup {

enum class ContextKind { Free, FreeProduct, Amalgam, Hnn };

enum class AtomKind : char { FreeLetter, Factor, Stable, Base };

/// One letter of a word.
///   FreeLetter: a = generator index, b = sign (+1 / -1)
///   Factor:     a = factor id (0/1), b = element index in that factor
///   Stable:     a = sign (+1 / -1)
///   Base:       a = element index in the base (HNN) or in G1 (amalgam edge part)
struct Atom {
  AtomKind kind;
  int a = 0;
  int b = 0;
  friend bool operator==(const Atom&, const Atom&) = default;
};

struct GroupContext;

/// Canonical-form word. Structural equality is group equality within one context.
struct GroupElement {
  const GroupContext* ctx = nullptr;
  std::vector<Atom> atoms;
  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.ctx == y.ctx && x.atoms == y.atoms;
  }
};

/// One of the four constructions, with fixed coset transversals so canonical
/// forms are deterministic across runs. Immutable once built.
struct GroupContext {
  ContextKind kind;

  int rank = 0;  // Free

  std::array<FiniteGroupPtr, 2> factors{};  // FreeProduct / Amalgam

  std::array<Subgroup, 2> edge{};  // Amalgam: A1 <= G1, A2 <= G2
  Isomorphism edge_iso;            // A1 -> A2

  FiniteGroupPtr base;              // Hnn
  std::array<Subgroup, 2> assoc{};  // Hnn: A <= G, B <= G
  Isomorphism stable_iso;           // phi : A -> B, with t^-1 a t = phi(a)

  // Amalgam: per factor, element -> smallest-index representative of coset A*g.
  // Hnn: reps[0] for cosets B*g (follows t), reps[1] for cosets A*g (follows t^-1).
  std::array<std::vector<int>, 2> coset_rep{};

  std::string describe() const;
};

using ContextPtr = std::shared_ptr<const GroupContext>;

ContextPtr build_free_group(int rank);
ContextPtr build_free_product(FiniteGroupPtr g1, FiniteGroupPtr g2);
ContextPtr build_amalgam(FiniteGroupPtr g1, FiniteGroupPtr g2, Subgroup a1, Subgroup a2,
                         Isomorphism iso);
ContextPtr build_hnn(FiniteGroupPtr g, Subgroup a, Subgroup b, Isomorphism phi);

GroupElement identity_element(const GroupContext& ctx);

/// Unique canonical form of the product of the atoms; idempotent.
GroupElement canonicalize(const GroupContext& ctx, std::span<const Atom> raw);

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement multiply(const GroupElement& a, const GroupElement& b, const GroupElement& c);
GroupElement invert(const GroupElement& g);
GroupElement power(const GroupElement& g, long long k);
GroupElement conjugate(const GroupElement& g, const GroupElement& x);  // x^-1 g x

int length(const GroupElement& g);
bool is_identity(const GroupElement& g);

/// Total order: by length, then lexicographic on atoms. Fixes the enumeration
/// order of balls and every deterministic tie-break.
int compare(const GroupElement& x, const GroupElement& y);
struct ElementLess {
  bool operator()(const GroupElement& x, const GroupElement& y) const {
    return compare(x, y) < 0;
  }
};

/// S = {x : l(x) <= 1}, enumerated in canonical order.
std::vector<GroupElement> generating_sphere(const GroupContext& ctx);

struct Ball {
  const GroupContext* ctx = nullptr;
  int radius = 0;
  std::vector<GroupElement> elements;   // sorted by (length, canonical order)
  std::vector<std::size_t> inverse_at;  // index of elements[i]^-1

  std::size_t size() const { return elements.size(); }
  /// Index of e in elements, or npos.
  std::size_t index_of(const GroupElement& e) const;
  bool contains(const GroupElement& e) const { return index_of(e) != npos; }
  static constexpr std::size_t npos = (std::size_t)-1;
};

inline constexpr std::size_t kDefaultBallCap = 2'000'000;

/// Breadth-first closure of B u S under right multiplication by S, layer by
/// layer; throws Error(capacity) instead of truncating.
Ball enumerate_ball(const GroupContext& ctx, int radius, std::size_t cap = kDefaultBallCap);

}  // namespace valgroup
