#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "valgroup/context.hpp"
#include "valgroup/normal_forms.hpp"
#include "valgroup/valuation.hpp"

namespace valgroup {

/// Brute-force conjugacy oracle: smallest x in ball(Lx), in canonical order,
/// with x^-1 y x = z.
std::optional<GroupElement> conjugate_search(const GroupElement& y, const GroupElement& z, int Lx,
                                             std::size_t cap = kDefaultBallCap);

enum class ProductForm { reduced, semi_reduced, neither };

/// reduced: l(ab) = l(a) + l(b); semi_reduced: l(ab) = l(a) + l(b) - 1.
ProductForm classify_product(const GroupElement& a, const GroupElement& b);

struct ConjugacyDecomposition {
  GroupElement a;
  GroupElement b;
  long long n = 1;  // y = (ab)^n, z = (ba)^n, n >= 1
  long long m = 0;  // x = a(ba)^m
  ProductForm form_ab = ProductForm::reduced;
  ProductForm form_ba = ProductForm::reduced;
};

/// Requires x^-1 y x = z, l(y) >= 2, and y, z both at least weakly cyclically
/// reduced. Computes (a, b, n, m) by the case recursion on l(x); the three
/// defining identities always hold by multiplication.
ConjugacyDecomposition conjugacy_decompose(const GroupElement& x, const GroupElement& y,
                                           const GroupElement& z);

/// {c in ball(L) : cg = gc}, in ball order.
std::vector<GroupElement> centralizer_ball(const GroupElement& g, int L,
                                           std::size_t cap = kDefaultBallCap);

struct CentralizerStructure {
  GroupElement g;
  GroupElement s;                      // cyclically reduced generator
  std::vector<GroupElement> b_part;    // B intersect C_G(g)
  int radius = 0;
  // one triple per centralizer-ball element: (element, exponent k, h) with
  // element = s^k h and h in b_part
  struct Factorization {
    GroupElement element;
    long long k = 0;
    GroupElement h;
  };
  std::vector<Factorization> certificate;
};

/// Requires g cyclically reduced with l(g) >= 2. Picks the shortest non-B
/// centralizer element whose powers and B-parts factor the whole centralizer
/// ball uniquely; anything unfactorable raises Error(radius_insufficient).
CentralizerStructure centralizer_structure(const GroupElement& g, int L,
                                           std::size_t cap = kDefaultBallCap);

struct CommutingDecomposition {
  GroupElement X;
  GroupElement h1;  // in B
  GroupElement h2;  // in B
  long long n = 0;  // x = h1 X^n
  long long m = 0;  // y = h2 X^m
};

/// Requires [x, y] = 1 and l(x^2) = 2 l(x). Searches ball(L) for X and the
/// B-parts; Error(radius_insufficient) when nothing within the ball works.
CommutingDecomposition commuting_decompose(const GroupElement& x, const GroupElement& y, int L,
                                           std::size_t cap = kDefaultBallCap);

struct WeaklyReducedReport {
  bool weakly_reduced = true;
  std::vector<GroupElement> violation;  // empty iff weakly_reduced
  std::uint64_t checked_count = 0;
};

/// Checks every sequence (u_0,...,u_n) from U and U^-1 with 2 <= n+1 <= n_max,
/// u_i u_{i+1} != 1 and l(u_i) != 0, against l(u_0...u_n) >= l(u_1...u_n).
/// Sequences are visited shortest first, in canonical order, so the reported
/// violation is minimal.
WeaklyReducedReport is_weakly_reduced_up_to(const std::vector<GroupElement>& U, int n_max,
                                            std::uint64_t sequence_cap = 2'000'000);

struct NielsenStep {
  GroupElement replaced;
  GroupElement replacement;
  std::vector<GroupElement> violating_sequence;
};

struct NielsenResult {
  std::vector<GroupElement> reduced;
  std::vector<NielsenStep> log;
  bool completed = true;  // false when the iteration cap or a stuck state hit
  std::string stuck_reason;
};

/// Repeatedly replaces the longest member occurring in a minimal violating
/// sequence by the product of that sequence; total length strictly decreases
/// every accepted step.
NielsenResult nielsen_reduce(const std::vector<GroupElement>& U, int n_max,
                             int max_iterations = 1000);

struct MalnormalReport {
  bool holds = true;
  // witness: (h, conjugator) with h != 1, h in H, conjugator^-1 h conjugator in H
  std::vector<GroupElement> witness;
  std::uint64_t checked_count = 0;
};

/// H must contain the identity and be closed under inversion. Conjugators
/// range over ball(L) minus H.
MalnormalReport is_malnormal_up_to(const std::vector<GroupElement>& H, int L,
                                   std::size_t cap = kDefaultBallCap);
/// Conjugators range over S minus H.
MalnormalReport is_s_malnormal_up_to(const std::vector<GroupElement>& H, int L,
                                     std::size_t cap = kDefaultBallCap);

enum class CsaVerdict { consistent_with_csa_star, refuted };

struct CsaReport {
  int radius = 0;
  std::vector<GroupElement> involution_witnesses;
  CheckStatus condition_i_status = CheckStatus::holds_up_to_radius;
  std::vector<GroupElement> condition_i_witness;
  CheckStatus condition_ii_status = CheckStatus::holds_up_to_radius;
  std::vector<GroupElement> condition_ii_witness;
  CsaVerdict verdict = CsaVerdict::consistent_with_csa_star;
};

/// Bounded CSA* probe: involution scan, then condition (i) for nontrivial g
/// with l(g) <= 2 whose centralizer ball lies in S, then condition (ii) for
/// nontrivial g in B.
CsaReport csa_check(const GroupContext& ctx, int L, std::size_t cap = kDefaultBallCap);

enum class GeneratorClass { free_part_candidate, n_class_candidate };

struct GeneratorClassification {
  GroupElement generator;
  GeneratorClass cls;
  std::optional<GroupElement> anchor;  // canonical N(x)-class anchor
};

struct SubgroupProbeReport {
  bool hypothesis_holds = true;
  std::vector<GroupElement> hypothesis_witness;  // (b, conjugator) on failure
  NielsenResult nielsen;
  std::vector<GeneratorClassification> classifications;
};

/// Best-effort, bounded: checks K intersect B^x = 1 inside ball(L), Nielsen
/// reduces the generators, then tags each reduced generator as free-part or
/// N(x)-part. No structural certification is claimed.
SubgroupProbeReport subgroup_decomposition_probe(const GroupContext& ctx,
                                                const std::vector<GroupElement>& K_gens, int L,
                                                std::size_t cap = kDefaultBallCap);

}  // namespace valgroup
