#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "valgroup/context.hpp"
#include "valgroup/halfint.hpp"

namespace valgroup {

/// c(x,y) = (l(x) + l(y) - l(x y^-1)) / 2, exact.
HalfInt gromov_c(const GroupElement& x, const GroupElement& y);

/// N = {g : l(g^2) <= l(g)}.
bool in_N(const GroupElement& g);

/// The relation x == y on N: l(x^-1 y) <= l(x) = l(y). Throws Error(domain)
/// when an operand is outside N.
bool equiv(const GroupElement& x, const GroupElement& y);

/// N(x) restricted to the ball: the equivalence class of x plus the identity.
std::vector<GroupElement> n_class(const GroupElement& x, const Ball& ball);

enum class AxiomId { A0, A0star, A1, A1star, A2, A3, A4, A5, A5star, C1prime, C2 };

const char* axiom_name(AxiomId id);
/// Accepts the names printed by axiom_name ("A0", "A0*", "A1", ..., "C1'", "C2").
AxiomId axiom_from_name(const std::string& name);

enum class CheckStatus { holds_up_to_radius, violated };

struct AxiomReport {
  AxiomId axiom;
  int radius = 0;
  CheckStatus status = CheckStatus::holds_up_to_radius;
  std::vector<std::vector<GroupElement>> witnesses;  // element tuples
  std::uint64_t checked_count = 0;
};

/// Cached per-ball lengths and doubled Gromov products:
/// c2[i][j] = l(x_i) + l(x_j) - l(x_i x_j^-1) = 2 c(x_i, x_j).
struct BallGeometry {
  const Ball* ball = nullptr;
  std::vector<int> len;
  std::vector<std::vector<int>> c2;

  static BallGeometry build(const Ball& ball);
};

/// Exhaustive bounded evaluation over enumerate_ball(ctx, L). A5*'s conjugacy
/// condition is searched within the same ball, so its verdict is a bounded
/// refutation check only.
AxiomReport check_axiom(const GroupContext& ctx, AxiomId axiom, int radius,
                        std::size_t witness_cap = 10, std::size_t ball_cap = kDefaultBallCap);

/// Re-evaluates the axiom predicate on one witness tuple; returns true when
/// the tuple still violates the axiom. The ball is needed for A5*.
bool witness_replays(const GroupContext& ctx, AxiomId axiom,
                     std::span<const GroupElement> tuple, const Ball* ball = nullptr);

struct ProductLengthCheck {
  bool hypothesis_holds = false;
  bool formula_holds = false;
  int lhs = 0;      // l(g_1 ... g_n)
  HalfInt rhs{};    // sum l(g_i) - 2 sum c(g_i, g_{i+1}^-1)
};

/// Hypothesis: c(g_{i-1}, g_i^-1) + c(g_i, g_{i+1}^-1) < l(g_i) for 1 < i < n.
/// Both sides of the length formula are returned whether or not it holds.
ProductLengthCheck verify_product_length_lemma(std::span<const GroupElement> seq);

/// Pseudo-reduced: u_i != 1, u_i u_{i+1} != 1, and adjacent members of N are
/// never equivalent. Operands must come from U union U^-1 (domain error).
bool is_pseudo_reduced(const std::vector<GroupElement>& U, std::span<const GroupElement> seq);

struct PseudoReducedCheck {
  bool formula_holds = false;
  int lhs = 0;
  HalfInt rhs{};
};

PseudoReducedCheck verify_pseudo_reduced_formula(std::span<const GroupElement> seq);

}  // namespace valgroup
