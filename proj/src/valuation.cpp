#include "valgroup/valuation.hpp"

#include <algorithm>
#include <cctype>

namespace valgroup {

HalfInt gromov_c(const GroupElement& x, const GroupElement& y) {
  if (x.ctx != y.ctx) fail(errc::context_mismatch, "gromov_c across contexts");
  int l = length(x) + length(y) - length(multiply(x, invert(y)));
  return HalfInt::halves(l);
}

bool in_N(const GroupElement& g) { return length(multiply(g, g)) <= length(g); }

bool equiv(const GroupElement& x, const GroupElement& y) {
  if (x.ctx != y.ctx) fail(errc::context_mismatch, "equiv across contexts");
  if (!in_N(x) || !in_N(y)) fail(errc::domain, "equiv is defined only on N");
  return length(x) == length(y) && length(multiply(invert(x), y)) <= length(x);
}

std::vector<GroupElement> n_class(const GroupElement& x, const Ball& ball) {
  if (!in_N(x)) fail(errc::domain, "n_class requires x in N");
  std::vector<GroupElement> out;
  out.push_back(identity_element(*x.ctx));
  for (const GroupElement& y : ball.elements) {
    if (!in_N(y) || is_identity(y)) continue;
    if (equiv(x, y)) out.push_back(y);
  }
  std::sort(out.begin(), out.end(), ElementLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const char* axiom_name(AxiomId id) {
  switch (id) {
    case AxiomId::A0: return "A0";
    case AxiomId::A0star: return "A0*";
    case AxiomId::A1: return "A1";
    case AxiomId::A1star: return "A1*";
    case AxiomId::A2: return "A2";
    case AxiomId::A3: return "A3";
    case AxiomId::A4: return "A4";
    case AxiomId::A5: return "A5";
    case AxiomId::A5star: return "A5*";
    case AxiomId::C1prime: return "C1'";
    case AxiomId::C2: return "C2";
  }
  return "?";
}

AxiomId axiom_from_name(const std::string& name) {
  std::string n = name;
  // tolerate the flag-friendly spellings A0star / A5star / C1prime
  for (auto& ch : n) ch = (char)std::tolower((unsigned char)ch);
  if (n == "a0") return AxiomId::A0;
  if (n == "a0*" || n == "a0star") return AxiomId::A0star;
  if (n == "a1") return AxiomId::A1;
  if (n == "a1*" || n == "a1star") return AxiomId::A1star;
  if (n == "a2") return AxiomId::A2;
  if (n == "a3") return AxiomId::A3;
  if (n == "a4") return AxiomId::A4;
  if (n == "a5") return AxiomId::A5;
  if (n == "a5*" || n == "a5star") return AxiomId::A5star;
  if (n == "c1'" || n == "c1prime") return AxiomId::C1prime;
  if (n == "c2") return AxiomId::C2;
  fail(errc::parse, "unknown axiom name: " + name);
}

BallGeometry BallGeometry::build(const Ball& ball) {
  BallGeometry g;
  g.ball = &ball;
  const std::size_t n = ball.size();
  g.len.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.len[i] = length(ball.elements[i]);
  g.c2.assign(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const GroupElement& yinv = ball.elements[ball.inverse_at[j]];
      g.c2[i][j] = g.len[i] + g.len[j] - length(multiply(ball.elements[i], yinv));
    }
  return g;
}

namespace {

// Singleton predicates: true = this element violates the axiom.
bool violates_singleton(AxiomId id, const GroupElement& x) {
  const int lx = length(x);
  const int lxx = length(multiply(x, x));
  switch (id) {
    case AxiomId::A0:
      return !is_identity(x) && lxx <= lx;
    case AxiomId::A0star:
      return lx != 0 && lxx <= lx;
    case AxiomId::A1star:
      return lx == 0 && !is_identity(x);
    case AxiomId::A2:
      return length(invert(x)) != lx;
    case AxiomId::C1prime:
      return lx != 0 && lx % 2 == 0 && lxx <= lx;
    case AxiomId::C2:
      return lxx == lx + 1;
    default:
      fail(errc::internal, "not a singleton axiom");
  }
}

bool a5_hypothesis(const BallGeometry& g, std::size_t i, std::size_t j) {
  if (g.len[i] != g.len[j]) return false;
  std::size_t ii = g.ball->inverse_at[i], jj = g.ball->inverse_at[j];
  return g.c2[i][j] + g.c2[ii][jj] > 2 * g.len[i];
}

bool conjugate_into_b(const GroupElement& d, const Ball& ball) {
  for (const GroupElement& w : ball.elements)
    if (length(conjugate(d, w)) == 0) return true;
  return false;
}

}  // namespace

AxiomReport check_axiom(const GroupContext& ctx, AxiomId axiom, int radius,
                        std::size_t witness_cap, std::size_t ball_cap) {
  if (radius < 1) fail(errc::domain, "axiom check radius must be >= 1");
  Ball ball = enumerate_ball(ctx, radius, ball_cap);
  AxiomReport rep;
  rep.axiom = axiom;
  rep.radius = radius;

  auto add = [&](std::vector<GroupElement> tuple) {
    rep.status = CheckStatus::violated;
    if (rep.witnesses.size() < witness_cap) rep.witnesses.push_back(std::move(tuple));
  };

  switch (axiom) {
    case AxiomId::A1: {
      rep.checked_count = 1;
      GroupElement e = identity_element(ctx);
      if (length(e) != 0) add({e});
      break;
    }
    case AxiomId::A4:
      // the ball is built as a breadth-first closure of S, so membership is
      // itself the factorization witness
      rep.checked_count = ball.size();
      break;
    case AxiomId::A0:
    case AxiomId::A0star:
    case AxiomId::A1star:
    case AxiomId::A2:
    case AxiomId::C1prime:
    case AxiomId::C2:
      for (const GroupElement& x : ball.elements) {
        ++rep.checked_count;
        if (violates_singleton(axiom, x)) add({x});
      }
      break;
    case AxiomId::A3: {
      BallGeometry g = BallGeometry::build(ball);
      const std::size_t n = ball.size();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const auto& ci = g.c2[i];
          const auto& cj = g.c2[j];
          for (std::size_t k = 0; k < n; ++k) {
            ++rep.checked_count;
            if (ci[j] < std::min(ci[k], cj[k]))
              add({ball.elements[i], ball.elements[j], ball.elements[k]});
          }
        }
      break;
    }
    case AxiomId::A5:
    case AxiomId::A5star: {
      BallGeometry g = BallGeometry::build(ball);
      const std::size_t n = ball.size();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          ++rep.checked_count;
          if (!a5_hypothesis(g, i, j)) continue;
          if (axiom == AxiomId::A5) {
            if (i != j) add({ball.elements[i], ball.elements[j]});
          } else {
            GroupElement d =
                multiply(ball.elements[i], ball.elements[ball.inverse_at[j]]);
            if (!conjugate_into_b(d, ball)) add({ball.elements[i], ball.elements[j]});
          }
        }
      break;
    }
  }
  return rep;
}

bool witness_replays(const GroupContext& ctx, AxiomId axiom,
                     std::span<const GroupElement> tuple, const Ball* ball) {
  switch (axiom) {
    case AxiomId::A1:
      return tuple.size() == 1 && length(tuple[0]) != 0;
    case AxiomId::A4:
      return false;
    case AxiomId::A0:
    case AxiomId::A0star:
    case AxiomId::A1star:
    case AxiomId::A2:
    case AxiomId::C1prime:
    case AxiomId::C2:
      return tuple.size() == 1 && violates_singleton(axiom, tuple[0]);
    case AxiomId::A3: {
      if (tuple.size() != 3) return false;
      HalfInt cxy = gromov_c(tuple[0], tuple[1]);
      HalfInt cxz = gromov_c(tuple[0], tuple[2]);
      HalfInt czy = gromov_c(tuple[2], tuple[1]);
      return cxy < min(cxz, czy);
    }
    case AxiomId::A5:
    case AxiomId::A5star: {
      if (tuple.size() != 2) return false;
      const GroupElement &x = tuple[0], &y = tuple[1];
      if (length(x) != length(y)) return false;
      HalfInt s = gromov_c(x, y) + gromov_c(invert(x), invert(y));
      if (!(s > (std::int64_t)length(x))) return false;
      if (axiom == AxiomId::A5) return !(x == y);
      if (ball == nullptr) fail(errc::domain, "A5* replay needs the search ball");
      return !conjugate_into_b(multiply(x, invert(y)), *ball);
    }
  }
  return false;
}

ProductLengthCheck verify_product_length_lemma(std::span<const GroupElement> seq) {
  if (seq.size() < 2) fail(errc::domain, "sequence must have length >= 2");
  ProductLengthCheck out;
  out.hypothesis_holds = true;
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    HalfInt s = gromov_c(seq[i - 1], invert(seq[i])) + gromov_c(seq[i], invert(seq[i + 1]));
    if (!(s < (std::int64_t)length(seq[i]))) out.hypothesis_holds = false;
  }
  GroupElement prod = seq[0];
  HalfInt rhs = HalfInt::of(length(seq[0]));
  for (std::size_t i = 1; i < seq.size(); ++i) {
    prod = multiply(prod, seq[i]);
    rhs = rhs + HalfInt::of(length(seq[i]));
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    HalfInt c = gromov_c(seq[i], invert(seq[i + 1]));
    rhs = rhs - c - c;
  }
  out.lhs = length(prod);
  out.rhs = rhs;
  out.formula_holds = HalfInt::of(out.lhs) == rhs;
  return out;
}

bool is_pseudo_reduced(const std::vector<GroupElement>& U, std::span<const GroupElement> seq) {
  auto in_u = [&](const GroupElement& g) {
    for (const GroupElement& u : U)
      if (g == u || g == invert(u)) return true;
    return false;
  };
  for (const GroupElement& g : seq)
    if (!in_u(g)) fail(errc::domain, "sequence member outside U and U^-1");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (is_identity(seq[i])) return false;
    if (i + 1 < seq.size()) {
      if (is_identity(multiply(seq[i], seq[i + 1]))) return false;
      if (in_N(seq[i]) && in_N(seq[i + 1]) && equiv(seq[i], seq[i + 1])) return false;
    }
  }
  return true;
}

PseudoReducedCheck verify_pseudo_reduced_formula(std::span<const GroupElement> seq) {
  if (seq.empty()) fail(errc::domain, "empty sequence");
  PseudoReducedCheck out;
  GroupElement prod = seq[0];
  HalfInt rhs = HalfInt::of(length(seq[0]));
  for (std::size_t i = 1; i < seq.size(); ++i) {
    prod = multiply(prod, seq[i]);
    rhs = rhs + HalfInt::of(length(seq[i]));
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    HalfInt c = gromov_c(seq[i], invert(seq[i + 1]));
    rhs = rhs - c - c;
  }
  out.lhs = length(prod);
  out.rhs = rhs;
  out.formula_holds = HalfInt::of(out.lhs) == rhs;
  return out;
}

}  // namespace valgroup
