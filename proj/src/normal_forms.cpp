#include "valgroup/normal_forms.hpp"

#include <deque>

#include "valgroup/errors.hpp"

namespace valgroup {

namespace {

std::vector<int> junctions_of(const std::vector<GroupElement>& pieces) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
    out.push_back(length(multiply(pieces[i], pieces[i + 1])));
  return out;
}

SReducedForm finish(GroupElement element, std::vector<GroupElement> pieces) {
  SReducedForm f;
  f.element = std::move(element);
  f.junction_lengths = junctions_of(pieces);
  f.pieces = std::move(pieces);
  for (int j : f.junction_lengths)
    if (j != 2) fail(errc::internal, "junction of an S-reduced form is not 2");
  return f;
}

}  // namespace

SReducedForm s_reduced_decomposition(const GroupElement& g) {
  const GroupContext& ctx = *g.ctx;
  const int lg = length(g);
  if (lg < 1) fail(errc::domain, "length-zero element has no S-reduced decomposition");
  std::vector<GroupElement> pieces;
  switch (ctx.kind) {
    case ContextKind::Free:
    case ContextKind::FreeProduct:
      for (const Atom& a : g.atoms) pieces.push_back(canonicalize(ctx, {{a}}));
      break;
    case ContextKind::Amalgam:
      // first piece carries the edge part: a*r1, then the bare representatives
      pieces.push_back(canonicalize(ctx, std::span<const Atom>(g.atoms.data(), 2)));
      for (std::size_t i = 2; i < g.atoms.size(); ++i)
        pieces.push_back(canonicalize(ctx, {{g.atoms[i]}}));
      break;
    case ContextKind::Hnn: {
      // pieces g0 t^{e1}, r1 t^{e2}, ..., with the trailing base element
      // absorbed into the last piece
      for (int i = 0; i < lg; ++i) {
        std::size_t off = 2 * (std::size_t)i;
        std::size_t count = (i + 1 == lg) ? 3 : 2;
        pieces.push_back(canonicalize(ctx, std::span<const Atom>(g.atoms.data() + off, count)));
      }
      break;
    }
  }
  if ((int)pieces.size() != lg)
    fail(errc::internal, "piece count does not match the length");
  return finish(g, std::move(pieces));
}

ConcatResult concat_normal_forms(const SReducedForm& x, const SReducedForm& y) {
  if (x.element.ctx != y.element.ctx)
    fail(errc::context_mismatch, "concatenation across contexts");
  const GroupContext& ctx = *x.element.ctx;
  GroupElement product = multiply(x.element, y.element);

  ConcatResult out;
  out.top_case = ConcatCase::full_junction;
  bool top_set = false;

  std::vector<GroupElement> left = x.pieces;
  std::deque<GroupElement> right(y.pieces.begin(), y.pieces.end());
  while (!left.empty() && !right.empty()) {
    GroupElement seam = multiply(left.back(), right.front());
    int j = length(seam);
    if (!top_set) {
      top_set = true;
      out.top_case = j == 2   ? ConcatCase::full_junction
                     : j == 1 ? ConcatCase::merged_junction
                              : ConcatCase::cancellation;
    }
    if (j == 2) break;
    if (j == 1) {
      left.back() = seam;
      right.pop_front();
      continue;
    }
    // j == 0: the seam collapses into B; absorb the leftover into a neighbour
    ++out.cancellations;
    left.pop_back();
    right.pop_front();
    if (is_identity(seam)) continue;
    if (!right.empty())
      right.front() = multiply(seam, right.front());
    else if (!left.empty())
      left.back() = multiply(left.back(), seam);
    else
      left.push_back(seam);  // whole product lies in B
  }
  std::vector<GroupElement> pieces = std::move(left);
  pieces.insert(pieces.end(), right.begin(), right.end());
  if (length(product) == 0) {
    out.result.element = product;
    return out;
  }
  // drop a stray length-0 piece left by total cancellation of one side
  std::vector<GroupElement> clean;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (length(pieces[i]) == 0) {
      GroupElement b = pieces[i];
      if (i + 1 < pieces.size())
        pieces[i + 1] = multiply(b, pieces[i + 1]);
      else if (!clean.empty())
        clean.back() = multiply(clean.back(), b);
      continue;
    }
    clean.push_back(pieces[i]);
  }
  GroupElement check = identity_element(ctx);
  for (const GroupElement& p : clean) check = multiply(check, p);
  if (!(check == product)) fail(errc::internal, "concatenation lost the product");
  out.result = finish(product, std::move(clean));
  return out;
}

bool is_cyclically_reduced(const GroupElement& g) {
  int l = length(g);
  if (l <= 1) return true;
  return length(multiply(g, g)) == 2 * l;
}

bool is_weakly_cyclically_reduced(const GroupElement& g) {
  int l = length(g);
  if (l <= 1) return true;
  return length(multiply(g, g)) >= 2 * l - 1;
}

CyclicReduction cyclic_reduce(const GroupElement& g) {
  CyclicReduction out;
  out.original = g;
  out.conjugator = identity_element(*g.ctx);
  GroupElement cur = g;
  while (!is_cyclically_reduced(cur)) {
    SReducedForm f = s_reduced_decomposition(cur);
    const GroupElement& sn = f.pieces.back();
    // seam of the square; both the length-1 and length-0 case conjugate by s_n
    cur = multiply(sn, cur, invert(sn));
    out.conjugator = multiply(sn, out.conjugator);
  }
  out.core = cur;
  if (!(multiply(invert(out.conjugator), out.core, out.conjugator) == g))
    fail(errc::internal, "cyclic reduction conjugation identity failed");
  return out;
}

}  // namespace valgroup
