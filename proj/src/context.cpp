#include "valgroup/context.hpp"

#include <algorithm>
#include <set>

namespace valgroup {

namespace {

std::vector<int> min_index_coset_reps(const FiniteGroup& g, const Subgroup& sub) {
  // rep of the coset sub*x is the smallest element index in it
  std::vector<int> rep(g.order, -1);
  for (int x = 0; x < g.order; ++x) {
    int best = x;
    for (int a : sub.members) best = std::min(best, g.mul(a, x));
    rep[x] = best;
  }
  return rep;
}

void require(bool cond, errc code, const char* what) {
  if (!cond) fail(code, what);
}

}  // namespace

std::string GroupContext::describe() const {
  switch (kind) {
    case ContextKind::Free:
      return "free(" + std::to_string(rank) + ")";
    case ContextKind::FreeProduct:
      return "free_product(|G1|=" + std::to_string(factors[0]->order) +
             ",|G2|=" + std::to_string(factors[1]->order) + ")";
    case ContextKind::Amalgam:
      return "amalgam(|G1|=" + std::to_string(factors[0]->order) +
             ",|G2|=" + std::to_string(factors[1]->order) +
             ",|A|=" + std::to_string(edge[0].order()) + ")";
    case ContextKind::Hnn:
      return "hnn(|G|=" + std::to_string(base->order) + ",|A|=" + std::to_string(assoc[0].order()) +
             ")";
  }
  return "?";
}

ContextPtr build_free_group(int rank) {
  require(rank >= 1, errc::invalid_order, "free group rank must be >= 1");
  auto c = std::make_shared<GroupContext>();
  c->kind = ContextKind::Free;
  c->rank = rank;
  return c;
}

ContextPtr build_free_product(FiniteGroupPtr g1, FiniteGroupPtr g2) {
  auto c = std::make_shared<GroupContext>();
  c->kind = ContextKind::FreeProduct;
  c->factors = {std::move(g1), std::move(g2)};
  return c;
}

ContextPtr build_amalgam(FiniteGroupPtr g1, FiniteGroupPtr g2, Subgroup a1, Subgroup a2,
                         Isomorphism iso) {
  require(a1.parent == g1 && a2.parent == g2, errc::iso_validation,
          "edge subgroups must live in the factor groups");
  require(iso.source.parent == g1 && iso.target.parent == g2, errc::iso_validation,
          "edge isomorphism must map A1 to A2");
  require(iso.source.members == a1.members && iso.target.members == a2.members,
          errc::iso_validation, "edge isomorphism endpoints do not match the edge subgroups");
  auto c = std::make_shared<GroupContext>();
  c->kind = ContextKind::Amalgam;
  c->factors = {g1, g2};
  c->edge = {std::move(a1), std::move(a2)};
  c->edge_iso = std::move(iso);
  c->coset_rep[0] = min_index_coset_reps(*g1, c->edge[0]);
  c->coset_rep[1] = min_index_coset_reps(*g2, c->edge[1]);
  return c;
}

ContextPtr build_hnn(FiniteGroupPtr g, Subgroup a, Subgroup b, Isomorphism phi) {
  require(a.parent == g && b.parent == g, errc::iso_validation,
          "associated subgroups must live in the base group");
  require(phi.source.members == a.members && phi.target.members == b.members,
          errc::iso_validation, "stable isomorphism endpoints do not match associated subgroups");
  auto c = std::make_shared<GroupContext>();
  c->kind = ContextKind::Hnn;
  c->base = g;
  c->assoc = {std::move(a), std::move(b)};
  c->stable_iso = std::move(phi);
  c->coset_rep[0] = min_index_coset_reps(*g, c->assoc[1]);  // after t: cosets B*g
  c->coset_rep[1] = min_index_coset_reps(*g, c->assoc[0]);  // after t^-1: cosets A*g
  return c;
}

GroupElement identity_element(const GroupContext& ctx) {
  GroupElement e{&ctx, {}};
  if (ctx.kind == ContextKind::Amalgam || ctx.kind == ContextKind::Hnn)
    e.atoms.push_back(Atom{AtomKind::Base, 0, 0});
  return e;
}

namespace {

// ---- per-kind front insertion into a canonical suffix ----

void push_front_free(const GroupContext& ctx, std::vector<Atom>& w, const Atom& at) {
  require(at.kind == AtomKind::FreeLetter, errc::context_mismatch, "free group expects letters");
  require(at.a >= 0 && at.a < ctx.rank, errc::domain, "generator index out of range");
  require(at.b == 1 || at.b == -1, errc::domain, "letter sign must be +-1");
  if (!w.empty() && w.front().a == at.a && w.front().b == -at.b)
    w.erase(w.begin());
  else
    w.insert(w.begin(), at);
}

void push_front_free_product(const GroupContext& ctx, std::vector<Atom>& w, const Atom& at) {
  require(at.kind == AtomKind::Factor, errc::context_mismatch,
          "free product expects factor elements");
  require(at.a == 0 || at.a == 1, errc::domain, "factor id must be 0 or 1");
  const FiniteGroup& g = *ctx.factors[at.a];
  require(at.b >= 0 && at.b < g.order, errc::domain, "factor element index out of range");
  if (at.b == 0) return;
  if (!w.empty() && w.front().a == at.a) {
    int y = g.mul(at.b, w.front().b);
    if (y == 0)
      w.erase(w.begin());
    else
      w.front().b = y;
  } else {
    w.insert(w.begin(), at);
  }
}

// Amalgam canonical form: [Base(a), Factor(f1,r1), ..., Factor(fn,rn)] with
// a in A1 (as a G1 index), r_i nontrivial coset representatives, factors
// alternating. The edge part rides on the left.
void push_front_amalgam(const GroupContext& ctx, std::vector<Atom>& w, Atom at) {
  if (at.kind == AtomKind::Base) at = Atom{AtomKind::Factor, 0, at.a};
  require(at.kind == AtomKind::Factor, errc::context_mismatch, "amalgam expects factor elements");
  require(at.a == 0 || at.a == 1, errc::domain, "factor id must be 0 or 1");
  const int f = at.a;
  const FiniteGroup& g = *ctx.factors[f];
  require(at.b >= 0 && at.b < g.order, errc::domain, "factor element index out of range");

  int a1 = w.front().a;  // current edge part, G1 index
  int af = (f == 0) ? a1 : ctx.edge_iso.apply(a1);
  int y = g.mul(at.b, af);
  if (w.size() > 1 && w[1].a == f) {
    y = g.mul(y, w[1].b);
    w.erase(w.begin() + 1);
  }
  int r = ctx.coset_rep[f][y];
  int alpha = g.mul(y, g.inv(r));  // y = alpha * r with alpha in A_f
  if (r != 0) w.insert(w.begin() + 1, Atom{AtomKind::Factor, f, r});
  w.front().a = (f == 0) ? alpha : ctx.edge_iso.apply_inverse(alpha);
}

// HNN canonical form: [Base(h0), Stable(e1), Base(r1), ..., Stable(en), Base(rn)]
// with h0 free, r_i the fixed representative of its coset (B*g after t,
// A*g after t^-1), and no pinch.
void push_front_hnn(const GroupContext& ctx, std::vector<Atom>& w, const Atom& at) {
  const FiniteGroup& g = *ctx.base;
  if (at.kind == AtomKind::Base) {
    require(at.a >= 0 && at.a < g.order, errc::domain, "base element index out of range");
    w.front().a = g.mul(at.a, w.front().a);
    return;
  }
  require(at.kind == AtomKind::Stable, errc::context_mismatch,
          "hnn expects base or stable-letter atoms");
  require(at.a == 1 || at.a == -1, errc::domain, "stable letter sign must be +-1");
  int h0 = w.front().a;
  bool next_is_opposite = w.size() > 1 && w[1].a == -at.a;
  if (at.a == 1) {
    if (next_is_opposite && ctx.assoc[1].contains(h0)) {
      // pinch t b t^-1 = phi^-1(b)
      int collapsed = g.mul(ctx.stable_iso.apply_inverse(h0), w[2].a);
      w.erase(w.begin() + 1, w.begin() + 3);
      w.front().a = collapsed;
      return;
    }
    int r = ctx.coset_rep[0][h0];                   // h0 = b * r, b in B
    int b = g.mul(h0, g.inv(r));
    w.front().a = r;
    w.insert(w.begin(), Atom{AtomKind::Stable, 1, 0});
    w.insert(w.begin(), Atom{AtomKind::Base, ctx.stable_iso.apply_inverse(b), 0});
  } else {
    if (next_is_opposite && ctx.assoc[0].contains(h0)) {
      // pinch t^-1 a t = phi(a)
      int collapsed = g.mul(ctx.stable_iso.apply(h0), w[2].a);
      w.erase(w.begin() + 1, w.begin() + 3);
      w.front().a = collapsed;
      return;
    }
    int r = ctx.coset_rep[1][h0];                   // h0 = a * r, a in A
    int a = g.mul(h0, g.inv(r));
    w.front().a = r;
    w.insert(w.begin(), Atom{AtomKind::Stable, -1, 0});
    w.insert(w.begin(), Atom{AtomKind::Base, ctx.stable_iso.apply(a), 0});
  }
}

}  // namespace

GroupElement canonicalize(const GroupContext& ctx, std::span<const Atom> raw) {
  GroupElement e = identity_element(ctx);
  for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
    switch (ctx.kind) {
      case ContextKind::Free:
        push_front_free(ctx, e.atoms, *it);
        break;
      case ContextKind::FreeProduct:
        push_front_free_product(ctx, e.atoms, *it);
        break;
      case ContextKind::Amalgam:
        push_front_amalgam(ctx, e.atoms, *it);
        break;
      case ContextKind::Hnn:
        push_front_hnn(ctx, e.atoms, *it);
        break;
    }
  }
  return e;
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  require(g.ctx == h.ctx, errc::context_mismatch, "elements belong to different contexts");
  std::vector<Atom> raw = g.atoms;
  raw.insert(raw.end(), h.atoms.begin(), h.atoms.end());
  return canonicalize(*g.ctx, raw);
}

GroupElement multiply(const GroupElement& a, const GroupElement& b, const GroupElement& c) {
  return multiply(multiply(a, b), c);
}

GroupElement invert(const GroupElement& g) {
  const GroupContext& ctx = *g.ctx;
  std::vector<Atom> raw;
  raw.reserve(g.atoms.size());
  for (auto it = g.atoms.rbegin(); it != g.atoms.rend(); ++it) {
    Atom a = *it;
    switch (a.kind) {
      case AtomKind::FreeLetter:
        a.b = -a.b;
        break;
      case AtomKind::Factor:
        a.b = ctx.factors[a.a]->inv(a.b);
        break;
      case AtomKind::Stable:
        a.a = -a.a;
        break;
      case AtomKind::Base:
        a.a = (ctx.kind == ContextKind::Hnn ? ctx.base->inv(a.a) : ctx.factors[0]->inv(a.a));
        break;
    }
    raw.push_back(a);
  }
  return canonicalize(ctx, raw);
}

GroupElement power(const GroupElement& g, long long k) {
  GroupElement base = k >= 0 ? g : invert(g);
  long long e = k >= 0 ? k : -k;
  GroupElement acc = identity_element(*g.ctx);
  for (long long i = 0; i < e; ++i) acc = multiply(acc, base);
  return acc;
}

GroupElement conjugate(const GroupElement& g, const GroupElement& x) {
  return multiply(invert(x), multiply(g, x));
}

int length(const GroupElement& g) {
  switch (g.ctx->kind) {
    case ContextKind::Free:
    case ContextKind::FreeProduct:
      return (int)g.atoms.size();
    case ContextKind::Amalgam:
      return (int)g.atoms.size() - 1;
    case ContextKind::Hnn: {
      int n = 0;
      for (const Atom& a : g.atoms)
        if (a.kind == AtomKind::Stable) ++n;
      return n;
    }
  }
  return 0;
}

bool is_identity(const GroupElement& g) { return g == identity_element(*g.ctx); }

int compare(const GroupElement& x, const GroupElement& y) {
  int lx = length(x), ly = length(y);
  if (lx != ly) return lx < ly ? -1 : 1;
  if (x.atoms.size() != y.atoms.size()) return x.atoms.size() < y.atoms.size() ? -1 : 1;
  for (std::size_t i = 0; i < x.atoms.size(); ++i) {
    const Atom &a = x.atoms[i], &b = y.atoms[i];
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    if (a.a != b.a) return a.a < b.a ? -1 : 1;
    if (a.b != b.b) return a.b < b.b ? -1 : 1;
  }
  return 0;
}

namespace {

std::vector<GroupElement> zero_sphere(const GroupContext& ctx) {
  std::vector<GroupElement> out;
  switch (ctx.kind) {
    case ContextKind::Free:
    case ContextKind::FreeProduct:
      out.push_back(identity_element(ctx));
      break;
    case ContextKind::Amalgam:
      for (int a : ctx.edge[0].members)
        out.push_back(GroupElement{&ctx, {Atom{AtomKind::Base, a, 0}}});
      break;
    case ContextKind::Hnn:
      for (int g = 0; g < ctx.base->order; ++g)
        out.push_back(GroupElement{&ctx, {Atom{AtomKind::Base, g, 0}}});
      break;
  }
  std::sort(out.begin(), out.end(), ElementLess{});
  return out;
}

std::vector<GroupElement> unit_sphere(const GroupContext& ctx) {
  std::vector<GroupElement> out;
  switch (ctx.kind) {
    case ContextKind::Free:
      for (int i = 0; i < ctx.rank; ++i)
        for (int s : {1, -1})
          out.push_back(GroupElement{&ctx, {Atom{AtomKind::FreeLetter, i, s}}});
      break;
    case ContextKind::FreeProduct:
      for (int f : {0, 1})
        for (int x = 1; x < ctx.factors[f]->order; ++x)
          out.push_back(GroupElement{&ctx, {Atom{AtomKind::Factor, f, x}}});
      break;
    case ContextKind::Amalgam:
      for (int a : ctx.edge[0].members)
        for (int f : {0, 1})
          for (int r = 0; r < ctx.factors[f]->order; ++r) {
            if (r == 0 || ctx.coset_rep[f][r] != r) continue;
            out.push_back(GroupElement{
                &ctx, {Atom{AtomKind::Base, a, 0}, Atom{AtomKind::Factor, f, r}}});
          }
      break;
    case ContextKind::Hnn:
      for (int g = 0; g < ctx.base->order; ++g)
        for (int s : {1, -1}) {
          const auto& reps = ctx.coset_rep[s == 1 ? 0 : 1];
          for (int r = 0; r < ctx.base->order; ++r) {
            if (reps[r] != r) continue;
            out.push_back(GroupElement{&ctx,
                                       {Atom{AtomKind::Base, g, 0}, Atom{AtomKind::Stable, s, 0},
                                        Atom{AtomKind::Base, r, 0}}});
          }
        }
      break;
  }
  std::sort(out.begin(), out.end(), ElementLess{});
  return out;
}

}  // namespace

std::vector<GroupElement> generating_sphere(const GroupContext& ctx) {
  std::vector<GroupElement> out = zero_sphere(ctx);
  std::vector<GroupElement> u = unit_sphere(ctx);
  out.insert(out.end(), u.begin(), u.end());
  return out;
}

std::size_t Ball::index_of(const GroupElement& e) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), e, ElementLess{});
  if (it != elements.end() && *it == e) return (std::size_t)(it - elements.begin());
  return npos;
}

Ball enumerate_ball(const GroupContext& ctx, int radius, std::size_t cap) {
  require(radius >= 0, errc::domain, "ball radius must be >= 0");
  std::set<GroupElement, ElementLess> seen;
  std::vector<GroupElement> layer = zero_sphere(ctx);
  for (const auto& e : layer) seen.insert(e);
  const std::vector<GroupElement> units = unit_sphere(ctx);
  for (int k = 1; k <= radius; ++k) {
    std::vector<GroupElement> next;
    for (const GroupElement& g : layer)
      for (const GroupElement& s : units) {
        GroupElement p = multiply(g, s);
        if (length(p) != k) continue;
        if (seen.insert(p).second) {
          next.push_back(p);
          if (seen.size() > cap)
            fail(errc::capacity, "ball enumeration exceeded cap of " + std::to_string(cap));
        }
      }
    layer = std::move(next);
  }
  Ball ball;
  ball.ctx = &ctx;
  ball.radius = radius;
  ball.elements.assign(seen.begin(), seen.end());
  ball.inverse_at.resize(ball.elements.size());
  for (std::size_t i = 0; i < ball.elements.size(); ++i) {
    std::size_t j = ball.index_of(invert(ball.elements[i]));
    if (j == Ball::npos) fail(errc::internal, "ball is not closed under inversion");
    ball.inverse_at[i] = j;
  }
  return ball;
}

}  // namespace valgroup
