#include "valgroup/structure.hpp"

#include <algorithm>

namespace valgroup {

namespace {

bool contains_sorted(const std::vector<GroupElement>& v, const GroupElement& e) {
  auto it = std::lower_bound(v.begin(), v.end(), e, ElementLess{});
  return it != v.end() && *it == e;
}

GroupElement commutator(const GroupElement& a, const GroupElement& b) {
  return multiply(multiply(invert(a), invert(b)), multiply(a, b));
}

bool commutes(const GroupElement& a, const GroupElement& b) {
  return multiply(a, b) == multiply(b, a);
}

}  // namespace

std::optional<GroupElement> conjugate_search(const GroupElement& y, const GroupElement& z, int Lx,
                                             std::size_t cap) {
  if (y.ctx != z.ctx) fail(errc::context_mismatch, "conjugate_search across contexts");
  Ball ball = enumerate_ball(*y.ctx, Lx, cap);
  for (const GroupElement& x : ball.elements)
    if (conjugate(y, x) == z) return x;
  return std::nullopt;
}

ProductForm classify_product(const GroupElement& a, const GroupElement& b) {
  int l = length(multiply(a, b));
  int sum = length(a) + length(b);
  if (l == sum) return ProductForm::reduced;
  if (l == sum - 1) return ProductForm::semi_reduced;
  return ProductForm::neither;
}

namespace {

struct Rec {
  GroupElement a, b;
  long long n = 1, m = 0;
};

Rec base_case(const GroupElement& x, const GroupElement& y) {
  // b = x^-1, a = yx; then y = ab, z = ba, x = a(ba)^-1
  return Rec{multiply(y, x), invert(x), 1, -1};
}

// delta and the exponent s with x' = delta (delta^-1 C delta)^s, in the
// degenerate subcases where a1 or b1 lies in B
struct Degenerate {
  GroupElement delta;
  GroupElement C;
  long long s = 0;
};

Degenerate degenerate_parts(const Rec& r) {
  Degenerate d;
  d.C = multiply(r.a, r.b);
  if (length(r.a) == 0) {
    d.delta = r.a;
    d.s = r.m;
  } else {
    d.delta = invert(r.b);
    d.s = r.m + 1;
  }
  return d;
}

Rec case_i(const GroupElement& x, const GroupElement& y, const GroupElement& z, bool allow_flip) {
  if (length(x) == 0) return base_case(x, y);
  GroupElement x1 = s_reduced_decomposition(x).pieces.front();
  SReducedForm fy = s_reduced_decomposition(y);
  const GroupElement& y1 = fy.pieces.front();
  const GroupElement& yn = fy.pieces.back();
  GroupElement gamma = multiply(invert(x1), y1);
  if (length(gamma) == 0) {
    GroupElement xp = multiply(invert(x1), x);
    GroupElement yp = conjugate(y, x1);
    if (!is_cyclically_reduced(yp))
      fail(errc::internal, "conjugated element is not cyclically reduced");
    Rec r = case_i(xp, yp, z, true);
    if (length(r.a) == 0 || length(r.b) == 0) {
      Degenerate d = degenerate_parts(r);
      GroupElement a = multiply(x1, d.delta);
      GroupElement b = multiply(multiply(invert(d.delta), d.C), multiply(gamma, invert(y1)));
      return Rec{a, b, r.n, d.s};
    }
    return Rec{multiply(x1, r.a), multiply(r.b, invert(x1)), r.n, r.m};
  }
  if (length(multiply(yn, x1)) == 0) {
    if (!allow_flip) fail(errc::internal, "conjugacy case (i) flip did not resolve");
    Rec r = case_i(x, invert(y), invert(z), false);
    return Rec{invert(r.b), invert(r.a), r.n, -r.m - 1};
  }
  fail(errc::internal, "conjugacy case (i): no cancelling junction");
}

Rec case_ii(const GroupElement& x, const GroupElement& y, const GroupElement& z) {
  SReducedForm fy = s_reduced_decomposition(y);
  SReducedForm fz = s_reduced_decomposition(z);
  const GroupElement& y1 = fy.pieces.front();
  const GroupElement& z1 = fz.pieces.front();
  GroupElement yp = conjugate(y, y1);
  GroupElement zp = conjugate(z, z1);
  GroupElement xp = multiply(invert(y1), x, z1);
  if (!is_cyclically_reduced(yp) || !is_cyclically_reduced(zp) || length(yp) < 2)
    fail(errc::internal, "conjugacy case (ii): rotated elements not cyclically reduced");
  Rec r = case_i(xp, yp, zp, true);
  if (length(r.a) == 0 || length(r.b) == 0) {
    Degenerate d = degenerate_parts(r);
    GroupElement a = multiply(multiply(y1, d.C), multiply(d.delta, invert(z1)));
    GroupElement b = multiply(z1, invert(d.delta), invert(y1));
    return Rec{a, b, r.n, d.s - 1};
  }
  return Rec{multiply(y1, r.a, invert(z1)), multiply(z1, r.b, invert(y1)), r.n, r.m};
}

Rec case_iii(const GroupElement& x, const GroupElement& y, const GroupElement& z) {
  SReducedForm fy = s_reduced_decomposition(y);
  const GroupElement& y1 = fy.pieces.front();
  GroupElement yp = conjugate(y, y1);
  GroupElement xp = multiply(invert(y1), x);
  if (!is_cyclically_reduced(yp) || length(yp) < 2)
    fail(errc::internal, "conjugacy case (iii): rotated element not cyclically reduced");
  Rec r = case_i(xp, yp, z, true);
  if (length(r.a) == 0 || length(r.b) == 0) {
    Degenerate d = degenerate_parts(r);
    return Rec{multiply(y1, d.delta), multiply(invert(d.delta), d.C, invert(y1)), r.n, d.s};
  }
  return Rec{multiply(y1, r.a), multiply(r.b, invert(y1)), r.n, r.m};
}

}  // namespace

ConjugacyDecomposition conjugacy_decompose(const GroupElement& x, const GroupElement& y,
                                           const GroupElement& z) {
  if (x.ctx != y.ctx || y.ctx != z.ctx)
    fail(errc::context_mismatch, "conjugacy_decompose across contexts");
  if (!(conjugate(y, x) == z)) fail(errc::contract, "y^x = z does not hold");
  if (length(y) < 2) fail(errc::contract, "l(y) >= 2 is required");
  if (!is_weakly_cyclically_reduced(y))
    fail(errc::contract, "y is not weakly cyclically reduced");
  if (!is_weakly_cyclically_reduced(z))
    fail(errc::contract, "z is not weakly cyclically reduced");

  Rec r;
  if (length(x) == 0) {
    r = base_case(x, y);
  } else {
    bool ycr = is_cyclically_reduced(y);
    bool zcr = is_cyclically_reduced(z);
    if (ycr && zcr) {
      r = case_i(x, y, z, true);
    } else if (!ycr && zcr) {
      r = case_iii(x, y, z);
    } else if (!ycr && !zcr) {
      r = case_ii(x, y, z);
    } else {
      // y c.r., z strictly w.c.r.: solve the inverted problem by case (iii)
      Rec s = case_iii(invert(x), z, y);
      r = Rec{s.b, s.a, s.n, -s.m - 1};
    }
  }

  GroupElement ab = multiply(r.a, r.b);
  GroupElement ba = multiply(r.b, r.a);
  if (r.n < 1) fail(errc::internal, "conjugacy decomposition produced n < 1");
  if (!(power(ab, r.n) == y) || !(power(ba, r.n) == z) ||
      !(multiply(r.a, power(ba, r.m)) == x))
    fail(errc::internal, "conjugacy decomposition identities failed");

  ConjugacyDecomposition out;
  out.a = r.a;
  out.b = r.b;
  out.n = r.n;
  out.m = r.m;
  out.form_ab = classify_product(r.a, r.b);
  out.form_ba = classify_product(r.b, r.a);
  if (out.form_ab == ProductForm::neither || out.form_ba == ProductForm::neither)
    fail(errc::internal, "conjugacy decomposition product cancels below semi-reduced");
  return out;
}

std::vector<GroupElement> centralizer_ball(const GroupElement& g, int L, std::size_t cap) {
  Ball ball = enumerate_ball(*g.ctx, L, cap);
  std::vector<GroupElement> out;
  for (const GroupElement& c : ball.elements)
    if (commutes(c, g)) out.push_back(c);
  return out;
}

CentralizerStructure centralizer_structure(const GroupElement& g, int L, std::size_t cap) {
  if (!is_cyclically_reduced(g) || length(g) < 2)
    fail(errc::contract, "centralizer_structure requires a c.r. element of length >= 2");
  std::vector<GroupElement> cb = centralizer_ball(g, L, cap);
  std::vector<GroupElement> b_part;
  for (const GroupElement& c : cb)
    if (length(c) == 0) b_part.push_back(c);

  for (const GroupElement& s : cb) {
    if (length(s) == 0) continue;
    bool ok = true;
    for (const GroupElement& h : b_part)
      if (!commutes(s, h)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    // exponents worth trying: l(s^k) can never exceed the ball radius
    std::vector<std::pair<long long, GroupElement>> powers;
    for (long long k = -(L + 2); k <= L + 2; ++k) {
      GroupElement p = power(s, k);
      if (length(p) <= L) powers.emplace_back(k, p);
    }
    std::vector<CentralizerStructure::Factorization> cert;
    for (const GroupElement& c : cb) {
      int solutions = 0;
      CentralizerStructure::Factorization f;
      for (const auto& [k, p] : powers) {
        GroupElement h = multiply(invert(p), c);
        if (length(h) != 0) continue;
        ++solutions;
        f = {c, k, h};
      }
      if (solutions != 1) {
        ok = false;
        break;
      }
      cert.push_back(std::move(f));
    }
    if (!ok) continue;
    CentralizerStructure out;
    out.g = g;
    out.s = s;
    out.b_part = std::move(b_part);
    out.radius = L;
    out.certificate = std::move(cert);
    return out;
  }
  fail(errc::radius_insufficient,
       "no centralizer generator factors the whole centralizer ball at radius " +
           std::to_string(L));
}

CommutingDecomposition commuting_decompose(const GroupElement& x, const GroupElement& y, int L,
                                           std::size_t cap) {
  if (x.ctx != y.ctx) fail(errc::context_mismatch, "commuting_decompose across contexts");
  if (!commutes(x, y)) fail(errc::contract, "x and y do not commute");
  if (length(multiply(x, x)) != 2 * length(x))
    fail(errc::contract, "l(x^2) = 2 l(x) is required");
  GroupElement e = identity_element(*x.ctx);
  if (length(x) == 0) return CommutingDecomposition{y, x, e, 0, 1};

  Ball ball = enumerate_ball(*x.ctx, L, cap);
  const long long K = L + 2;
  auto exponents = [&]() {
    std::vector<long long> ks;
    ks.push_back(0);
    for (long long k = 1; k <= K; ++k) {
      ks.push_back(k);
      ks.push_back(-k);
    }
    return ks;
  }();
  for (const GroupElement& X : ball.elements) {
    if (length(X) == 0) continue;
    for (long long n : exponents) {
      if (n == 0) continue;  // x is not in B here
      GroupElement h1 = multiply(x, power(X, -n));
      if (length(h1) != 0) continue;
      for (long long m : exponents) {
        GroupElement h2 = multiply(y, power(X, -m));
        if (length(h2) != 0) continue;
        if (!is_identity(commutator(h1, X))) continue;
        if (!is_identity(commutator(h2, X))) continue;
        if (!is_identity(commutator(h1, h2))) continue;
        return CommutingDecomposition{X, h1, h2, n, m};
      }
    }
  }
  fail(errc::radius_insufficient,
       "no commuting decomposition found within radius " + std::to_string(L));
}

namespace {

std::vector<GroupElement> symmetrize_nontrivial(const std::vector<GroupElement>& U) {
  std::vector<GroupElement> v;
  for (const GroupElement& u : U) {
    if (length(u) == 0) continue;  // sequences require l(u_i) != 0
    v.push_back(u);
    v.push_back(invert(u));
  }
  std::sort(v.begin(), v.end(), ElementLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

WeaklyReducedReport is_weakly_reduced_up_to(const std::vector<GroupElement>& U, int n_max,
                                            std::uint64_t sequence_cap) {
  WeaklyReducedReport rep;
  std::vector<GroupElement> v = symmetrize_nontrivial(U);
  if (v.empty() || n_max < 2) return rep;
  std::vector<std::size_t> idx;
  std::vector<GroupElement> seq;
  // shortest first, canonical order within one length: the first violation
  // found is minimal
  for (int len = 2; len <= n_max && rep.weakly_reduced; ++len) {
    idx.assign(1, 0);
    while (!idx.empty()) {
      if (idx.back() == v.size()) {
        idx.pop_back();
        if (!idx.empty()) ++idx.back();
        continue;
      }
      std::size_t d = idx.size();
      bool fits = d < 2 || !is_identity(multiply(v[idx[d - 2]], v[idx[d - 1]]));
      if (fits && (int)d == len) {
        if (++rep.checked_count > sequence_cap)
          fail(errc::capacity, "weak-reduction sequence cap exceeded");
        seq.clear();
        for (std::size_t i : idx) seq.push_back(v[i]);
        GroupElement whole = seq[0];
        GroupElement tail = identity_element(*seq[0].ctx);
        for (std::size_t i = 1; i < seq.size(); ++i) tail = multiply(tail, seq[i]);
        whole = multiply(whole, tail);
        if (length(whole) < length(tail)) {
          rep.weakly_reduced = false;
          rep.violation = seq;
          return rep;
        }
        ++idx.back();
      } else if (fits) {
        idx.push_back(0);
      } else {
        ++idx.back();
      }
    }
  }
  return rep;
}

NielsenResult nielsen_reduce(const std::vector<GroupElement>& U, int n_max, int max_iterations) {
  NielsenResult out;
  std::vector<GroupElement> cur;
  for (const GroupElement& u : U)
    if (!is_identity(u)) cur.push_back(u);
  std::sort(cur.begin(), cur.end(), ElementLess{});
  cur.erase(std::unique(cur.begin(), cur.end()), cur.end());

  for (int it = 0; it < max_iterations; ++it) {
    WeaklyReducedReport rep = is_weakly_reduced_up_to(cur, n_max);
    if (rep.weakly_reduced) {
      out.reduced = cur;
      return out;
    }
    const std::vector<GroupElement>& seq = rep.violation;
    // candidates: members of cur occurring in the sequence, longest first
    std::vector<GroupElement> occurring;
    for (const GroupElement& u : cur) {
      GroupElement ui = invert(u);
      for (const GroupElement& s : seq)
        if (s == u || s == ui) {
          occurring.push_back(u);
          break;
        }
    }
    std::stable_sort(occurring.begin(), occurring.end(),
                     [](const GroupElement& a, const GroupElement& b) {
                       return length(a) > length(b);
                     });
    const GroupElement* g = nullptr;
    int max_len = occurring.empty() ? 0 : length(occurring.front());
    for (const GroupElement& cand : occurring) {
      if (length(cand) < max_len) break;
      GroupElement ci = invert(cand);
      int occ = 0;
      for (const GroupElement& s : seq)
        if (s == cand || s == ci) ++occ;
      if (occ == 1) {
        g = &cand;
        break;
      }
    }
    if (g == nullptr) {
      out.reduced = cur;
      out.completed = false;
      out.stuck_reason = "no member of the violating sequence occurs exactly once";
      return out;
    }
    GroupElement prod = identity_element(*seq[0].ctx);
    for (const GroupElement& s : seq) prod = multiply(prod, s);
    if (!is_identity(prod) && length(prod) >= length(*g)) {
      out.reduced = cur;
      out.completed = false;
      out.stuck_reason = "replacement does not shorten the generator";
      return out;
    }
    NielsenStep step{*g, prod, seq};
    GroupElement replaced = *g;
    cur.erase(std::remove(cur.begin(), cur.end(), replaced), cur.end());
    if (!is_identity(prod)) cur.push_back(prod);
    std::sort(cur.begin(), cur.end(), ElementLess{});
    cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
    out.log.push_back(std::move(step));
  }
  out.reduced = cur;
  out.completed = false;
  out.stuck_reason = "iteration cap reached";
  return out;
}

namespace {

MalnormalReport malnormal_scan(const std::vector<GroupElement>& H,
                               const std::vector<GroupElement>& conjugators) {
  MalnormalReport rep;
  std::vector<GroupElement> sorted = H;
  std::sort(sorted.begin(), sorted.end(), ElementLess{});
  for (const GroupElement& x : conjugators) {
    if (contains_sorted(sorted, x)) continue;
    for (const GroupElement& h : H) {
      if (is_identity(h)) continue;
      ++rep.checked_count;
      if (contains_sorted(sorted, conjugate(h, x))) {
        rep.holds = false;
        rep.witness = {h, x};
        return rep;
      }
    }
  }
  return rep;
}

void require_symmetric(const std::vector<GroupElement>& H) {
  if (H.empty()) fail(errc::domain, "subgroup set must contain the identity");
  std::vector<GroupElement> sorted = H;
  std::sort(sorted.begin(), sorted.end(), ElementLess{});
  if (!contains_sorted(sorted, identity_element(*H[0].ctx)))
    fail(errc::domain, "subgroup set must contain the identity");
  for (const GroupElement& h : H)
    if (!contains_sorted(sorted, invert(h)))
      fail(errc::domain, "subgroup set must be closed under inversion");
}

}  // namespace

MalnormalReport is_malnormal_up_to(const std::vector<GroupElement>& H, int L, std::size_t cap) {
  require_symmetric(H);
  Ball ball = enumerate_ball(*H[0].ctx, L, cap);
  return malnormal_scan(H, ball.elements);
}

MalnormalReport is_s_malnormal_up_to(const std::vector<GroupElement>& H, int L, std::size_t cap) {
  (void)L;
  (void)cap;
  require_symmetric(H);
  std::vector<GroupElement> s = generating_sphere(*H[0].ctx);
  std::vector<GroupElement> conj;
  for (const GroupElement& g : s)
    if (!is_identity(g)) conj.push_back(g);
  return malnormal_scan(H, conj);
}

CsaReport csa_check(const GroupContext& ctx, int L, std::size_t cap) {
  if (L < 2) fail(errc::domain, "csa_check needs radius >= 2");
  Ball ball = enumerate_ball(ctx, L, cap);
  CsaReport rep;
  rep.radius = L;

  for (const GroupElement& g : ball.elements) {
    if (is_identity(g)) continue;
    if (is_identity(multiply(g, g)) && rep.involution_witnesses.size() < 10)
      rep.involution_witnesses.push_back(g);
  }

  auto centralizer_in_ball = [&](const GroupElement& g) {
    std::vector<GroupElement> out;
    for (const GroupElement& c : ball.elements)
      if (commutes(c, g)) out.push_back(c);
    return out;
  };
  auto abelian = [](const std::vector<GroupElement>& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j)
        if (!commutes(set[i], set[j])) return false;
    return true;
  };

  // condition (i): sampled over nontrivial g of length <= 2
  for (const GroupElement& g : ball.elements) {
    if (is_identity(g) || length(g) > 2) continue;
    std::vector<GroupElement> c = centralizer_in_ball(g);
    bool inside_s = true;
    for (const GroupElement& e : c)
      if (length(e) > 1) {
        inside_s = false;
        break;
      }
    if (!inside_s) continue;
    if (!abelian(c)) {
      rep.condition_i_status = CheckStatus::violated;
      rep.condition_i_witness = {g};
      break;
    }
    MalnormalReport m = is_s_malnormal_up_to(c, L, cap);
    if (!m.holds) {
      rep.condition_i_status = CheckStatus::violated;
      rep.condition_i_witness = {g, m.witness[0], m.witness[1]};
      break;
    }
  }

  // condition (ii): every nontrivial g in B
  for (const GroupElement& g : ball.elements) {
    if (length(g) != 0 || is_identity(g)) continue;
    std::vector<GroupElement> c = centralizer_in_ball(g);
    if (!abelian(c)) {
      rep.condition_ii_status = CheckStatus::violated;
      rep.condition_ii_witness = {g};
      break;
    }
    MalnormalReport m = is_malnormal_up_to(c, L, cap);
    if (!m.holds) {
      rep.condition_ii_status = CheckStatus::violated;
      rep.condition_ii_witness = {g, m.witness[0], m.witness[1]};
      break;
    }
  }

  bool bad = !rep.involution_witnesses.empty() ||
             rep.condition_i_status == CheckStatus::violated ||
             rep.condition_ii_status == CheckStatus::violated;
  rep.verdict = bad ? CsaVerdict::refuted : CsaVerdict::consistent_with_csa_star;
  return rep;
}

SubgroupProbeReport subgroup_decomposition_probe(const GroupContext& ctx,
                                                const std::vector<GroupElement>& K_gens, int L,
                                                std::size_t cap) {
  Ball ball = enumerate_ball(ctx, L, cap);
  SubgroupProbeReport rep;

  // bounded closure of <K_gens> inside the ball
  std::vector<GroupElement> k_ball{identity_element(ctx)};
  std::vector<GroupElement> step = symmetrize_nontrivial(K_gens);
  for (const GroupElement& g : K_gens) {
    if (length(g) == 0 && !is_identity(g)) {
      step.push_back(g);
      step.push_back(invert(g));
    }
  }
  std::vector<GroupElement> frontier = k_ball;
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const GroupElement& k : frontier)
      for (const GroupElement& g : step) {
        GroupElement p = multiply(k, g);
        if (!ball.contains(p)) continue;
        if (!contains_sorted(k_ball, p)) {
          k_ball.insert(std::upper_bound(k_ball.begin(), k_ball.end(), p, ElementLess{}), p);
          next.push_back(p);
        }
      }
    frontier = std::move(next);
  }

  for (const GroupElement& x : ball.elements) {
    if (!rep.hypothesis_holds) break;
    for (const GroupElement& b : ball.elements) {
      if (length(b) != 0 || is_identity(b)) continue;
      GroupElement c = conjugate(b, x);
      if (contains_sorted(k_ball, c) && !is_identity(c)) {
        rep.hypothesis_holds = false;
        rep.hypothesis_witness = {b, x};
        break;
      }
    }
  }

  rep.nielsen = nielsen_reduce(K_gens, 3);
  for (const GroupElement& u : rep.nielsen.reduced) {
    GeneratorClassification gc;
    gc.generator = u;
    if (in_N(u)) {
      gc.cls = GeneratorClass::n_class_candidate;
      std::vector<GroupElement> cls = n_class(u, ball);
      for (const GroupElement& e : cls)
        if (!is_identity(e)) {
          gc.anchor = e;
          break;
        }
      if (!gc.anchor) gc.anchor = identity_element(ctx);
    } else {
      gc.cls = GeneratorClass::free_part_candidate;
    }
    rep.classifications.push_back(std::move(gc));
  }
  return rep;
}

}  // namespace valgroup
