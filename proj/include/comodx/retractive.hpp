#pragma once

#include <map>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "hom_enumeration.hpp"
#include "homology.hpp"
#include "standard.hpp"

namespace comodx {

/// (Z, i: X → Z, r: Z → X) with r ∘ i = id and i degreewise injective.
struct RetractiveSpace {
  SSet base;
  SSet total;
  SimplicialMap incl;
  SimplicialMap retr;
};

inline RetractiveSpace make_retractive(const SimplicialMap& i, const SimplicialMap& r) {
  if (i.codomain() != r.domain() && !i.codomain()->same_structure(*r.domain()))
    throw ValidationError("retractive space: i and r do not meet in the same total space");
  if (!(compose(r, i) == identity_map(i.domain())))
    throw ValidationError("retractive space: r o i is not the identity");
  if (!is_mono(i)) throw ValidationError("retractive space: i is not degreewise injective");
  return RetractiveSpace{i.domain(), i.codomain(), i, r};
}

/// The zero object (X, id, id).
inline RetractiveSpace zero_retractive(const SSet& X) { return make_retractive(identity_map(X), identity_map(X)); }

/// A map over and under X.
struct RetractiveMap {
  RetractiveSpace source;
  RetractiveSpace target;
  SimplicialMap map;
};

inline RetractiveMap make_retractive_map(const RetractiveSpace& s, const RetractiveSpace& t, const SimplicialMap& f) {
  if (!(compose(f, s.incl) == t.incl)) throw ValidationError("retractive map: f o i != i'");
  if (!(compose(t.retr, f) == s.retr)) throw ValidationError("retractive map: r' o f != r");
  return RetractiveMap{s, t, f};
}

inline RetractiveMap compose(const RetractiveMap& g, const RetractiveMap& f) {
  return RetractiveMap{f.source, g.target, compose(g.map, f.map)};
}

inline RetractiveMap identity_map(const RetractiveSpace& Z) { return RetractiveMap{Z, Z, identity_map(Z.total)}; }

/// Ret_X(Y) = (Y × X, i_{y0}, proj2) for pointed Y.
struct RetOf {
  RetractiveSpace space;
  FiberProduct product;
};

inline RetOf ret_functor(const SSet& Y, const SSet& X) {
  if (!Y->pointed()) throw std::invalid_argument("Ret_X: Y must be pointed");
  RetOf out;
  out.product = product(Y, X);
  int y0 = *Y->basepoint();
  SimplicialMap::Images inc(X->dimension() + 1);
  for (int n = 0; n <= X->dimension(); ++n)
    for (int b = 0; b < static_cast<int>(X->count(n)); ++b)
      inc[n].push_back(out.product.pair_or_throw(degenerate_vertex(y0, n), SimplexRef::nondeg(n, b)));
  out.space = make_retractive(SimplicialMap(X, out.product.object, std::move(inc)), out.product.proj2);
  return out;
}

/// V(Z, i, r) = Z / i(X).
inline Quotient v_functor(const RetractiveSpace& Z) { return quotient(Z.incl); }

/// (X × Δ[1], i_0, pr_1).
inline RetractiveSpace cylinder_object(const SSet& X) {
  auto P = product(X, standard_simplex(1));
  SimplicialMap::Images inc(X->dimension() + 1);
  for (int n = 0; n <= X->dimension(); ++n)
    for (int b = 0; b < static_cast<int>(X->count(n)); ++b)
      inc[n].push_back(P.pair_or_throw(SimplexRef::nondeg(n, b), degenerate_vertex(0, n)));
  return make_retractive(SimplicialMap(X, P.object, std::move(inc)), P.proj1);
}

// ---------------------------------------------------------------------------
// Change of base
// ---------------------------------------------------------------------------

struct PushforwardRet {
  RetractiveSpace space;
  Pushout pushout;  // of i' along a: inj1 from Z', inj2 from X
};

/// a_*(Z', i', r') = Z' ∪_{X'} X with the retraction induced by (a r', id).
inline PushforwardRet pushforward_ret(const SimplicialMap& a, const RetractiveSpace& Zp) {
  PushforwardRet out;
  out.pushout = pushout(Zp.incl, a);
  auto r = induced_map_from(out.pushout, Zp.incl, a, compose(a, Zp.retr), identity_map(a.codomain()));
  out.space = make_retractive(out.pushout.inj2, r);
  return out;
}

struct PullbackRet {
  RetractiveSpace space;
  FiberProduct fiber;  // Z ×_X X'
};

/// a^*(Z, i, r) = Z ×_X X' with section induced by (i a, id).
inline PullbackRet pullback_ret(const SimplicialMap& a, const RetractiveSpace& Z) {
  PullbackRet out;
  out.fiber = pullback(Z.retr, a);
  auto s = induced_map_into(out.fiber, compose(Z.incl, a), identity_map(a.domain()));
  out.space = make_retractive(s, out.fiber.proj2);
  return out;
}

/// a_* on a map f: Z'_1 → Z'_2 over X'.
inline RetractiveMap pushforward_map(const SimplicialMap& a, const RetractiveMap& f, const PushforwardRet& s,
                                     const PushforwardRet& t) {
  auto g = induced_map_from(s.pushout, f.source.incl, a, compose(t.pushout.inj1, f.map), t.pushout.inj2);
  return make_retractive_map(s.space, t.space, g);
}

/// a^* on a map f: Z_1 → Z_2 over X.
inline RetractiveMap pullback_map(const RetractiveMap& f, const PullbackRet& s, const PullbackRet& t) {
  auto g = induced_map_into(t.fiber, compose(f.map, s.fiber.proj1), s.fiber.proj2);
  return make_retractive_map(s.space, t.space, g);
}

/// Unit Z' → a^* a_* Z'.
inline RetractiveMap pushpull_unit(const SimplicialMap& a, const RetractiveSpace& Zp) {
  auto push = pushforward_ret(a, Zp);
  auto pull = pullback_ret(a, push.space);
  auto u = induced_map_into(pull.fiber, push.pushout.inj1, Zp.retr);
  return make_retractive_map(Zp, pull.space, u);
}

/// Counit a_* a^* Z → Z.
inline RetractiveMap pushpull_counit(const SimplicialMap& a, const RetractiveSpace& Z) {
  auto pull = pullback_ret(a, Z);
  auto push = pushforward_ret(a, pull.space);
  auto c = induced_map_from(push.pushout, pull.space.incl, a, pull.fiber.proj1, Z.incl);
  return make_retractive_map(push.space, Z, c);
}

// ---------------------------------------------------------------------------
// Limits and colimits, created in simplicial sets
// ---------------------------------------------------------------------------

struct RetractivePullback {
  RetractiveSpace space;
  FiberProduct fiber;
  RetractiveMap proj1;
  RetractiveMap proj2;
};

/// Pullback of Z' → Z ← Z''; î = (i', i''), r̂ = r' ∘ proj1.
inline RetractivePullback pullback_in_rx(const RetractiveMap& f, const RetractiveMap& g) {
  RetractivePullback out;
  out.fiber = pullback(f.map, g.map);
  auto i = induced_map_into(out.fiber, f.source.incl, g.source.incl);
  out.space = make_retractive(i, compose(f.source.retr, out.fiber.proj1));
  out.proj1 = make_retractive_map(out.space, f.source, out.fiber.proj1);
  out.proj2 = make_retractive_map(out.space, g.source, out.fiber.proj2);
  return out;
}

struct RetractivePushout {
  RetractiveSpace space;
  Pushout pushout;
  RetractiveMap inj1;
  RetractiveMap inj2;
};

/// Pushout of Z' ← Z → Z''; î = inj1 ∘ i', r̂ induced by (r', r'').
inline RetractivePushout pushout_in_rx(const RetractiveMap& f, const RetractiveMap& g) {
  RetractivePushout out;
  out.pushout = pushout(f.map, g.map);
  auto r = induced_map_from(out.pushout, f.map, g.map, f.target.retr, g.target.retr);
  out.space = make_retractive(compose(out.pushout.inj1, f.target.incl), r);
  out.inj1 = make_retractive_map(f.target, out.space, out.pushout.inj1);
  out.inj2 = make_retractive_map(g.target, out.space, out.pushout.inj2);
  return out;
}

/// The unique map from the zero object.
inline RetractiveMap from_zero(const RetractiveSpace& Z) {
  return make_retractive_map(zero_retractive(Z.base), Z, Z.incl);
}

/// The unique map to the zero object.
inline RetractiveMap to_zero(const RetractiveSpace& Z) { return make_retractive_map(Z, zero_retractive(Z.base), Z.retr); }

/// Z ∨_X Z': pushout over the zero object.
inline RetractivePushout wedge_over(const RetractiveSpace& A, const RetractiveSpace& B) {
  return pushout_in_rx(from_zero(A), from_zero(B));
}

// ---------------------------------------------------------------------------
// Cone and suspension relative to X
// ---------------------------------------------------------------------------

namespace detail {

/// z ↦ (z, constant t) into Z × Δ[1].
inline SimplicialMap cylinder_end(const SSet& Z, const FiberProduct& cyl, int t) {
  SimplicialMap::Images img(Z->dimension() + 1);
  for (int n = 0; n <= Z->dimension(); ++n)
    for (int b = 0; b < static_cast<int>(Z->count(n)); ++b)
      img[n].push_back(cyl.pair_or_throw(SimplexRef::nondeg(n, b), degenerate_vertex(t, n)));
  return SimplicialMap(Z, cyl.object, std::move(img));
}

}  // namespace detail

struct RelativeCone {
  RetractiveSpace space;
  SimplicialMap bottom;  // Z → CZ at the free end
};

/**
 * CZ: the mapping cylinder of r (Z × 1 glued to X along r), with i(X) × Δ[1]
 * then collapsed onto X by the projection.
 */
inline RelativeCone relative_cone(const RetractiveSpace& Z) {
  const auto& X = Z.base;
  auto D1 = standard_simplex(1);
  auto cyl = product(Z.total, D1);
  auto end1 = detail::cylinder_end(Z.total, cyl, 1);
  auto mr = pushout(end1, Z.retr);
  auto mr_retr = induced_map_from(mr, end1, Z.retr, compose(Z.retr, cyl.proj1), identity_map(X));
  auto xcyl = product(X, D1);
  auto k = compose(mr.inj1, product_map(Z.incl, identity_map(D1), xcyl, cyl));
  auto cz = pushout(k, xcyl.proj1);
  auto cz_retr = induced_map_from(cz, k, xcyl.proj1, mr_retr, identity_map(X));
  RelativeCone out;
  out.space = make_retractive(cz.inj2, cz_retr);
  out.bottom = compose(cz.inj1, compose(mr.inj1, detail::cylinder_end(Z.total, cyl, 0)));
  return out;
}

/// Σ_X(Z) = CZ ∪_Z X.
inline RetractiveSpace relative_suspension(const RetractiveSpace& Z) {
  auto cone = relative_cone(Z);
  auto po = pushout(cone.bottom, Z.retr);
  auto r = induced_map_from(po, cone.bottom, Z.retr, cone.space.retr, identity_map(Z.base));
  return make_retractive(po.inj2, r);
}

// ---------------------------------------------------------------------------
// Homology splitting
// ---------------------------------------------------------------------------

struct SplitCheck {
  bool holds = false;
  HomologySummary total;  // H(Z)
  HomologySummary split;  // H̃(Z/iX) ⊕ H(X)
};

/// H(Z) ≅ H̃(Z/iX) ⊕ H(X), compared by invariant factors.
inline SplitCheck e_split_check(const RetractiveSpace& Z) {
  SplitCheck out;
  out.total = homology(*Z.total);
  out.split = direct_sum(homology(*v_functor(Z).object, true), homology(*Z.base));
  out.holds = groups_isomorphic(out.total, out.split);
  return out;
}

// ---------------------------------------------------------------------------
// Hom-sets and the V ⊣ Ret_X transposes
// ---------------------------------------------------------------------------

/// All retractive maps S → T, by bounded enumeration.
inline std::vector<RetractiveMap> enumerate_retractive_maps(const RetractiveSpace& S, const RetractiveSpace& T,
                                                            std::size_t budget = 1'000'000) {
  std::map<std::pair<int, int>, SimplexRef> forced;
  for (int n = 0; n <= S.base->dimension(); ++n)
    for (int b = 0; b < static_cast<int>(S.base->count(n)); ++b) {
      const auto& img = S.incl.image(n, b);
      forced[{n, img.base}] = T.incl.image(n, b);
    }
  auto maps = enumerate_maps(
      S.total, T.total,
      [&](int n, int b, const SimplexRef& c) {
        if (auto it = forced.find({n, b}); it != forced.end() && it->second != c) return false;
        return T.retr(c) == S.retr.image(n, b);
      },
      budget);
  std::vector<RetractiveMap> out;
  for (auto& m : maps) out.push_back(RetractiveMap{S, T, std::move(m)});
  return out;
}

/// φ: Z/iX → Y  ↦  (φ ∘ p, r): Z → Y × X.
inline RetractiveMap ret_transpose_sharp(const RetractiveSpace& Z, const RetOf& target, const SimplicialMap& phi) {
  auto q = v_functor(Z);
  auto f = induced_map_into(target.product, compose(phi, q.projection), Z.retr);
  return make_retractive_map(Z, target.space, f);
}

/// f: Z → Y × X  ↦  [z] ↦ pr_1 f(z).
inline SimplicialMap ret_transpose_flat(const RetractiveMap& f, const RetOf& target) {
  auto q = v_functor(f.source);
  auto g = compose(target.product.proj1, f.map);
  const auto& Q = *q.object;
  SimplicialMap::Images img(Q.dimension() + 1);
  const auto& Y = target.product.proj1.codomain();
  for (int n = 0; n <= Q.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(Q.count(n)); ++b) {
      int orig = q.origin[n][b];
      img[n].push_back(orig < 0 ? Y->basepoint_at(n) : g.image(n, orig));
    }
  return SimplicialMap(q.object, Y, std::move(img));
}

}  // namespace comodx
