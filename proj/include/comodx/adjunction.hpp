#pragma once

#include <optional>
#include <string>
#include <vector>

#include "comodule.hpp"
#include "retractive.hpp"

namespace comodx {

/**
 * Y ⋆ X for a comodule (Y, ℓ), built directly: n-simplices are (*, x) for
 * x ∈ X_n and (y, ℓ(y)) for non-basepoint y ∈ Y_n. The X-part keeps X's
 * indices; the Y-part follows it.
 */
struct Star {
  Comodule comodule;
  RetractiveSpace space;
  SimplicialMap pi;                       // π_ρ: Y ⋆ X → Y
  std::vector<std::vector<int>> y_index;  // nondegenerate y → index in Y ⋆ X, -1 at the basepoint

  SimplexRef y_part(const SimplexRef& y) const { return SimplexRef{y.dim, y_index[y.base_dim()][y.base], y.word}; }
  /// The simplex (y, x); requires x = ℓ(y) unless y is at the basepoint.
  SimplexRef element(const SimplexRef& y, const SimplexRef& x) const {
    if (comodule.at_basepoint(y)) return x;
    if (comodule.label_of(y) != x) throw ValidationError("star: (y, x) with x different from the label of y");
    return y_part(y);
  }
};

inline Star star(const Comodule& c) {
  const auto& X = *c.base;
  const auto& Y = *c.space;
  Star out;
  out.comodule = c;
  SimplicialSet S;
  int top = std::max(X.dimension(), Y.dimension());
  out.y_index.resize(std::max(Y.dimension() + 1, 0));
  for (int n = 0; n <= top; ++n) {
    for (int b = 0; b < static_cast<int>(X.count(n)); ++b) S.add_simplex(n, "(*," + X.name(n, b) + ")", X.simplex(n, b).faces);
    for (int b = 0; b < static_cast<int>(Y.count(n)); ++b) {
      SimplexRef y = SimplexRef::nondeg(n, b);
      if (c.at_basepoint(y)) {
        out.y_index[n].push_back(-1);
        continue;
      }
      auto l = c.label_of(y);
      std::vector<SimplexRef> faces;
      for (int i = 0; i <= n && n > 0; ++i) {
        auto f = Y.face(i, y);
        faces.push_back(c.at_basepoint(f) ? X.face(i, l) : out.y_part(f));
      }
      out.y_index[n].push_back(S.add_simplex(n, "(" + Y.name(n, b) + "," + X.ref_name(l) + ")", std::move(faces)));
    }
  }
  S.validate();
  auto Ss = share(std::move(S));
  SimplicialMap::Images inc(X.dimension() + 1), ret(Ss->dimension() + 1), pi(Ss->dimension() + 1);
  for (int n = 0; n <= X.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(X.count(n)); ++b) inc[n].push_back(SimplexRef::nondeg(n, b));
  for (int n = 0; n <= Ss->dimension(); ++n) {
    for (int b = 0; b < static_cast<int>(X.count(n)); ++b) {
      ret[n].push_back(SimplexRef::nondeg(n, b));
      pi[n].push_back(Y.basepoint_at(n));
    }
    for (int b = 0; b < static_cast<int>(Y.count(n)); ++b) {
      SimplexRef y = SimplexRef::nondeg(n, b);
      if (c.at_basepoint(y)) continue;
      ret[n].push_back(c.label_of(y));
      pi[n].push_back(y);
    }
  }
  out.space = make_retractive(SimplicialMap(c.base, Ss, std::move(inc)), SimplicialMap(Ss, c.base, std::move(ret)));
  out.pi = SimplicialMap(Ss, c.space, std::move(pi));
  return out;
}

/// ⋆X on a comodule map: (y, x) ↦ (f(y), x).
inline RetractiveMap star_map(const ComoduleMap& f, const Star& s, const Star& t) {
  const auto& S = *s.space.total;
  const auto& X = *s.comodule.base;
  SimplicialMap::Images img(S.dimension() + 1);
  for (int n = 0; n <= S.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(S.count(n)); ++b) {
      if (b < static_cast<int>(X.count(n))) {
        img[n].push_back(SimplexRef::nondeg(n, b));
        continue;
      }
      auto y = s.pi.image(n, b);
      img[n].push_back(t.element(f.map(y), s.comodule.label_of(y)));
    }
  return make_retractive_map(s.space, t.space, SimplicialMap(s.space.total, t.space.total, std::move(img)));
}

/// The same object as the pullback of ρ along Y × X → Y ∧ X₊; returns the comparison Y ⋆ X → pullback.
inline SimplicialMap star_pullback_comparison(const Star& s) {
  const auto& c = s.comodule;
  auto rho = induce_rho(c);
  auto YX = product(c.space, c.base);
  const auto& P = *YX.object;
  SimplicialMap::Images q(P.dimension() + 1);
  for (int n = 0; n <= P.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(P.count(n)); ++b) {
      auto y = YX.proj1.image(n, b);
      auto x = YX.proj2.image(n, b);
      q[n].push_back(c.at_basepoint(y) ? rho.smash.object->basepoint_at(n) : rho.smash.pair(y, x));
    }
  SimplicialMap to_smash(YX.object, rho.smash.object, std::move(q));
  auto pb = pullback(rho.rho, to_smash);
  const auto& S = *s.space.total;
  SimplicialMap::Images img(S.dimension() + 1);
  for (int n = 0; n <= S.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(S.count(n)); ++b) {
      auto y = s.pi.image(n, b);
      auto x = s.space.retr.image(n, b);
      img[n].push_back(pb.pair_or_throw(y, YX.pair_or_throw(y, x)));
    }
  return SimplicialMap(s.space.total, pb.object, std::move(img));
}

// ---------------------------------------------------------------------------
// −/X
// ---------------------------------------------------------------------------

struct Slash {
  Comodule comodule;
  Quotient quotient;
};

/// (Z, i, r)/X = Z/i(X) with ℓ([z]) = r(z).
inline Slash slash(const RetractiveSpace& Z) {
  Slash out;
  out.quotient = quotient(Z.incl);
  const auto& Q = *out.quotient.object;
  Labels labels(Q.dimension() + 1);
  for (int n = 0; n <= Q.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(Q.count(n)); ++b) {
      int o = out.quotient.origin[n][b];
      labels[n].push_back(o < 0 ? std::nullopt : std::optional<SimplexRef>(Z.retr.image(n, o)));
    }
  out.comodule = from_labels(Z.base, out.quotient.object, std::move(labels));
  return out;
}

/// −/X on a retractive map.
inline ComoduleMap slash_map(const RetractiveMap& h, const Slash& s, const Slash& t) {
  return make_comodule_map(s.comodule, t.comodule, induced_quotient_map(h.map, s.quotient, t.quotient));
}

// ---------------------------------------------------------------------------
// Unit, counit, transposes
// ---------------------------------------------------------------------------

struct Unit {
  Slash slash;
  Star star;
  RetractiveMap map;  // z ↦ ([z], r(z))
};

inline Unit unit(const RetractiveSpace& Z) {
  Unit out;
  out.slash = slash(Z);
  out.star = star(out.slash.comodule);
  const auto& T = *Z.total;
  SimplicialMap::Images img(T.dimension() + 1);
  for (int n = 0; n <= T.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(T.count(n)); ++b)
      img[n].push_back(out.star.element(out.slash.quotient.projection.image(n, b), Z.retr.image(n, b)));
  out.map = make_retractive_map(Z, out.star.space, SimplicialMap(Z.total, out.star.space.total, std::move(img)));
  return out;
}

struct Counit {
  Star star;
  Slash slash;
  ComoduleMap map;                       // π̂: [(y, x)] ↦ y
  std::optional<SimplicialMap> inverse;  // certified two-sided inverse
};

inline Counit counit(const Comodule& c) {
  Counit out;
  out.star = star(c);
  out.slash = slash(out.star.space);
  const auto& Q = *out.slash.quotient.object;
  SimplicialMap::Images img(Q.dimension() + 1);
  for (int n = 0; n <= Q.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(Q.count(n)); ++b) {
      int o = out.slash.quotient.origin[n][b];
      img[n].push_back(o < 0 ? c.space->basepoint_at(n) : out.star.pi.image(n, o));
    }
  out.map = make_comodule_map(out.slash.comodule, c, SimplicialMap(out.slash.quotient.object, c.space, std::move(img)));
  out.inverse = certify_iso(out.map.map);
  if (out.inverse) make_comodule_map(c, out.slash.comodule, *out.inverse);
  return out;
}

/// f♭([z]) = π_ρ f(z).
inline ComoduleMap transpose_flat(const RetractiveMap& f, const Slash& s, const Star& t) {
  const auto& Q = *s.quotient.object;
  SimplicialMap::Images img(Q.dimension() + 1);
  for (int n = 0; n <= Q.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(Q.count(n)); ++b) {
      int o = s.quotient.origin[n][b];
      img[n].push_back(o < 0 ? t.comodule.space->basepoint_at(n) : t.pi(f.map.image(n, o)));
    }
  return make_comodule_map(s.comodule, t.comodule, SimplicialMap(s.quotient.object, t.comodule.space, std::move(img)));
}

/// g♯(z) = (g p_i z, r z).
inline RetractiveMap transpose_sharp(const ComoduleMap& g, const RetractiveSpace& Z, const Slash& s, const Star& t) {
  const auto& T = *Z.total;
  SimplicialMap::Images img(T.dimension() + 1);
  for (int n = 0; n <= T.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(T.count(n)); ++b)
      img[n].push_back(t.element(g.map(s.quotient.projection.image(n, b)), Z.retr.image(n, b)));
  return make_retractive_map(Z, t.space, SimplicialMap(Z.total, t.space.total, std::move(img)));
}

// ---------------------------------------------------------------------------
// Cofree objects
// ---------------------------------------------------------------------------

/// Ret_X(Y) → F(Y) ⋆ X, (y, x) ↦ ([y, x], x); certified by the caller.
inline RetractiveMap cofree_star_comparison(const RetOf& ret, const CofreeComodule& F, const Star& t) {
  const auto& P = *ret.product.object;
  SimplicialMap::Images img(P.dimension() + 1);
  for (int n = 0; n <= P.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(P.count(n)); ++b) {
      auto y = ret.product.proj1.image(n, b);
      auto x = ret.product.proj2.image(n, b);
      auto yx = ret.product.proj1.codomain()->is_basepoint(y) ? F.comodule.space->basepoint_at(n) : F.smash.pair(y, x);
      img[n].push_back(t.element(yx, x));
    }
  return make_retractive_map(ret.space, t.space, SimplicialMap(ret.space.total, t.space.total, std::move(img)));
}

/// F(W) ⋆ X → W: the X-part goes to the basepoint, ([w, x], x) to w.
inline SimplicialMap cofree_star_to_base(const CofreeComodule& F, const Star& t) {
  const auto& S = *t.space.total;
  const auto& W = F.smash.product.proj1.codomain();
  SimplicialMap::Images img(S.dimension() + 1);
  for (int n = 0; n <= S.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(S.count(n)); ++b) {
      auto comp = F.smash.components(t.pi.image(n, b));
      img[n].push_back(comp ? comp->first : W->basepoint_at(n));
    }
  return SimplicialMap(t.space.total, W, std::move(img));
}

// ---------------------------------------------------------------------------
// Pullbacks of comodules
// ---------------------------------------------------------------------------

struct ComodulePullback {
  Comodule comodule;
  ComoduleMap proj1;
  ComoduleMap proj2;
  Star star1, star0, star2;  // of the source of f, the common target, the source of g
  RetractivePullback rx;
  Slash slash;
};

/// (c' ⋆ X ×_{c ⋆ X} c'' ⋆ X)/X with legs through the counits.
inline ComodulePullback comodule_pullback(const ComoduleMap& f, const ComoduleMap& g) {
  ComodulePullback out;
  out.star1 = star(f.source);
  out.star0 = star(f.target);
  out.star2 = star(g.source);
  out.rx = pullback_in_rx(star_map(f, out.star1, out.star0), star_map(g, out.star2, out.star0));
  out.slash = slash(out.rx.space);
  out.comodule = out.slash.comodule;
  auto c1 = counit(f.source);
  auto c2 = counit(g.source);
  out.proj1 = compose(c1.map, slash_map(out.rx.proj1, out.slash, c1.slash));
  out.proj2 = compose(c2.map, slash_map(out.rx.proj2, out.slash, c2.slash));
  out.proj1 = make_comodule_map(out.comodule, f.source, out.proj1.map);
  out.proj2 = make_comodule_map(out.comodule, g.source, out.proj2.map);
  return out;
}

struct CofreePullback {
  Comodule comodule;
  Star star1;
  FiberProduct fiber;  // (c' ⋆ X) ×_W W'', unpointed
  RetractiveSpace space;
  Slash slash;
};

/// The special case g = F(h) for h: W'' → W: ((c' ⋆ X) ×_W W'')/X.
inline CofreePullback comodule_pullback_cofree(const ComoduleMap& f, const CofreeComodule& FW, const SimplicialMap& h) {
  if (!h.is_pointed()) throw std::invalid_argument("cofree pullback: h must be pointed");
  CofreePullback out;
  out.star1 = star(f.source);
  auto t = star(FW.comodule);
  auto phi = compose(cofree_star_to_base(FW, t), star_map(f, out.star1, t).map);
  out.fiber = pullback(phi, h);
  const auto& X = *f.source.base;
  int w0 = *h.domain()->basepoint();
  SimplicialMap::Images inc(X.dimension() + 1);
  for (int n = 0; n <= X.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(X.count(n)); ++b)
      inc[n].push_back(out.fiber.pair_or_throw(SimplexRef::nondeg(n, b), degenerate_vertex(w0, n)));
  out.space = make_retractive(SimplicialMap(f.source.base, out.fiber.object, std::move(inc)),
                              compose(out.star1.space.retr, out.fiber.proj1));
  out.slash = slash(out.space);
  out.comodule = out.slash.comodule;
  return out;
}

/**
 * Compares the general pullback formula with the cofree special case for
 * g = F(h): builds the comparison of retractive spaces and the induced map of
 * slashes and certifies both as isomorphisms.
 */
inline bool pullback_formulas_agree(const ComodulePullback& general, const CofreePullback& special,
                                    const CofreeComodule& FW2) {
  auto psi = cofree_star_to_base(FW2, general.star2);
  auto cmp = induced_map_into(special.fiber, general.rx.proj1.map, compose(psi, general.rx.proj2.map));
  RetractiveMap m;
  try {
    m = make_retractive_map(general.rx.space, special.space, cmp);
  } catch (const ValidationError&) {
    return false;
  }
  if (!certify_iso(m.map)) return false;
  auto sm = slash_map(m, general.slash, special.slash);
  auto inv = certify_iso(sm.map);
  if (!inv) return false;
  try {
    make_comodule_map(special.comodule, general.comodule, *inv);
  } catch (const ValidationError&) {
    return false;
  }
  return true;
}

struct UniversalPropertyCheck {
  std::size_t cones = 0;
  std::size_t failures = 0;  // cones with zero or several mediating maps
};

/// For every commuting cone (u, v) from W, counts comodule maps W → P with proj ∘ m = (u, v).
inline UniversalPropertyCheck check_pullback_universal(const ComodulePullback& pb, const ComoduleMap& f,
                                                       const ComoduleMap& g, const Comodule& W,
                                                       std::size_t budget = 2'000'000) {
  UniversalPropertyCheck out;
  auto us = enumerate_comodule_maps(W, f.source, budget);
  auto vs = enumerate_comodule_maps(W, g.source, budget);
  auto ms = enumerate_comodule_maps(W, pb.comodule, budget);
  for (const auto& u : us)
    for (const auto& v : vs) {
      if (!(compose(f.map, u.map) == compose(g.map, v.map))) continue;
      ++out.cones;
      std::size_t count = 0;
      for (const auto& m : ms)
        if (compose(pb.proj1.map, m.map) == u.map && compose(pb.proj2.map, m.map) == v.map) ++count;
      if (count != 1) ++out.failures;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Naturality and preservation checks
// ---------------------------------------------------------------------------

/// a_*(Z/X') and (a_* Z)/X agree: [z] ↦ [inj1 z] is a label-preserving isomorphism.
inline bool check_pushforward_square(const SimplicialMap& a, const RetractiveSpace& Z) {
  auto s = slash(Z);
  auto lhs = pushforward_comod(a, s.comodule);
  auto push = pushforward_ret(a, Z);
  auto rhs = slash(push.space);
  try {
    auto m = make_comodule_map(lhs, rhs.comodule, induced_quotient_map(push.pushout.inj1, s.quotient, rhs.quotient));
    auto inv = certify_iso(m.map);
    if (!inv) return false;
    make_comodule_map(rhs.comodule, lhs, *inv);
  } catch (const ValidationError&) {
    return false;
  }
  return true;
}

struct StarPreservation {
  bool pushout = false;      // (c' ∪_c c'') ⋆ X ≅ c' ⋆ X ∪_{c ⋆ X} c'' ⋆ X
  bool star_mono = false;    // f mono ⇔ f ⋆ X mono, for both legs
  bool slash_mono = false;   // h mono ⇔ h/X mono, for both legs of the retractive pushout
  bool all() const { return pushout && star_mono && slash_mono; }
};

inline StarPreservation check_star_preserves(const ComoduleMap& f, const ComoduleMap& g) {
  StarPreservation out;
  auto po = comodule_pushout(f, g);
  auto s0 = star(f.source);
  auto s1 = star(f.target);
  auto s2 = star(g.target);
  auto sp = star(po.comodule);
  auto sf = star_map(f, s0, s1);
  auto sg = star_map(g, s0, s2);
  auto rx = pushout_in_rx(sf, sg);
  auto cmp = induced_map_from(rx.pushout, sf.map, sg.map, star_map(po.inj1, s1, sp).map, star_map(po.inj2, s2, sp).map);
  out.pushout = certify_iso(cmp).has_value();
  out.star_mono = is_mono(f.map) == is_mono(sf.map) && is_mono(g.map) == is_mono(sg.map);
  bool slash_ok = true;
  for (const auto& leg : {rx.inj1, rx.inj2}) {
    auto a = slash(leg.source);
    auto b = slash(leg.target);
    slash_ok = slash_ok && is_mono(leg.map) == is_mono(slash_map(leg, a, b).map);
  }
  for (const auto& leg : {sf, sg}) {
    auto a = slash(leg.source);
    auto b = slash(leg.target);
    slash_ok = slash_ok && is_mono(leg.map) == is_mono(slash_map(leg, a, b).map);
  }
  out.slash_mono = slash_ok;
  return out;
}

/// a^* of a comodule pushout is the pushout of the a^*'s.
inline bool check_pullback_preserves_pushout(const SimplicialMap& a, const ComoduleMap& f, const ComoduleMap& g) {
  auto po = comodule_pushout(f, g);
  auto p0 = pullback_comod(a, f.source);
  auto p1 = pullback_comod(a, f.target);
  auto p2 = pullback_comod(a, g.target);
  auto pp = pullback_comod(a, po.comodule);
  auto af = pullback_comod_map(f, p0, p1);
  auto ag = pullback_comod_map(g, p0, p2);
  auto po2 = comodule_pushout(af, ag);
  auto cmp = induced_map_from(po2.pushout, af.map, ag.map, pullback_comod_map(po.inj1, p1, pp).map,
                              pullback_comod_map(po.inj2, p2, pp).map);
  auto inv = certify_iso(cmp);
  if (!inv) return false;
  try {
    make_comodule_map(po2.comodule, pp.comodule, SimplicialMap(po2.comodule.space, pp.comodule.space, cmp.images()));
  } catch (const ValidationError&) {
    return false;
  }
  return true;
}

}  // namespace comodx
