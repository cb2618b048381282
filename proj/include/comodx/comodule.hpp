#pragma once

#include <optional>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "hom_enumeration.hpp"
#include "homology.hpp"
#include "standard.hpp"

namespace comodx {

/**
 * A right X₊-comodule in labeled form: a pointed Y and, for each
 * nondegenerate non-basepoint simplex y, an X-simplex ℓ(y) of the same
 * dimension. The coaction is ρ(y) = [(y, ℓ(y))].
 */
struct Comodule {
  SSet base;
  SSet space;
  std::vector<std::vector<std::optional<SimplexRef>>> labels;  // nullopt only at the basepoint

  /// ℓ extended to degenerate simplices: ℓ(s_w y) = s_w ℓ(y).
  SimplexRef label_of(const SimplexRef& y) const {
    const auto& l = labels.at(y.base_dim()).at(y.base);
    if (!l) throw std::invalid_argument("label_of: the basepoint carries no label");
    return degenerate(y.word, *l);
  }
  bool at_basepoint(const SimplexRef& y) const { return space->is_basepoint(y); }
};

using Labels = std::vector<std::vector<std::optional<SimplexRef>>>;

/// Checks labels for totality and compatibility with faces; throws ValidationError.
inline void validate_comodule(const Comodule& c) {
  const auto& X = *c.base;
  const auto& Y = *c.space;
  if (!Y.pointed()) throw ValidationError("comodule: underlying simplicial set is not pointed");
  if (static_cast<int>(c.labels.size()) != Y.dimension() + 1)
    throw ValidationError("comodule: label table has the wrong number of dimensions");
  for (int n = 0; n <= Y.dimension(); ++n) {
    if (c.labels[n].size() != Y.count(n)) throw ValidationError("comodule: label table has the wrong size");
    for (int b = 0; b < static_cast<int>(Y.count(n)); ++b) {
      SimplexRef y = SimplexRef::nondeg(n, b);
      const auto& l = c.labels[n][b];
      if (c.at_basepoint(y)) {
        if (l) throw ValidationError("comodule: the basepoint must not be labeled");
        continue;
      }
      if (!l) throw ValidationError("comodule: '" + Y.name(n, b) + "' has no label");
      if (l->dim != n || !X.contains(*l))
        throw ValidationError("comodule: label of '" + Y.name(n, b) + "' is not an " + std::to_string(n) +
                              "-simplex of the base");
      for (int i = 0; i <= n && n > 0; ++i) {
        auto f = Y.face(i, y);
        if (c.at_basepoint(f)) continue;
        if (c.label_of(f) != X.face(i, *l))
          throw ValidationError("comodule: label of d" + std::to_string(i) + " " + Y.name(n, b) + " is not d" +
                                std::to_string(i) + " of its label");
      }
    }
  }
}

inline Comodule from_labels(const SSet& X, const SSet& Y, Labels labels) {
  Comodule c{X, Y, std::move(labels)};
  validate_comodule(c);
  return c;
}

/// Structural equality: same base and space tables and equal labels.
inline bool same_comodule(const Comodule& a, const Comodule& b) {
  return a.base->same_structure(*b.base) && a.space->same_structure(*b.space) && a.labels == b.labels;
}

// ---------------------------------------------------------------------------
// The coaction in map form
// ---------------------------------------------------------------------------

struct Coaction {
  SSet base_plus;  // X₊
  Smash smash;     // Y ∧ X₊
  SimplicialMap rho;
};

inline Coaction coaction_target(const SSet& Y, const SSet& X) {
  Coaction out;
  out.base_plus = plus_basepoint(X);
  out.smash = smash(Y, out.base_plus);
  return out;
}

/// ρ: Y → Y ∧ X₊, y ↦ [(y, ℓ(y))].
inline Coaction induce_rho(const Comodule& c) {
  auto out = coaction_target(c.space, c.base);
  const auto& Y = *c.space;
  SimplicialMap::Images img(Y.dimension() + 1);
  for (int n = 0; n <= Y.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(Y.count(n)); ++b) {
      SimplexRef y = SimplexRef::nondeg(n, b);
      img[n].push_back(c.at_basepoint(y) ? out.smash.object->basepoint_at(n) : out.smash.pair(y, c.label_of(y)));
    }
  out.rho = SimplicialMap(c.space, out.smash.object, std::move(img));
  return out;
}

/**
 * Reads labels off a coaction ρ: Y → Y ∧ X₊ built over `target`. Checks
 * pointedness, the counit law (first component of ρ(y) is y, second not at
 * +) and coassociativity on decoded triples; throws ValidationError.
 */
inline Comodule make_comodule_from_rho(const SSet& X, const Coaction& target, const SimplicialMap& rho) {
  const auto& Y = *rho.domain();
  if (!rho.is_pointed()) throw ValidationError("coaction: rho is not pointed");
  Labels labels(Y.dimension() + 1);
  for (int n = 0; n <= Y.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(Y.count(n)); ++b) {
      SimplexRef y = SimplexRef::nondeg(n, b);
      if (Y.is_basepoint(y)) {
        labels[n].push_back(std::nullopt);
        continue;
      }
      auto comp = target.smash.components(rho.image(n, b));
      if (!comp || comp->first != y)
        throw ValidationError("coaction: counit fails at '" + Y.name(n, b) + "'");
      // (ρ ∧ X₊)ρ(y) = ((y, x), x) must equal (Y ∧ Δ₊)ρ(y) = (y, (x, x))
      auto again = target.smash.components(rho(comp->first));
      if (!again || again->first != y || again->second != comp->second)
        throw ValidationError("coaction: coassociativity fails at '" + Y.name(n, b) + "'");
      labels[n].push_back(comp->second);
    }
  return from_labels(X, rho.domain(), std::move(labels));
}

// ---------------------------------------------------------------------------
// Maps
// ---------------------------------------------------------------------------

struct ComoduleMap {
  Comodule source;
  Comodule target;
  SimplicialMap map;
};

inline ComoduleMap make_comodule_map(const Comodule& s, const Comodule& t, const SimplicialMap& f) {
  if (!f.is_pointed()) throw ValidationError("comodule map: not pointed");
  const auto& Y = *s.space;
  for (int n = 0; n <= Y.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(Y.count(n)); ++b) {
      SimplexRef y = SimplexRef::nondeg(n, b);
      if (s.at_basepoint(y)) continue;
      const auto& img = f.image(n, b);
      if (t.at_basepoint(img)) continue;
      if (t.label_of(img) != s.label_of(y))
        throw ValidationError("comodule map: label of f(" + Y.name(n, b) + ") differs");
    }
  return ComoduleMap{s, t, f};
}

inline ComoduleMap compose(const ComoduleMap& g, const ComoduleMap& f) {
  return ComoduleMap{f.source, g.target, compose(g.map, f.map)};
}

inline ComoduleMap identity_map(const Comodule& c) { return ComoduleMap{c, c, identity_map(c.space)}; }

/// All comodule maps s → t, by bounded enumeration.
inline std::vector<ComoduleMap> enumerate_comodule_maps(const Comodule& s, const Comodule& t,
                                                        std::size_t budget = 1'000'000) {
  int bp = *s.space->basepoint();
  auto maps = enumerate_maps(
      s.space, t.space,
      [&](int n, int b, const SimplexRef& cand) {
        SimplexRef y = SimplexRef::nondeg(n, b);
        if (n == 0 && b == bp) return t.at_basepoint(cand);
        return t.at_basepoint(cand) || t.label_of(cand) == s.label_of(y);
      },
      budget);
  std::vector<ComoduleMap> out;
  for (auto& m : maps) out.push_back(ComoduleMap{s, t, std::move(m)});
  return out;
}

// ---------------------------------------------------------------------------
// Cofree, forgetful, tensoring
// ---------------------------------------------------------------------------

struct CofreeComodule {
  Comodule comodule;
  Smash smash;  // Y ∧ X₊
};

/// F(Y) = Y ∧ X₊ with ℓ(y ∧ x) = x.
inline CofreeComodule cofree(const SSet& Y, const SSet& X) {
  CofreeComodule out;
  out.smash = smash(Y, plus_basepoint(X));
  const auto& S = *out.smash.object;
  Labels labels(S.dimension() + 1);
  for (int n = 0; n <= S.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(S.count(n)); ++b) {
      auto c = out.smash.components(SimplexRef::nondeg(n, b));
      labels[n].push_back(c ? std::optional<SimplexRef>(c->second) : std::nullopt);
    }
  out.comodule = from_labels(X, out.smash.object, std::move(labels));
  return out;
}

/// F on a pointed map h: Y → W, namely h ∧ X₊.
inline ComoduleMap cofree_map(const SimplicialMap& h, const CofreeComodule& s, const CofreeComodule& t) {
  auto Xp = s.smash.product.proj2.codomain();
  return make_comodule_map(s.comodule, t.comodule,
                           smash_map(h, identity_map(Xp), s.smash, t.smash));
}

inline SSet forget(const Comodule& c) { return c.space; }

/// c ⊗ K = Y ∧ K with ℓ(y ∧ k) = ℓ(y).
inline Comodule tensor_sset(const Comodule& c, const SSet& K) {
  auto sm = smash(c.space, K);
  const auto& S = *sm.object;
  Labels labels(S.dimension() + 1);
  for (int n = 0; n <= S.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(S.count(n)); ++b) {
      auto comp = sm.components(SimplexRef::nondeg(n, b));
      labels[n].push_back(comp ? std::optional<SimplexRef>(c.label_of(comp->first)) : std::nullopt);
    }
  return from_labels(c.base, sm.object, std::move(labels));
}

// ---------------------------------------------------------------------------
// Change of base
// ---------------------------------------------------------------------------

/// a_*(Y, ρ) = (Y, (Y ∧ a₊)ρ): labels a ∘ ℓ.
inline Comodule pushforward_comod(const SimplicialMap& a, const Comodule& c) {
  Labels labels = c.labels;
  for (auto& level : labels)
    for (auto& l : level)
      if (l) l = a(*l);
  return from_labels(a.codomain(), c.space, std::move(labels));
}

struct PullbackComod {
  Comodule comodule;
  FiberProduct fiber;  // Y ×_{Y ∧ X₊} (Y ∧ X'₊)
  Coaction over;       // ρ of the input
  Smash local;         // Y ∧ X'₊
};

/// a^* Y: the pullback of ρ along Y ∧ a₊, labeled by the X'-component.
inline PullbackComod pullback_comod(const SimplicialMap& a, const Comodule& c) {
  PullbackComod out;
  out.over = induce_rho(c);
  auto Xp_plus = plus_basepoint(a.domain());
  out.local = smash(c.space, Xp_plus);
  SimplicialMap::Images aplus(Xp_plus->dimension() + 1);
  for (int n = 0; n <= a.domain()->dimension(); ++n) aplus[n] = a.images()[n];
  aplus[0].push_back(SimplexRef::nondeg(0, *out.over.base_plus->basepoint()));
  SimplicialMap a_plus(Xp_plus, out.over.base_plus, std::move(aplus));
  auto ya = smash_map(identity_map(c.space), a_plus, out.local, out.over.smash);
  out.fiber = pullback(out.over.rho, ya);
  const auto& P = *out.fiber.object;
  Labels labels(P.dimension() + 1);
  for (int n = 0; n <= P.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(P.count(n)); ++b) {
      auto comp = out.local.components(out.fiber.proj2.image(n, b));
      labels[n].push_back(comp ? std::optional<SimplexRef>(comp->second) : std::nullopt);
    }
  out.comodule = from_labels(a.domain(), out.fiber.object, std::move(labels));
  return out;
}

/// Comodule map c → a^* a_* c: y ↦ (y, [y, ℓ(y)]).
inline ComoduleMap comod_pushpull_unit(const SimplicialMap& a, const Comodule& c, const PullbackComod& pp) {
  const auto& Y = *c.space;
  SimplicialMap::Images img(Y.dimension() + 1);
  for (int n = 0; n <= Y.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(Y.count(n)); ++b) {
      SimplexRef y = SimplexRef::nondeg(n, b);
      if (c.at_basepoint(y))
        img[n].push_back(pp.comodule.space->basepoint_at(n));
      else
        img[n].push_back(pp.fiber.pair_or_throw(y, pp.local.pair(y, c.label_of(y))));
    }
  return make_comodule_map(c, pp.comodule, SimplicialMap(c.space, pp.comodule.space, std::move(img)));
}

/// Comodule map a_* a^* c → c: projection to the first component.
inline ComoduleMap comod_pushpull_counit(const SimplicialMap& a, const Comodule& c, const PullbackComod& pp) {
  return make_comodule_map(pushforward_comod(a, pp.comodule), c, pp.fiber.proj1);
}

/// a^* on a comodule map f: c1 → c2, (y, z) ↦ (f y, (f ∧ X'₊) z).
inline ComoduleMap pullback_comod_map(const ComoduleMap& f, const PullbackComod& s, const PullbackComod& t) {
  auto Xp_plus = s.local.product.proj2.codomain();
  auto fz = smash_map(f.map, identity_map(Xp_plus), s.local, t.local);
  auto g = induced_map_into(t.fiber, compose(f.map, s.fiber.proj1), compose(fz, s.fiber.proj2));
  return make_comodule_map(s.comodule, t.comodule, g);
}

// ---------------------------------------------------------------------------
// Monoidal structure for a simplicial monoid base
// ---------------------------------------------------------------------------

struct SimplicialMonoidData {
  SSet base;
  FiberProduct square;  // X × X
  SimplicialMap mu;     // X × X → X
  int unit = 0;         // vertex

  SimplexRef multiply(const SimplexRef& a, const SimplexRef& b) const { return mu(square.pair_or_throw(a, b)); }
};

/// Checks strict associativity and the two unit laws on every simplex up to dimension 3·dim X.
inline void validate_monoid(const SimplicialMonoidData& m) {
  const auto& X = *m.base;
  for (int n = 0; n <= 3 * X.dimension(); ++n) {
    auto xs = X.all_simplices(n);
    auto e = degenerate_vertex(m.unit, n);
    for (const auto& x : xs)
      if (m.multiply(e, x) != x || m.multiply(x, e) != x) throw ValidationError("monoid: unit law fails");
    for (const auto& x : xs)
      for (const auto& y : xs)
        for (const auto& z : xs)
          if (m.multiply(m.multiply(x, y), z) != m.multiply(x, m.multiply(y, z)))
            throw ValidationError("monoid: multiplication is not associative");
  }
}

/// A finite monoid as a discrete simplicial monoid; table[a][b] = ab.
inline SimplicialMonoidData discrete_monoid(const std::vector<std::string>& elements,
                                            const std::vector<std::vector<int>>& table, int unit) {
  SimplicialMonoidData m;
  m.base = discrete(elements);
  m.square = product(m.base, m.base);
  int k = static_cast<int>(elements.size());
  if (static_cast<int>(table.size()) != k) throw ValidationError("monoid: table has the wrong size");
  SimplicialMap::Images img(1);
  for (int p = 0; p < static_cast<int>(m.square.object->count(0)); ++p) {
    int a = m.square.proj1.image(0, p).base;
    int b = m.square.proj2.image(0, p).base;
    int ab = table.at(a).at(b);
    if (ab < 0 || ab >= k) throw ValidationError("monoid: product out of range");
    img[0].push_back(SimplexRef::nondeg(0, ab));
  }
  m.mu = SimplicialMap(m.square.object, m.base, std::move(img));
  m.unit = unit;
  validate_monoid(m);
  return m;
}

/// Z/n as a discrete monoid.
inline SimplicialMonoidData cyclic_monoid(int n) {
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    names.push_back("g" + std::to_string(a));
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return discrete_monoid(names, table, 0);
}

/// The monoidal unit (S⁰, ρ_u), the non-basepoint vertex labeled by the unit.
inline Comodule monoidal_unit(const SimplicialMonoidData& m) {
  auto S0 = sphere(0);
  Labels labels{{std::nullopt, SimplexRef::nondeg(0, m.unit)}};
  return from_labels(m.base, S0, std::move(labels));
}

/// (Y ∧ Y', ℓ(y ∧ y') = μ(ℓ(y), ℓ(y'))).
inline Comodule monoidal_product(const Comodule& c, const Comodule& d, const SimplicialMonoidData& m) {
  if (!c.base->same_structure(*m.base) || !d.base->same_structure(*m.base))
    throw std::invalid_argument("monoidal product: comodules are not over the monoid");
  auto sm = smash(c.space, d.space);
  const auto& S = *sm.object;
  Labels labels(S.dimension() + 1);
  for (int n = 0; n <= S.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(S.count(n)); ++b) {
      auto comp = sm.components(SimplexRef::nondeg(n, b));
      if (!comp) {
        labels[n].push_back(std::nullopt);
        continue;
      }
      labels[n].push_back(m.multiply(c.label_of(comp->first), d.label_of(comp->second)));
    }
  return from_labels(m.base, sm.object, std::move(labels));
}

struct ExternalProduct {
  Comodule comodule;
  FiberProduct base;  // X × X'
};

/// (Y ∧ Y', ℓ(y ∧ y') = (ℓ(y), ℓ(y'))) over X × X'.
inline ExternalProduct external_product(const Comodule& c, const Comodule& d) {
  ExternalProduct out;
  out.base = product(c.base, d.base);
  auto sm = smash(c.space, d.space);
  const auto& S = *sm.object;
  Labels labels(S.dimension() + 1);
  for (int n = 0; n <= S.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(S.count(n)); ++b) {
      auto comp = sm.components(SimplexRef::nondeg(n, b));
      if (!comp) {
        labels[n].push_back(std::nullopt);
        continue;
      }
      labels[n].push_back(out.base.pair_or_throw(c.label_of(comp->first), d.label_of(comp->second)));
    }
  out.comodule = from_labels(out.base.object, sm.object, std::move(labels));
  return out;
}

// ---------------------------------------------------------------------------
// Colimits, created in pointed simplicial sets
// ---------------------------------------------------------------------------

struct ComodulePushout {
  Comodule comodule;
  Pushout pushout;
  ComoduleMap inj1;
  ComoduleMap inj2;
};

inline ComodulePushout comodule_pushout(const ComoduleMap& f, const ComoduleMap& g) {
  ComodulePushout out;
  out.pushout = pushout(f.map, g.map);
  SimplicialSet P = *out.pushout.object;
  int bp = out.pushout.inj1.image(0, *f.target.space->basepoint()).base;
  P.set_basepoint(bp);
  auto Ps = share(std::move(P));
  Labels labels(Ps->dimension() + 1);
  for (int n = 0; n <= Ps->dimension(); ++n)
    for (int b = 0; b < static_cast<int>(Ps->count(n)); ++b) {
      if (n == 0 && b == bp) {
        labels[n].push_back(std::nullopt);
        continue;
      }
      const auto& [side, rep] = out.pushout.representative[n][b];
      labels[n].push_back((side == 1 ? f.target : g.target).label_of(rep));
    }
  out.comodule = from_labels(f.source.base, Ps, std::move(labels));
  out.inj1 = make_comodule_map(f.target, out.comodule,
                               SimplicialMap(f.target.space, Ps, out.pushout.inj1.images()));
  out.inj2 = make_comodule_map(g.target, out.comodule,
                               SimplicialMap(g.target.space, Ps, out.pushout.inj2.images()));
  return out;
}

/// The zero comodule (a point) over X.
inline Comodule zero_comodule(const SSet& X) { return from_labels(X, pointed_point(), Labels{{std::nullopt}}); }

inline ComoduleMap from_zero(const Comodule& c) {
  return make_comodule_map(zero_comodule(c.base), c, constant_map(pointed_point(), c.space, *c.space->basepoint()));
}

inline ComoduleMap to_zero(const Comodule& c) {
  return make_comodule_map(c, zero_comodule(c.base), constant_map(c.space, pointed_point(), 0));
}

}  // namespace comodx
