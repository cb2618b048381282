#include <catch_amalgamated.hpp>

#include "comodx/comodule.hpp"

using namespace comodx;

namespace {

// every non-basepoint simplex labeled by the same vertex of X
Labels constant_labels(const SSet& Y, int vertex) {
  Labels l(Y->dimension() + 1);
  for (int n = 0; n <= Y->dimension(); ++n)
    for (int b = 0; b < static_cast<int>(Y->count(n)); ++b)
      l[n].push_back(Y->is_basepoint(SimplexRef::nondeg(n, b)) ? std::nullopt
                                                               : std::optional<SimplexRef>(degenerate_vertex(vertex, n)));
  return l;
}

// X₊ labeled by the identity
Comodule identity_comodule(const SSet& X) {
  auto Xp = plus_basepoint(X);
  Labels l(Xp->dimension() + 1);
  for (int n = 0; n <= Xp->dimension(); ++n)
    for (int b = 0; b < static_cast<int>(Xp->count(n)); ++b)
      l[n].push_back(Xp->is_basepoint(SimplexRef::nondeg(n, b)) ? std::nullopt
                                                                : std::optional<SimplexRef>(SimplexRef::nondeg(n, b)));
  return from_labels(X, Xp, std::move(l));
}

SimplicialMap loop_onto_circle(const SSet& D1) {
  return SimplicialMap(D1, sphere(1), {{SimplexRef::nondeg(0, 0), SimplexRef::nondeg(0, 0)}, {SimplexRef::nondeg(1, 0)}});
}

}  // namespace

TEST_CASE("labels are checked against faces", "[comodule]") {
  auto X = sphere(1);
  CHECK_NOTHROW(identity_comodule(X));
  // S¹ over S¹, loop labeled by the loop
  CHECK_NOTHROW(from_labels(X, sphere(1), Labels{{std::nullopt}, {SimplexRef::nondeg(1, 0)}}));
  // Δ[1]₊ over Δ[1] with the endpoints labeled the wrong way round
  auto D1 = standard_simplex(1);
  auto Yp = plus_basepoint(D1);
  Labels bad{{SimplexRef::nondeg(0, 1), SimplexRef::nondeg(0, 0), std::nullopt}, {SimplexRef::nondeg(1, 0)}};
  CHECK_THROWS_AS(from_labels(D1, Yp, bad), ValidationError);
  Labels missing{{SimplexRef::nondeg(0, 0), std::nullopt, std::nullopt}, {SimplexRef::nondeg(1, 0)}};
  CHECK_THROWS_AS(from_labels(D1, Yp, missing), ValidationError);
}

TEST_CASE("coaction round trip", "[comodule]") {
  for (auto X : {point(), sphere(1), standard_simplex(2), rp2_minimal()}) {
    auto c = identity_comodule(X);
    auto rho = induce_rho(c);
    CHECK(is_mono(rho.rho));
    auto back = make_comodule_from_rho(X, rho, rho.rho);
    CHECK(back.labels == c.labels);
    auto cf = cofree(sphere(1), X).comodule;
    auto r2 = induce_rho(cf);
    CHECK(make_comodule_from_rho(X, r2, r2.rho).labels == cf.labels);
  }
  auto m = cyclic_monoid(2);
  auto u = monoidal_unit(m);
  auto ru = induce_rho(u);
  CHECK(make_comodule_from_rho(m.base, ru, ru.rho).labels[0][1] == SimplexRef::nondeg(0, m.unit));
}

TEST_CASE("bad coactions are rejected", "[comodule]") {
  // counit: ρ(a) must start with a
  auto X = point();
  auto Y = discrete({"*", "a", "b"}, 0);
  auto target = coaction_target(Y, X);
  auto pt = SimplexRef::nondeg(0, 0);
  SimplicialMap swapped(Y, target.smash.object,
                        {{target.smash.object->basepoint_at(0), target.smash.pair(SimplexRef::nondeg(0, 2), pt),
                          target.smash.pair(SimplexRef::nondeg(0, 1), pt)}});
  CHECK_THROWS_AS(make_comodule_from_rho(X, target, swapped), ValidationError);
  // second component inconsistent with a face: not even a simplicial map
  auto D1 = standard_simplex(1);
  auto Yp = plus_basepoint(D1);
  auto t2 = coaction_target(Yp, D1);
  SimplicialMap::Images img{{t2.smash.pair(SimplexRef::nondeg(0, 0), SimplexRef::nondeg(0, 1)),
                             t2.smash.pair(SimplexRef::nondeg(0, 1), SimplexRef::nondeg(0, 1)),
                             t2.smash.object->basepoint_at(0)},
                            {t2.smash.pair(SimplexRef::nondeg(1, 0), SimplexRef::nondeg(1, 0))}};
  CHECK_THROWS_AS(SimplicialMap(Yp, t2.smash.object, img), ValidationError);
}

TEST_CASE("cofree comodules", "[comodule]") {
  for (auto X : {sphere(1), standard_simplex(2), rp2_minimal()}) {
    // F(S⁰) ≅ X₊ with identity labels
    auto f = cofree(sphere(0), X);
    auto idc = identity_comodule(X);
    const auto& P = *idc.space;
    SimplicialMap::Images img(P.dimension() + 1);
    for (int n = 0; n <= P.dimension(); ++n)
      for (int b = 0; b < static_cast<int>(P.count(n)); ++b)
        img[n].push_back(P.is_basepoint(SimplexRef::nondeg(n, b))
                             ? f.comodule.space->basepoint_at(n)
                             : f.smash.pair(degenerate_vertex(1, n), SimplexRef::nondeg(n, b)));
    auto m = make_comodule_map(idc, f.comodule, SimplicialMap(idc.space, f.comodule.space, img));
    auto inv = certify_iso(m.map);
    REQUIRE(inv.has_value());
    CHECK_NOTHROW(make_comodule_map(f.comodule, idc, *inv));
    CHECK(forget(f.comodule) == f.smash.object);
  }
  // over the point the cofree functor is Y ∧ S⁰ ≅ Y
  for (auto Y : {sphere(2), wedge(sphere(1), sphere(1))}) {
    auto f = cofree(Y, point());
    CHECK(f.comodule.space->counts() == Y->counts());
  }
}

TEST_CASE("tensoring with pointed simplicial sets", "[comodule]") {
  auto X = sphere(1);
  auto c = cofree(sphere(1), X).comodule;
  auto t = tensor_sset(c, sphere(0));
  CHECK(t.space->counts() == c.space->counts());
  auto K = sphere(2);
  CHECK(forget(tensor_sset(c, K))->same_structure(*smash(c.space, K).object));
  // c ⊗ ∂Δ[1]₊ → c ⊗ Δ[1]₊ is a levelwise mono
  auto B = plus_basepoint(boundary_simplex(1));
  auto D = plus_basepoint(standard_simplex(1));
  SimplicialMap inc(B, D, {{SimplexRef::nondeg(0, 0), SimplexRef::nondeg(0, 1), SimplexRef::nondeg(0, 2)}});
  auto sB = smash(c.space, B);
  auto sD = smash(c.space, D);
  auto cylinder_inc = smash_map(identity_map(c.space), inc, sB, sD);
  CHECK(is_mono(cylinder_inc));
  auto cB = tensor_sset(c, B);
  auto cD = tensor_sset(c, D);
  CHECK_NOTHROW(make_comodule_map(cB, cD, SimplicialMap(cB.space, cD.space, cylinder_inc.images())));
}

TEST_CASE("pushforward of comodules", "[comodule]") {
  auto D1 = standard_simplex(1);
  auto a = loop_onto_circle(D1);
  auto c = identity_comodule(D1);
  CHECK(same_comodule(pushforward_comod(identity_map(D1), c), c));
  auto p = pushforward_comod(a, c);
  CHECK(p.space->counts() == c.space->counts());
  auto to_pt = constant_map(sphere(1), point(), 0);
  auto q = pushforward_comod(to_pt, p);
  CHECK(same_comodule(q, pushforward_comod(compose(to_pt, a), c)));
  CHECK(q.labels[1][0] == degenerate_vertex(0, 1));
}

TEST_CASE("pullback of comodules", "[comodule]") {
  auto X = sphere(1);
  auto c = cofree(sphere(1), X).comodule;
  auto same = pullback_comod(identity_map(X), c);
  auto iso = certify_iso(same.fiber.proj1);
  REQUIRE(iso.has_value());
  CHECK_NOTHROW(make_comodule_map(c, same.comodule, *iso));

  // degreewise oracle: a^*Y = {(y, x') : a(x') = ℓ(y)} plus the basepoint
  auto D1 = standard_simplex(1);
  auto a = loop_onto_circle(D1);
  for (const auto& cc : {c, identity_comodule(X), cofree(sphere(2), X).comodule}) {
    auto pb = pullback_comod(a, cc);
    for (int n = 0; n <= 3; ++n) {
      std::size_t brute = 1;
      for (const auto& y : cc.space->all_simplices(n)) {
        if (cc.at_basepoint(y)) continue;
        for (const auto& x : D1->all_simplices(n))
          if (a(x) == cc.label_of(y)) ++brute;
      }
      CHECK(pb.comodule.space->count_all(n) == brute);
    }
  }

  // a^* F(Y) ≅ F'(Y): [y, x'] ↦ ([y, a x'], [[y, a x'], x'])
  auto Y = sphere(1);
  auto big = cofree(Y, X);
  auto pb = pullback_comod(a, big.comodule);
  auto small = cofree(Y, D1);
  const auto& S = *small.comodule.space;
  SimplicialMap::Images img(S.dimension() + 1);
  for (int n = 0; n <= S.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(S.count(n)); ++b) {
      auto comp = small.smash.components(SimplexRef::nondeg(n, b));
      if (!comp) {
        img[n].push_back(pb.comodule.space->basepoint_at(n));
        continue;
      }
      auto w = big.smash.pair(comp->first, a(comp->second));
      img[n].push_back(pb.fiber.pair_or_throw(w, pb.local.pair(w, comp->second)));
    }
  auto cmp = make_comodule_map(small.comodule, pb.comodule, SimplicialMap(small.comodule.space, pb.comodule.space, img));
  CHECK(certify_iso(cmp.map).has_value());
}

TEST_CASE("pushforward and pullback of comodules are adjoint", "[comodule]") {
  auto X = sphere(1);
  auto D1 = standard_simplex(1);
  auto a = loop_onto_circle(D1);
  for (const auto& c : {identity_comodule(D1), cofree(sphere(1), D1).comodule}) {
    // counit_{a_* c} ∘ a_*(unit_c) = id
    auto pp = pullback_comod(a, pushforward_comod(a, c));
    auto unit = comod_pushpull_unit(a, c, pp);
    auto counit = comod_pushpull_counit(a, pushforward_comod(a, c), pp);
    CHECK(compose(counit.map, unit.map) == identity_map(c.space));
  }
  for (const auto& c : {identity_comodule(X), cofree(sphere(1), X).comodule}) {
    // a^*(counit_c) ∘ unit_{a^* c} = id
    auto pb = pullback_comod(a, c);
    auto counit = comod_pushpull_counit(a, c, pb);
    auto pp = pullback_comod(a, pushforward_comod(a, pb.comodule));
    auto unit = comod_pushpull_unit(a, pb.comodule, pp);
    auto pulled = pullback_comod_map(counit, pp, pb);
    CHECK(compose(pulled.map, unit.map) == identity_map(pb.comodule.space));
  }
}

TEST_CASE("pullback is functorial in the base map", "[comodule]") {
  // (b a)^* c ≅ a^* b^* c for D1 → S¹ → point
  auto D1 = standard_simplex(1);
  auto a = loop_onto_circle(D1);
  auto b = constant_map(sphere(1), point(), 0);
  auto c = from_labels(point(), sphere(1), constant_labels(sphere(1), 0));
  auto direct = pullback_comod(compose(b, a), c);
  auto first = pullback_comod(b, c);
  auto second = pullback_comod(a, first.comodule);
  const auto& P = *direct.comodule.space;
  SimplicialMap::Images img(P.dimension() + 1);
  for (int n = 0; n <= P.dimension(); ++n)
    for (int k = 0; k < static_cast<int>(P.count(n)); ++k) {
      auto y = direct.fiber.proj1.image(n, k);
      auto comp = direct.local.components(direct.fiber.proj2.image(n, k));
      if (!comp) {
        img[n].push_back(second.comodule.space->basepoint_at(n));
        continue;
      }
      auto x2 = comp->second;
      auto mid = first.fiber.pair_or_throw(y, first.local.pair(y, a(x2)));
      img[n].push_back(second.fiber.pair_or_throw(mid, second.local.pair(mid, x2)));
    }
  auto m = make_comodule_map(direct.comodule, second.comodule, SimplicialMap(direct.comodule.space, second.comodule.space, img));
  CHECK(certify_iso(m.map).has_value());
}

TEST_CASE("monoidal product over a discrete monoid", "[comodule]") {
  auto m = cyclic_monoid(3);
  auto c = from_labels(m.base, sphere(1), constant_labels(sphere(1), 1));
  auto d = from_labels(m.base, sphere(2), constant_labels(sphere(2), 2));
  auto e = from_labels(m.base, plus_basepoint(standard_simplex(1)), constant_labels(plus_basepoint(standard_simplex(1)), 1));

  // c ⊗ unit ≅ c
  auto u = monoidal_unit(m);
  auto cu = monoidal_product(c, u, m);
  auto sm = smash(c.space, u.space);
  SimplicialMap::Images img(c.space->dimension() + 1);
  for (int n = 0; n <= c.space->dimension(); ++n)
    for (int b = 0; b < static_cast<int>(c.space->count(n)); ++b) {
      SimplexRef y = SimplexRef::nondeg(n, b);
      img[n].push_back(c.at_basepoint(y) ? cu.space->basepoint_at(n) : sm.pair(y, degenerate_vertex(1, n)));
    }
  auto unit_iso = make_comodule_map(c, cu, SimplicialMap(c.space, cu.space, img));
  CHECK(certify_iso(unit_iso.map).has_value());

  // symmetry: ℓ(y ∧ y') = ℓ(y) + ℓ(y') is symmetric, so the swap preserves labels
  auto cd = monoidal_product(c, d, m);
  auto dc = monoidal_product(d, c, m);
  auto s1 = smash(c.space, d.space);
  auto s2 = smash(d.space, c.space);
  SimplicialMap::Images sw(cd.space->dimension() + 1);
  for (int n = 0; n <= cd.space->dimension(); ++n)
    for (int b = 0; b < static_cast<int>(cd.space->count(n)); ++b) {
      auto comp = s1.components(SimplexRef::nondeg(n, b));
      sw[n].push_back(comp ? s2.pair(comp->second, comp->first) : dc.space->basepoint_at(n));
    }
  auto swap = make_comodule_map(cd, dc, SimplicialMap(cd.space, dc.space, sw));
  CHECK(certify_iso(swap.map).has_value());

  // associativity, labels compared directly on all simplices up to dimension 4
  auto left = monoidal_product(monoidal_product(c, e, m), d, m);
  auto right = monoidal_product(c, monoidal_product(e, d, m), m);
  auto ce = smash(c.space, e.space);
  auto ed = smash(e.space, d.space);
  auto L = smash(ce.object, d.space);
  auto R = smash(c.space, ed.object);
  SimplicialMap::Images as(left.space->dimension() + 1);
  for (int n = 0; n <= left.space->dimension(); ++n)
    for (int b = 0; b < static_cast<int>(left.space->count(n)); ++b) {
      auto outer = L.components(SimplexRef::nondeg(n, b));
      if (!outer) {
        as[n].push_back(right.space->basepoint_at(n));
        continue;
      }
      auto inner = ce.components(outer->first);
      as[n].push_back(R.pair(inner->first, ed.pair(inner->second, outer->second)));
    }
  auto assoc = make_comodule_map(left, right, SimplicialMap(left.space, right.space, as));
  CHECK(certify_iso(assoc.map).has_value());
  for (int n = 0; n <= 4; ++n)
    for (const auto& s : left.space->all_simplices(n))
      if (!left.at_basepoint(s)) CHECK(left.label_of(s) == right.label_of(assoc.map(s)));

  // U is strong monoidal
  CHECK(forget(cd)->same_structure(*smash(c.space, d.space).object));
  CHECK_THROWS_AS(discrete_monoid({"a", "b"}, {{0, 0}, {1, 0}}, 0), ValidationError);
}

TEST_CASE("external product", "[comodule]") {
  auto m = cyclic_monoid(2);
  auto c = from_labels(m.base, sphere(1), constant_labels(sphere(1), 1));
  auto d = from_labels(m.base, sphere(1), constant_labels(sphere(1), 1));
  auto ext = external_product(c, d);
  auto pushed = pushforward_comod(SimplicialMap(ext.base.object, m.base, m.mu.images()), ext.comodule);
  CHECK(same_comodule(pushed, monoidal_product(c, d, m)));

  // over the point the external product is the smash product
  auto p = from_labels(point(), sphere(1), constant_labels(sphere(1), 0));
  CHECK(external_product(p, p).comodule.space->same_structure(*smash(sphere(1), sphere(1)).object));

  // F(Y) ⊠ F(Y') ≅ F(Y ∧ Y') over X × X'
  auto X = standard_simplex(1);
  auto Xp = sphere(1);
  auto Y = sphere(1);
  auto Yp = sphere(0);
  auto f1 = cofree(Y, X);
  auto f2 = cofree(Yp, Xp);
  auto box = external_product(f1.comodule, f2.comodule);
  auto YY = smash(Y, Yp);
  auto F = cofree(YY.object, box.base.object);
  auto outer = smash(f1.comodule.space, f2.comodule.space);
  const auto& B = *box.comodule.space;
  SimplicialMap::Images img(B.dimension() + 1);
  for (int n = 0; n <= B.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(B.count(n)); ++b) {
      auto o = outer.components(SimplexRef::nondeg(n, b));
      if (!o) {
        img[n].push_back(F.comodule.space->basepoint_at(n));
        continue;
      }
      auto l = f1.smash.components(o->first);
      auto r = f2.smash.components(o->second);
      img[n].push_back(F.smash.pair(YY.pair(l->first, r->first), box.base.pair_or_throw(l->second, r->second)));
    }
  auto cmp = make_comodule_map(box.comodule, F.comodule, SimplicialMap(box.comodule.space, F.comodule.space, img));
  CHECK(certify_iso(cmp.map).has_value());
}

TEST_CASE("comodule maps and pushouts", "[comodule]") {
  auto X = sphere(1);
  auto c = cofree(sphere(1), X).comodule;
  auto d = identity_comodule(X);
  auto w = comodule_pushout(from_zero(c), from_zero(d));
  for (int n = 0; n <= 3; ++n)
    CHECK(w.comodule.space->count_all(n) == c.space->count_all(n) + d.space->count_all(n) - 1);
  CHECK(compose(w.inj1, from_zero(c)).map == compose(w.inj2, from_zero(d)).map);
  // a map that forgets labels is rejected
  auto e = from_labels(X, sphere(1), Labels{{std::nullopt}, {SimplexRef::nondeg(1, 0)}});
  auto f = from_labels(X, sphere(1), constant_labels(sphere(1), 0));
  CHECK_NOTHROW(make_comodule_map(e, e, identity_map(e.space)));
  CHECK_THROWS_AS(make_comodule_map(e, f, identity_map(e.space)), ValidationError);
  CHECK(enumerate_comodule_maps(e, f).size() == 1);  // only the constant map
  CHECK(enumerate_comodule_maps(e, e).size() == 2);
}
