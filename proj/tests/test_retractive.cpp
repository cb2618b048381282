#include <catch_amalgamated.hpp>

#include "comodx/retractive.hpp"

using namespace comodx;

namespace {

SimplicialMap vertex_inclusion(const SSet& X, int v) {
  return SimplicialMap(point(), X, {{SimplexRef::nondeg(0, v)}});
}

// Y ∧ X₊ → V(Ret_X(Y)), [y, x] ↦ [(y, x)]
SimplicialMap smash_to_v(const SSet& Y, const SSet& X, const RetOf& ret, const Quotient& q) {
  auto Xp = plus_basepoint(X);
  auto sm = smash(Y, Xp);
  const auto& S = *sm.object;
  SimplicialMap::Images img(S.dimension() + 1);
  for (int n = 0; n <= S.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(S.count(n)); ++b) {
      auto c = sm.components(SimplexRef::nondeg(n, b));
      if (!c) {
        img[n].push_back(q.object->basepoint_at(n));
        continue;
      }
      img[n].push_back(q.projection(ret.product.pair_or_throw(c->first, c->second)));
    }
  return SimplicialMap(sm.object, q.object, std::move(img));
}

std::vector<SSet> small_bases() {
  return {point(), standard_simplex(1), sphere(1), boundary_simplex(2), rp2_minimal()};
}

}  // namespace

TEST_CASE("retractive space construction", "[retractive]") {
  auto X = sphere(1);
  CHECK_NOTHROW(zero_retractive(X));
  CHECK_NOTHROW(cylinder_object(X));
  auto D1 = standard_simplex(1);
  auto collapse_r = constant_map(D1, point(), 0);
  CHECK_NOTHROW(make_retractive(vertex_inclusion(D1, 1), collapse_r));
  // collapsing onto vertex 0 is a valid map but r ∘ i is not the identity
  SimplicialMap to_start(D1, D1, {{SimplexRef::nondeg(0, 0), SimplexRef::nondeg(0, 0)}, {degenerate_vertex(0, 1)}});
  CHECK_THROWS_AS(make_retractive(to_start, identity_map(D1)), ValidationError);
  CHECK_THROWS_AS(make_retractive(identity_map(D1), to_start), ValidationError);
}

TEST_CASE("Ret_X on small inputs", "[retractive]") {
  for (auto X : small_bases()) {
    auto r = ret_functor(sphere(0), X);
    for (int n = 0; n <= X->dimension(); ++n) CHECK(r.space.total->count(n) == 2 * X->count(n));
  }
  for (auto Y : {sphere(1), sphere(2), rp2_minimal()}) {
    auto r = ret_functor(Y, point());
    CHECK(certify_iso(r.product.proj1).has_value());
  }
  // Ret_X(Δ[1]₊) = (Δ[1] × X) ⊔ X
  auto X = sphere(1);
  auto r = ret_functor(plus_basepoint(standard_simplex(1)), X);
  auto P = product(standard_simplex(1), X);
  for (int n = 0; n <= 2; ++n) CHECK(r.space.total->count(n) == P.object->count(n) + X->count(n));
}

TEST_CASE("V sends Ret_X(Y) to Y smash X plus", "[retractive]") {
  CHECK(v_functor(zero_retractive(sphere(2))).object->counts() == std::vector<std::size_t>{1});
  for (auto X : small_bases())
    for (auto Y : {sphere(0), sphere(1), wedge(sphere(1), sphere(1))}) {
      auto r = ret_functor(Y, X);
      auto q = v_functor(r.space);
      CHECK(certify_iso(smash_to_v(Y, X, r, q)).has_value());
    }
}

TEST_CASE("V of the cylinder object is X plus smash Δ[1]", "[retractive]") {
  for (auto X : small_bases()) {
    auto cyl = cylinder_object(X);
    auto q = v_functor(cyl);
    auto I = with_basepoint(standard_simplex(1), 0);
    // X × Δ[1] collapses X × 0; Ret_X(Δ[1] pointed at 0) has the same V
    auto r = ret_functor(I, X);
    auto qr = v_functor(r.space);
    CHECK(q.object->counts() == qr.object->counts());
    CHECK(groups_isomorphic(homology(*q.object, true), homology(*smash(plus_basepoint(X), I).object, true)));
  }
}

TEST_CASE("pushforward along maps of bases", "[retractive]") {
  auto X = sphere(1);
  auto Z = cylinder_object(X);
  auto same = pushforward_ret(identity_map(X), Z);
  CHECK(certify_iso(same.pushout.inj1).has_value());
  // attach a pointed Y over the point at a vertex of X
  auto Y = sphere(2);
  auto overpt = ret_functor(Y, point()).space;
  for (auto B : small_bases()) {
    auto a = vertex_inclusion(B, 0);
    auto p = pushforward_ret(a, overpt);
    for (int n = 0; n <= 3; ++n)
      CHECK(p.space.total->count_all(n) == overpt.total->count_all(n) + B->count_all(n) - point()->count_all(n));
    auto z = pushforward_ret(a, zero_retractive(point()));
    CHECK(certify_iso(z.space.incl).has_value());
  }
}

TEST_CASE("pullback along maps of bases", "[retractive]") {
  auto X = sphere(1);
  auto Z = ret_functor(sphere(1), X).space;
  auto same = pullback_ret(identity_map(X), Z);
  CHECK(certify_iso(same.fiber.proj1).has_value());
  // a^* Ret_X(Y) ≅ Ret_{X'}(Y)
  auto Xp = standard_simplex(1);
  auto a = SimplicialMap(Xp, X, {{SimplexRef::nondeg(0, 0), SimplexRef::nondeg(0, 0)}, {SimplexRef::nondeg(1, 0)}});
  auto Y = sphere(1);
  auto big = ret_functor(Y, X);
  auto pb = pullback_ret(a, big.space);
  auto small = ret_functor(Y, Xp);
  auto cmp = induced_map_into(pb.fiber, product_map(identity_map(Y), a, small.product, big.product), small.product.proj2);
  CHECK(certify_iso(cmp).has_value());
  CHECK(compose(cmp, small.space.incl) == pb.space.incl);
}

TEST_CASE("limits and colimits in R_X", "[retractive]") {
  auto X = sphere(1);
  auto A = ret_functor(sphere(1), X).space;
  auto B = cylinder_object(X);
  auto pb = pullback_in_rx(to_zero(A), to_zero(B));
  for (int n = 0; n <= 3; ++n) {
    std::size_t brute = 0;
    for (const auto& a : A.total->all_simplices(n))
      for (const auto& b : B.total->all_simplices(n))
        if (A.retr(a) == B.retr(b)) ++brute;
    CHECK(pb.space.total->count_all(n) == brute);
  }
  auto w = wedge_over(A, B);
  for (int n = 0; n <= 3; ++n)
    CHECK(w.space.total->count_all(n) == A.total->count_all(n) + B.total->count_all(n) - X->count_all(n));
  CHECK(compose(w.inj1.map, A.incl) == compose(w.inj2.map, B.incl));
}

TEST_CASE("pullback of Ret_X maps is the fiber product over B", "[retractive]") {
  auto X = sphere(1);
  auto B = standard_simplex(1);
  auto E = product(B, sphere(0)).object;  // two copies of B
  auto Bp = with_basepoint(B, 0);
  auto Ep = with_basepoint(E, 0);
  auto p = SimplicialMap(Ep, Bp, product(B, sphere(0)).proj1.images());
  auto retB = ret_functor(Bp, X);
  auto retE = ret_functor(Ep, X);
  auto rp = make_retractive_map(retE.space, retB.space, product_map(p, identity_map(X), retE.product, retB.product));
  auto Zs = ret_functor(with_basepoint(standard_simplex(2), 0), X);
  auto k_base = SimplicialMap(with_basepoint(standard_simplex(2), 0), Bp,
                              {{SimplexRef::nondeg(0, 0), SimplexRef::nondeg(0, 1), SimplexRef::nondeg(0, 1)},
                               {SimplexRef::nondeg(1, 0), SimplexRef::nondeg(1, 0), degenerate_vertex(1, 1)},
                               {degeneracy(1, SimplexRef::nondeg(1, 0))}});
  auto k = make_retractive_map(Zs.space, retB.space, product_map(k_base, identity_map(X), Zs.product, retB.product));
  auto pb = pullback_in_rx(k, rp);
  // underlying Z ×_B E, with Z = Δ[2] × X
  auto direct = pullback(compose(retB.product.proj1, k.map), p);
  for (int n = 0; n <= 4; ++n) CHECK(pb.space.total->count_all(n) == direct.object->count_all(n));
}

TEST_CASE("relative suspension", "[retractive]") {
  auto X = sphere(1);
  auto sz = relative_suspension(zero_retractive(X));
  CHECK(certify_iso(sz.incl).has_value());
  // over the point: reduced suspension shifts reduced homology up by one
  for (auto Y : {sphere(0), sphere(1), rp2_minimal(), wedge(sphere(1), sphere(2))}) {
    auto Z = ret_functor(Y, point()).space;
    auto S = relative_suspension(Z);
    auto H = homology(*v_functor(S).object, true);
    auto HY = homology(*Y, true);
    for (int k = 0; k <= 3; ++k) CHECK(H.at(k + 1) == HY.at(k));
  }
  // over contractible bases, Σ_X Ret_X(S⁰) has V with the homology of S¹
  for (auto B : {standard_simplex(1), standard_simplex(2)}) {
    auto S = relative_suspension(ret_functor(sphere(0), B).space);
    auto H = homology(*v_functor(S).object, true);
    CHECK(H.at(1) == make_group(1));
    CHECK(H.top_nonzero() == 1);
  }
  // in general V(Σ_X Z) is the suspension of V(Z)
  for (auto B : small_bases()) {
    auto Z = ret_functor(sphere(0), B).space;
    auto H = homology(*v_functor(relative_suspension(Z)).object, true);
    auto HZ = homology(*v_functor(Z).object, true);
    for (int k = 0; k <= 3; ++k) CHECK(H.at(k + 1) == HZ.at(k));
    CHECK(H.at(0).trivial());
  }
}

TEST_CASE("homology splits off the base", "[retractive]") {
  CHECK(e_split_check(zero_retractive(rp2_minimal())).holds);
  auto r = ret_functor(sphere(0), sphere(1)).space;
  auto s = e_split_check(r);
  CHECK(s.holds);
  CHECK(s.total.at(0) == make_group(2));
  for (auto X : small_bases()) {
    CHECK(e_split_check(cylinder_object(X)).holds);
    CHECK(e_split_check(ret_functor(sphere(2), X).space).holds);
    CHECK(e_split_check(relative_suspension(ret_functor(sphere(1), X).space)).holds);
    auto q = v_functor(cylinder_object(X));
    // split cofiber sequence: p ∘ i is constant
    CHECK(compose(q.projection, cylinder_object(X).incl) == constant_map(X, q.object, 0));
  }
}

TEST_CASE("pushforward and pullback are adjoint", "[retractive]") {
  auto X = sphere(1);
  auto Xp = standard_simplex(1);
  auto a = SimplicialMap(Xp, X, {{SimplexRef::nondeg(0, 0), SimplexRef::nondeg(0, 0)}, {SimplexRef::nondeg(1, 0)}});
  for (const auto& Zp : {cylinder_object(Xp), ret_functor(sphere(1), Xp).space}) {
    // counit_{a_* Z'} ∘ a_*(unit_{Z'}) = id
    auto unit = pushpull_unit(a, Zp);
    auto push = pushforward_ret(a, Zp);
    auto push2 = pushforward_ret(a, unit.target);
    auto lhs = compose(pushpull_counit(a, push.space).map, pushforward_map(a, unit, push, push2).map);
    CHECK(lhs == identity_map(push.space.total));
  }
  for (const auto& Z : {cylinder_object(X), ret_functor(sphere(0), X).space}) {
    // a^*(counit_Z) ∘ unit_{a^* Z} = id
    auto pull = pullback_ret(a, Z);
    auto unit = pushpull_unit(a, pull.space);
    auto counit = pushpull_counit(a, Z);
    auto pulled = pullback_map(counit, pullback_ret(a, counit.source), pull);
    CHECK(compose(pulled.map, unit.map) == identity_map(pull.space.total));
  }
}

TEST_CASE("pullback preserves pushouts", "[retractive]") {
  auto X = sphere(1);
  auto Xp = standard_simplex(1);
  auto a = SimplicialMap(Xp, X, {{SimplexRef::nondeg(0, 0), SimplexRef::nondeg(0, 0)}, {SimplexRef::nondeg(1, 0)}});
  auto A = ret_functor(sphere(1), X).space;
  auto B = cylinder_object(X);
  auto w = wedge_over(A, B);
  auto pw = pullback_ret(a, w.space);
  auto pa = pullback_ret(a, A);
  auto pb = pullback_ret(a, B);
  auto w2 = wedge_over(pa.space, pb.space);
  auto cmp = induced_map_from(w2.pushout, from_zero(pa.space).map, from_zero(pb.space).map,
                              pullback_map(w.inj1, pa, pw).map, pullback_map(w.inj2, pb, pw).map);
  CHECK(certify_iso(cmp).has_value());
}

TEST_CASE("V is left adjoint to Ret_X on small hom-sets", "[retractive]") {
  auto X = standard_simplex(1);
  auto Z = ret_functor(sphere(1), X).space;
  for (auto Y : {sphere(1), wedge(sphere(1), sphere(1)), sphere(0)}) {
    auto target = ret_functor(Y, X);
    auto q = v_functor(Z);
    auto pointed = enumerate_pointed_maps(q.object, Y);
    auto over = enumerate_retractive_maps(Z, target.space);
    CHECK(pointed.size() == over.size());
    for (const auto& phi : pointed) {
      auto f = ret_transpose_sharp(Z, target, phi);
      CHECK(ret_transpose_flat(f, target) == phi);
    }
    for (const auto& f : over) CHECK(ret_transpose_sharp(Z, target, ret_transpose_flat(f, target)).map == f.map);
  }
}
