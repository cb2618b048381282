#include <catch_amalgamated.hpp>

#include "comodx/loop_group.hpp"
#include "comodx/standard.hpp"

using namespace comodx;

namespace {

std::vector<std::pair<std::string, SSet>> reduced_bases() {
  return {{"S1", sphere(1)}, {"S1vS1", wedge(sphere(1), sphere(1))}, {"RP2", collapse_spanning_tree(rp2_triangulation())}};
}

}  // namespace

TEST_CASE("loop group needs a reduced simplicial set", "[loop]") {
  CHECK_THROWS_AS(LoopGroup(standard_simplex(1), 3), ValidationError);
  CHECK_NOTHROW(LoopGroup(sphere(1), 3));
}

TEST_CASE("generator counts", "[loop]") {
  for (const auto& [name, X] : reduced_bases()) {
    LoopGroup G(X, 4);
    // oracle: s₀ is injective, so |X_{n+1}| - |X_n| simplices remain
    for (int n = 0; n <= 4; ++n) CHECK(G.generator_count(n) == X->count_all(n + 1) - X->count_all(n));
  }
  LoopGroup S(sphere(1), 4);
  for (int n = 0; n <= 4; ++n) CHECK(S.generator_count(n) == 1);
}

TEST_CASE("loop group faces on the circle", "[loop]") {
  LoopGroup G(sphere(1), 3);
  // GS¹ is Z in every degree with identity faces and degeneracies
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) CHECK(G.face(i, n, Word{1}) == Word{1});
  for (int n = 0; n < 3; ++n)
    for (int j = 0; j <= n; ++j) CHECK(G.degeneracy(j, n, Word{1, 1}) == Word{1, 1});
  CHECK(G.tau(degeneracy(0, SimplexRef::nondeg(1, 0))).empty());
  CHECK(G.tau(SimplexRef::nondeg(1, 0)) == Word{1});
  CHECK_THROWS(G.tau(SimplexRef::nondeg(0, 0)));
  CHECK_THROWS_AS(G.face(0, 4, Word{1}), std::out_of_range);
}

TEST_CASE("simplicial and twisting identities", "[loop][property]") {
  for (const auto& [name, X] : reduced_bases()) {
    INFO(name);
    LoopGroup G(X, 4);
    auto ids = check_loop_group_identities(G, 500, 42);
    CHECK(ids.passed());
    CHECK(ids.checked > 1000);
    auto tw = check_twisting_identities(G);
    CHECK(tw.passed());
    CHECK(tw.checked > 0);
    auto px = check_px_identities(G, 500, 43);
    CHECK(px.passed());
    CHECK(px_quotient_certificate(G));
  }
}

TEST_CASE("PX is connected", "[loop]") {
  for (const auto& [name, X] : reduced_bases()) {
    LoopGroup G(X, 2);
    CHECK(px_connectivity_certificate(G, {}).edges.empty());
    auto one = px_connectivity_certificate(G, {1});
    CHECK(one.edges.size() == 1);
    CHECK(one.verified);
    std::mt19937_64 rng(9);
    for (int k = 0; k < 100; ++k) {
      auto w = G.random_word(0, rng() % 7, rng);
      auto path = px_connectivity_certificate(G, w);
      CHECK(path.verified);
      CHECK(path.vertices.front() == w);
      CHECK(path.vertices.back().empty());
      CHECK(path.edges.size() == w.size());
    }
  }
}

TEST_CASE("pi0 of the loop group abelianizes to H1", "[loop]") {
  for (const auto& [name, X] : reduced_bases()) {
    INFO(name);
    LoopGroup G(X, 2);
    CHECK(abelianization(pi0_loop_group(G)) == homology(*X, false).at(1));
  }
  CHECK(abelianization(pi0_loop_group(LoopGroup(rp2_minimal(), 2))) == make_group(0, {2}));
}
