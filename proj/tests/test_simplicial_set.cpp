#include <catch_amalgamated.hpp>

#include "comodx/standard.hpp"

using namespace comodx;

TEST_CASE("standard objects have the expected simplex counts", "[sset]") {
  auto D2 = standard_simplex(2);
  CHECK(D2->counts() == std::vector<std::size_t>{3, 3, 1});
  auto S1 = sphere(1);
  CHECK(S1->counts() == std::vector<std::size_t>{1, 1});
  CHECK(S1->simplex(1, 0).faces[0] == SimplexRef::nondeg(0, 0));
  CHECK(S1->simplex(1, 0).faces[1] == SimplexRef::nondeg(0, 0));
  CHECK(boundary_simplex(3)->counts() == std::vector<std::size_t>{4, 6, 4});
  CHECK(point()->counts() == std::vector<std::size_t>{1});
  CHECK(discrete({"a", "b", "c"})->counts() == std::vector<std::size_t>{3});
  CHECK(sphere(0)->counts() == std::vector<std::size_t>{2});
  CHECK(sphere(3)->counts() == std::vector<std::size_t>{1, 0, 0, 1});
  CHECK_THROWS_AS(standard_simplex(-1), std::invalid_argument);
  CHECK_THROWS_AS(boundary_simplex(0), std::invalid_argument);
}

TEST_CASE("face evaluation on small examples", "[sset]") {
  auto S1 = sphere(1);
  CHECK(S1->face(0, SimplexRef::nondeg(1, 0)) == SimplexRef::nondeg(0, 0));
  auto D1 = standard_simplex(1);
  for (int v = 0; v < 2; ++v) {
    auto sv = degeneracy(0, SimplexRef::nondeg(0, v));
    CHECK(D1->face(1, sv) == SimplexRef::nondeg(0, v));
    CHECK(D1->face(0, sv) == SimplexRef::nondeg(0, v));
  }
  // s_1 of the edge 0<1 in Δ[1] is the monotone map (0,1,1); dropping vertex 1 gives (0,1).
  auto e = SimplexRef::nondeg(1, 0);
  auto s1e = degeneracy(1, e);
  CHECK(D1->face(1, s1e) == e);
  CHECK(D1->face(2, s1e) == e);
  // dropping vertex 0 gives (1,1) = s_0 of vertex 1
  CHECK(D1->face(0, s1e) == degeneracy(0, SimplexRef::nondeg(0, 1)));
  CHECK_THROWS_AS(D1->face(3, s1e), std::out_of_range);
  CHECK_THROWS_AS(D1->face(0, SimplexRef::nondeg(0, 0)), std::out_of_range);
}

TEST_CASE("validation names the offending simplex", "[sset]") {
  SimplicialSet X;
  X.add_vertex("a");
  X.add_vertex("b");
  X.add_vertex("c");
  X.add_simplex(1, "ab", {SimplexRef::nondeg(0, 1), SimplexRef::nondeg(0, 0)});
  X.add_simplex(1, "bc", {SimplexRef::nondeg(0, 2), SimplexRef::nondeg(0, 1)});
  X.add_simplex(1, "ac", {SimplexRef::nondeg(0, 2), SimplexRef::nondeg(0, 0)});
  X.add_simplex(2, "bad", {SimplexRef::nondeg(1, 1), SimplexRef::nondeg(1, 0), SimplexRef::nondeg(1, 2)});
  try {
    X.validate();
    FAIL("expected a validation error");
  } catch (const ValidationError& err) {
    CHECK(std::string(err.what()).find("bad") != std::string::npos);
  }
  SimplicialSet Y;
  Y.add_vertex("a");
  Y.add_simplex(1, "e", {SimplexRef::nondeg(0, 0), SimplexRef::nondeg(0, 5)});
  CHECK_THROWS_AS(Y.validate(), ValidationError);
}

TEST_CASE("catalog-style objects validate", "[sset]") {
  for (auto X : {standard_simplex(3), boundary_simplex(2), sphere(2), rp2_triangulation(), rp2_minimal(),
                 wedge(sphere(1), sphere(1)), collapse_spanning_tree(rp2_triangulation())})
    CHECK_NOTHROW(X->validate());
  auto R = rp2_triangulation();
  CHECK(R->counts() == std::vector<std::size_t>{6, 15, 10});
  auto reduced = collapse_spanning_tree(R);
  CHECK(reduced->counts() == std::vector<std::size_t>{1, 10, 10});
}

TEST_CASE("simplicial maps check commutation with faces", "[sset]") {
  auto S1 = sphere(1);
  auto D1 = standard_simplex(1);
  // Δ[1] → S¹ sending the edge to the loop is fine
  SimplicialMap::Images good{{SimplexRef::nondeg(0, 0), SimplexRef::nondeg(0, 0)}, {SimplexRef::nondeg(1, 0)}};
  CHECK_NOTHROW(SimplicialMap(D1, S1, good));
  // S¹ → Δ[1] sending the loop to the edge is not
  SimplicialMap::Images bad{{SimplexRef::nondeg(0, 0)}, {SimplexRef::nondeg(1, 0)}};
  CHECK_THROWS_AS(SimplicialMap(S1, D1, bad), ValidationError);
  CHECK(is_mono(identity_map(S1)));
  CHECK_FALSE(is_mono(constant_map(S1, point(), 0)));
  CHECK_FALSE(is_mono(SimplicialMap(D1, S1, good)));
}
