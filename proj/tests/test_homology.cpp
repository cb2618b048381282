#include <numeric>
#include <random>

#include <catch_amalgamated.hpp>

#include "comodx/homology.hpp"
#include "comodx/standard.hpp"

using namespace comodx;

namespace {

// Oracle: the k-th determinantal divisor is the gcd of all k×k minors, and
// the invariant factors are the successive quotients. Exponential, so only
// used on small matrices.
std::vector<Integer> determinantal_factors(const DenseMatrix& M) {
  std::vector<Integer> divisors{1};
  int lim = std::min(M.rows, M.cols);
  for (int k = 1; k <= lim; ++k) {
    Integer g = 0;
    std::vector<int> rs(k), cs(k);
    std::vector<bool> rmask(M.rows), cmask(M.cols);
    std::fill(rmask.begin(), rmask.begin() + k, true);
    do {
      int p = 0;
      for (int i = 0; i < M.rows; ++i)
        if (rmask[i]) rs[p++] = i;
      std::fill(cmask.begin(), cmask.end(), false);
      std::fill(cmask.begin(), cmask.begin() + k, true);
      do {
        int q = 0;
        for (int j = 0; j < M.cols; ++j)
          if (cmask[j]) cs[q++] = j;
        DenseMatrix sub(k, k);
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) sub(a, b) = M(rs[a], cs[b]);
        g = boost::multiprecision::gcd(g, abs(determinant(sub)));
      } while (std::prev_permutation(cmask.begin(), cmask.end()));
    } while (std::prev_permutation(rmask.begin(), rmask.end()));
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<Integer> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
  return out;
}

DenseMatrix random_matrix(std::mt19937_64& rng, int r, int c, int spread, int density) {
  DenseMatrix M(r, c);
  for (auto& x : M.a)
    if (static_cast<int>(rng() % 100) < density) x = static_cast<long long>(rng() % (2 * spread + 1)) - spread;
  return M;
}

}  // namespace

TEST_CASE("Smith normal form on fixed matrices", "[homology][smith]") {
  auto I = smith_normal_form(DenseMatrix::identity(3));
  CHECK(I.factors == std::vector<Integer>{1, 1, 1});
  auto d = smith_normal_form(DenseMatrix::from_rows({{2, 0}, {0, 3}}));
  CHECK(d.factors == std::vector<Integer>{1, 6});
  CHECK(determinantal_factors(DenseMatrix::from_rows({{2, 0}, {0, 3}})) == std::vector<Integer>{1, 6});
  CHECK(smith_normal_form(DenseMatrix(3, 4)).rank == 0);
  CHECK(smith_normal_form(DenseMatrix(0, 5)).rank == 0);
}

TEST_CASE("Smith transforms are unimodular and reproduce the input", "[homology][smith][property]") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + static_cast<int>(rng() % 5);
    int c = 1 + static_cast<int>(rng() % 5);
    auto M = random_matrix(rng, r, c, 6, 70);
    auto s = smith_normal_form(M);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    CHECK(s.U * M * s.V == s.D);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (i != j || i >= s.rank) REQUIRE(s.D(i, j) == 0);
    for (int k = 0; k + 1 < s.rank; ++k) CHECK(s.factors[k + 1] % s.factors[k] == 0);
    CHECK(s.factors == determinantal_factors(M));
  }
}

TEST_CASE("sparse elimination agrees with dense Smith form", "[homology][smith][property]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + static_cast<int>(rng() % 7);
    int c = 1 + static_cast<int>(rng() % 7);
    auto M = random_matrix(rng, r, c, 3, 40);
    SparseMatrix S(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) S.add(i, j, M(i, j));
    CHECK(invariant_factors(S) == smith_normal_form(M, false).factors);
  }
}

TEST_CASE("chains of small simplicial sets", "[homology]") {
  auto pt = normalized_chains(*point());
  CHECK(pt.ranks == std::vector<int>{1});
  auto s1 = normalized_chains(*sphere(1));
  CHECK(s1.d(1).is_zero());
  auto d2 = normalized_chains(*standard_simplex(2));
  CHECK((d2.d(1) * d2.d(2)).is_zero());
  CHECK(d2.d(2).dense() == DenseMatrix::from_rows({{1}, {-1}, {1}}));
  for (auto X : {rp2_triangulation(), rp2_minimal(), product(sphere(1), sphere(1)).object,
                 product(standard_simplex(2), standard_simplex(1)).object})
    CHECK(normalized_chains(*X, true).is_complex());
}

TEST_CASE("classical homology groups", "[homology]") {
  auto S2 = homology(*sphere(2), true);
  CHECK(S2.at(0).trivial());
  CHECK(S2.at(1).trivial());
  CHECK(S2.at(2) == make_group(1));
  auto T = homology(*product(sphere(1), sphere(1)).object);
  CHECK(T.at(0) == make_group(1));
  CHECK(T.at(1) == make_group(2));
  CHECK(T.at(2) == make_group(1));
  for (auto X : {rp2_triangulation(), rp2_minimal(), collapse_spanning_tree(rp2_triangulation())}) {
    auto P = homology(*X);
    CHECK(P.at(0) == make_group(1));
    CHECK(P.at(1) == make_group(0, {2}));
    CHECK(P.at(2).trivial());
  }
  auto pt = homology(*point());
  CHECK(pt.groups.size() == 1);
  CHECK(pt.at(0) == make_group(1));
  CHECK(homology(*smash(sphere(1), sphere(1)).object, true).at(2) == make_group(1));
  CHECK(homology(*smash(sphere(1), sphere(1)).object, true).at(1).trivial());
  CHECK(homology(*quotient(SimplicialMap(boundary_simplex(2), standard_simplex(2),
                                         identity_map(boundary_simplex(2)).images()))
                      .object,
                 true)
            .at(2) == make_group(1));
}

TEST_CASE("homology invariances", "[homology][property]") {
  for (auto X : {sphere(1), sphere(2), rp2_minimal(), wedge(sphere(1), sphere(2)), standard_simplex(2),
                 boundary_simplex(3)}) {
    auto H = homology(*X);
    CHECK(groups_isomorphic(H, homology(*product(X, standard_simplex(1)).object)));
    // adding a disjoint basepoint: reduced homology of X₊ is the unreduced homology of X
    auto Hp = homology(*plus_basepoint(X), true);
    CHECK(groups_isomorphic(H, Hp));
    CHECK(groups_isomorphic(Hp, homology(reduced_chains(*plus_basepoint(X)))));
  }
}

TEST_CASE("direct sums recombine invariant factors", "[homology]") {
  CHECK(direct_sum(make_group(0, {2}), make_group(0, {3})) == make_group(0, {6}));
  CHECK(direct_sum(make_group(1, {2}), make_group(0, {2})) == make_group(1, {2, 2}));
  CHECK_FALSE(make_group(0, {4}) == make_group(0, {2, 2}));
  CHECK(direct_sum(make_group(0, {4}), make_group(0, {6})) == make_group(0, {2, 12}));
}

TEST_CASE("chain maps are functorial", "[homology]") {
  auto X = product(standard_simplex(1), sphere(1));
  auto Y = sphere(1);
  auto f = X.proj2;
  auto g = constant_map(Y, point(), 0);
  auto lhs = chain_map(compose(g, f));
  auto rhs = compose(chain_map(g), chain_map(f));
  for (int d = 0; d <= 2; ++d) CHECK(lhs.at(d) == rhs.at(d));
  auto id = chain_map(identity_map(Y));
  CHECK(id.at(1).dense() == DenseMatrix::identity(1));
}

TEST_CASE("a degree two map of the circle", "[homology]") {
  // two vertices, two edges a: 0→1, b: 1→0, folded onto the one-vertex circle
  SimplicialSet C;
  C.add_vertex("0");
  C.add_vertex("1");
  C.add_simplex(1, "a", {SimplexRef::nondeg(0, 1), SimplexRef::nondeg(0, 0)});
  C.add_simplex(1, "b", {SimplexRef::nondeg(0, 0), SimplexRef::nondeg(0, 1)});
  auto Cs = share(std::move(C));
  auto S1 = sphere(1);
  SimplicialMap fold(Cs, S1, {{SimplexRef::nondeg(0, 0), SimplexRef::nondeg(0, 0)},
                              {SimplexRef::nondeg(1, 0), SimplexRef::nondeg(1, 0)}});
  // oracle: the cycle a + b generates H₁ of the source and maps to 2e
  auto phi = chain_map(fold);
  SparseMatrix cycle(2, 1);
  cycle.add(0, 0, 1);
  cycle.add(1, 0, 1);
  CHECK(normalized_chains(*Cs).d(1) * cycle == SparseMatrix(2, 1));
  CHECK((phi.at(1) * cycle).at(0, 0) == 2);
  auto v = is_hz_equivalence(fold);
  CHECK_FALSE(v.equivalence);
  // cone: H₁(S¹)/2 appears in degree 1
  CHECK(v.cone.at(1) == make_group(0, {2}));
}

TEST_CASE("mapping cones", "[homology]") {
  auto S1 = sphere(1);
  CHECK(homology(mapping_cone(chain_map(identity_map(S1)))).acyclic());
  auto collapse_v = is_hz_equivalence(constant_map(S1, point(), 0));
  CHECK_FALSE(collapse_v.equivalence);
  CHECK(collapse_v.cone.at(2) == make_group(1));
  CHECK(collapse_v.cone.top_nonzero() == 2);
  // long exact sequence by hand: augmented S¹ → point, H̃(S¹) = Z in degree 1 only, H̃(pt) = 0
  CHECK(collapse_v.cone.at(1).trivial());
  auto inc = SimplicialMap(boundary_simplex(2), standard_simplex(2), identity_map(boundary_simplex(2)).images());
  auto rel = homology(mapping_cone(chain_map(inc)));
  CHECK(rel.at(2) == make_group(1));
  CHECK(rel.top_nonzero() == 2);
  CHECK(rel.at(1).trivial());
  CHECK(is_hz_equivalence(identity_map(S1)).equivalence);
  CHECK(is_hz_equivalence(constant_map(standard_simplex(3), point(), 0)).equivalence);
}

TEST_CASE("mapping cylinder of the circle onto a point", "[homology]") {
  auto S1 = sphere(1);
  auto cyl = product(S1, standard_simplex(1));
  SimplicialMap::Images end1(2);
  end1[0] = {*cyl.pair(SimplexRef::nondeg(0, 0), SimplexRef::nondeg(0, 1))};
  end1[1] = {*cyl.pair(SimplexRef::nondeg(1, 0), degenerate_vertex(1, 1))};
  SimplicialMap top(S1, cyl.object, end1);
  auto po = pushout(top, constant_map(S1, point(), 0));
  auto H = homology(*po.object);
  CHECK(H.at(0) == make_group(1));
  CHECK(H.top_nonzero() == 0);
}
