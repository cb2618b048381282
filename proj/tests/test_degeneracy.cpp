#include <random>
#include <set>
#include <vector>

#include <catch_amalgamated.hpp>

#include "comodx/standard.hpp"

using namespace comodx;

namespace {

// Oracle: a degeneracy composite s_{o1} ... s_{ok} acting on an n-simplex is
// precomposition with a surjection [n+k] -> [n]. Two words are equal exactly
// when their surjections agree.
std::vector<int> surjection(const std::vector<int>& ops, int base_dim) {
  int top = base_dim + static_cast<int>(ops.size());
  std::vector<int> out(top + 1);
  for (int j = 0; j <= top; ++j) {
    int v = j;
    for (int op : ops) v = v <= op ? v : v - 1;
    out[j] = v;
  }
  return out;
}

bool valid_ops(const std::vector<int>& ops, int base_dim) {
  int dim = base_dim;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (*it > dim) return false;
    ++dim;
  }
  return true;
}

}  // namespace

TEST_CASE("normalize_word on small inputs", "[degeneracy]") {
  CHECK(normalize_word({}).indices().empty());
  CHECK(normalize_word({0, 0}).indices() == std::vector<int>{1, 0});
  // frozen from the surjection oracle: [2,0,1] repeats at positions 3, 2, 0
  CHECK(surjection({2, 0, 1}, 1) == std::vector<int>{0, 0, 1, 1, 1});
  CHECK(normalize_word({2, 0, 1}).indices() == std::vector<int>{3, 2, 0});
  CHECK_THROWS_AS(normalize_word({-1}), std::invalid_argument);
}

TEST_CASE("normalize_word agrees with the surjection oracle", "[degeneracy][property]") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 2000; ++trial) {
    int base_dim = static_cast<int>(rng() % 3);
    int len = static_cast<int>(rng() % 9);
    std::vector<int> ops;
    // draw right-to-left so every operator is applicable
    std::vector<int> rev;
    int d = base_dim;
    for (int k = 0; k < len; ++k) {
      rev.push_back(static_cast<int>(rng() % (d + 1)));
      ++d;
    }
    ops.assign(rev.rbegin(), rev.rend());
    REQUIRE(valid_ops(ops, base_dim));
    auto w = normalize_word(ops);
    REQUIRE(static_cast<int>(w.size()) == len);
    REQUIRE(std::is_sorted(w.indices().begin(), w.indices().end(), std::greater<>()));
    CHECK(surjection(w.indices(), base_dim) == surjection(ops, base_dim));
  }
}

TEST_CASE("rewriting is confluent across application orders", "[degeneracy][property]") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 500; ++trial) {
    int len = 1 + static_cast<int>(rng() % 8);
    std::vector<int> ops;
    int d = 0;
    std::vector<int> rev;
    for (int k = 0; k < len; ++k) {
      rev.push_back(static_cast<int>(rng() % (d + 1)));
      ++d;
    }
    ops.assign(rev.rbegin(), rev.rend());
    // normalizing any split point first must give the same final word
    auto whole = normalize_word(ops);
    for (int split = 0; split <= len; ++split) {
      std::vector<int> left(ops.begin(), ops.begin() + split);
      std::vector<int> right(ops.begin() + split, ops.end());
      auto l = normalize_word(left);
      auto r = normalize_word(right);
      CHECK(l.then_after(r) == whole);
    }
  }
}

TEST_CASE("face of degenerate simplices follows d_i s_j rewriting", "[degeneracy]") {
  auto D3 = standard_simplex(3);
  // every simplex of Δ[3] as its vertex sequence; faces drop a vertex and
  // degeneracies repeat one, independently of the rewriting engine.
  for (int n = 1; n <= 5; ++n) {
    for (const auto& s : D3->all_simplices(n)) {
      std::vector<int> verts;
      for (int k = 0; k <= n; ++k) verts.push_back(D3->vertex(s, k));
      auto base_verts = std::vector<int>{};
      SimplexRef b = SimplexRef::nondeg(s.base_dim(), s.base);
      for (int k = 0; k <= b.dim; ++k) base_verts.push_back(D3->vertex(b, k));
      auto surj = surjection(s.word.indices(), b.dim);
      for (int k = 0; k <= n; ++k) REQUIRE(verts[k] == base_verts[surj[k]]);
      for (int i = 0; i <= n; ++i) {
        auto f = D3->face(i, s);
        std::vector<int> fv;
        for (int k = 0; k < n; ++k) fv.push_back(D3->vertex(f, k));
        auto expected = verts;
        expected.erase(expected.begin() + i);
        CHECK(fv == expected);
      }
    }
  }
}

TEST_CASE("Eilenberg-Zilber decompositions are unique on Δ[3]", "[degeneracy]") {
  auto D3 = standard_simplex(3);
  for (int n = 0; n <= 4; ++n) {
    std::set<std::vector<int>> seen;
    auto all = D3->all_simplices(n);
    for (const auto& s : all) {
      std::vector<int> verts;
      for (int k = 0; k <= n; ++k) verts.push_back(D3->vertex(s, k));
      CHECK(seen.insert(verts).second);
    }
    // monotone maps [n] -> [3]
    CHECK(all.size() == binomial(n + 4, 3));
  }
}
