#pragma once

#include <map>
#include <set>
#include <random>
#include <string>
#include <vector>

#include "group.hpp"
#include "simplicial_set.hpp"

namespace comodx {

/**
 * Truncated Kan loop group of a reduced simplicial set. GX_n is free on the
 * (n+1)-simplices of X that are not s₀-degeneracies; x̄ denotes the generator
 * of x (the identity when x = s₀y). On generators
 *
 *   ∂₀ x̄ = (d₁x)‾ (d₀x)‾⁻¹,   ∂ᵢ x̄ = (d_{i+1}x)‾ (i > 0),   sᵢ x̄ = (s_{i+1}x)‾,
 *
 * extended to words as homomorphisms. Degrees 0..N are available.
 */
class LoopGroup {
 public:
  LoopGroup(SSet X, int truncation) : X_(std::move(X)), N_(truncation) {
    if (X_->empty() || X_->count(0) != 1) throw ValidationError("loop group: simplicial set is not reduced");
    if (N_ < 1 || N_ > max_dimension()) throw DimensionLimit("loop group: truncation out of range");
    gens_.resize(N_ + 1);
    index_.resize(N_ + 1);
    for (int n = 0; n <= N_; ++n)
      for (const auto& x : X_->all_simplices(n + 1)) {
        if (x.word.contains(0)) continue;
        index_[n][x] = static_cast<int>(gens_[n].size());
        gens_[n].push_back(x);
      }
    faces_.resize(N_ + 1);
    for (int n = 1; n <= N_; ++n) {
      faces_[n].resize(n + 1);
      for (int i = 0; i <= n; ++i)
        for (const auto& x : gens_[n]) {
          Word w = i == 0 ? multiply(bar(X_->face(1, x)), inverse(bar(X_->face(0, x)))) : bar(X_->face(i + 1, x));
          faces_[n][i].push_back(std::move(w));
        }
    }
    degens_.resize(N_);
    for (int n = 0; n < N_; ++n) {
      degens_[n].resize(n + 1);
      for (int j = 0; j <= n; ++j)
        for (const auto& x : gens_[n]) degens_[n][j].push_back(bar(comodx::degeneracy(j + 1, x)));
    }
  }

  const SSet& base() const { return X_; }
  int truncation() const { return N_; }
  std::size_t generator_count(int n) const { return gens_.at(n).size(); }
  const SimplexRef& generator(int n, int k) const { return gens_.at(n).at(k); }
  std::string generator_name(int n, int k) const { return X_->ref_name(generator(n, k)); }

  /// x̄ for x ∈ X_{n+1}.
  Word bar(const SimplexRef& x) const {
    if (x.word.contains(0)) return {};
    int n = x.dim - 1;
    if (n < 0 || n > N_) throw std::out_of_range("loop group: degree outside the truncation");
    return Word{index_[n].at(x) + 1};
  }

  /// τ(x) = x̄ ∈ GX_{n-1} for x ∈ X_n, n ≥ 1.
  Word tau(const SimplexRef& x) const {
    if (x.dim < 1) throw std::invalid_argument("twisting function: degree 0 input");
    return bar(x);
  }

  Word face(int i, int n, const Word& w) const {
    if (n < 1 || n > N_ || i < 0 || i > n) throw std::out_of_range("loop group: face outside the truncation");
    return apply(faces_[n][i], w);
  }

  Word degeneracy(int j, int n, const Word& w) const {
    if (n < 0 || n >= N_ || j < 0 || j > n) throw std::out_of_range("loop group: degeneracy outside the truncation");
    return apply(degens_[n][j], w);
  }

  /// A freely reduced word of the given length over GX_n.
  Word random_word(int n, std::size_t length, std::mt19937_64& rng) const {
    Word w;
    int k = static_cast<int>(generator_count(n));
    if (k == 0) return w;
    while (w.size() < length) {
      int a = static_cast<int>(rng() % k) + 1;
      if (rng() % 2) a = -a;
      if (!w.empty() && w.back() == -a) continue;
      w.push_back(a);
    }
    return w;
  }

 private:
  SSet X_;
  int N_;
  std::vector<std::vector<SimplexRef>> gens_;
  std::vector<std::map<SimplexRef, int>> index_;
  std::vector<std::vector<std::vector<Word>>> faces_;   // [n][i][generator]
  std::vector<std::vector<std::vector<Word>>> degens_;  // [n][j][generator]

  static Word apply(const std::vector<Word>& images, const Word& w) {
    Word out;
    for (int a : w) {
      const auto& img = images.at(std::abs(a) - 1);
      Word piece = a > 0 ? img : inverse(img);
      out.insert(out.end(), piece.begin(), piece.end());
    }
    return free_reduce(out);
  }
};

struct IdentityReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failures.size() < 20) failures.push_back(what);
    else if (!ok) failures.back() = "... and more";
  }
};

namespace detail {

inline void check_group_identities_on(const LoopGroup& G, int n, const Word& w, IdentityReport& rep) {
  int N = G.truncation();
  auto tag = [&](const std::string& s) { return s + " in degree " + std::to_string(n); };
  for (int i = 0; i <= n && n >= 2; ++i)
    for (int j = i + 1; j <= n; ++j)
      rep.expect(G.face(i, n - 1, G.face(j, n, w)) == G.face(j - 1, n - 1, G.face(i, n, w)), tag("d_i d_j"));
  if (n + 1 <= N) {
    for (int i = 0; i <= n + 1; ++i)
      for (int j = 0; j <= n; ++j) {
        auto lhs = G.face(i, n + 1, G.degeneracy(j, n, w));
        Word rhs;
        if (i < j)
          rhs = G.degeneracy(j - 1, n - 1, G.face(i, n, w));
        else if (i == j || i == j + 1)
          rhs = w;
        else
          rhs = G.degeneracy(j, n - 1, G.face(i - 1, n, w));
        rep.expect(lhs == rhs, tag("d_i s_j"));
      }
  }
  if (n + 2 <= N)
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        rep.expect(G.degeneracy(i, n + 1, G.degeneracy(j, n, w)) == G.degeneracy(j + 1, n + 1, G.degeneracy(i, n, w)),
                   tag("s_i s_j"));
}

}  // namespace detail

/// Simplicial identities of GX on every generator and on `samples` random words per degree.
inline IdentityReport check_loop_group_identities(const LoopGroup& G, std::size_t samples, std::uint64_t seed,
                                                  std::size_t max_length = 6) {
  IdentityReport rep;
  std::mt19937_64 rng(seed);
  for (int n = 0; n <= G.truncation(); ++n) {
    for (std::size_t k = 0; k < G.generator_count(n); ++k)
      detail::check_group_identities_on(G, n, Word{static_cast<int>(k) + 1}, rep);
    for (std::size_t s = 0; s < samples && G.generator_count(n) > 0; ++s)
      detail::check_group_identities_on(G, n, G.random_word(n, 1 + rng() % max_length, rng), rep);
  }
  return rep;
}

/**
 * The twisting identities, on every simplex x ∈ X_n with 1 ≤ n ≤ N+1:
 * ∂₀τ(x) = τ(d₁x) τ(d₀x)⁻¹, ∂ᵢτ(x) = τ(d_{i+1}x), sᵢτ(x) = τ(s_{i+1}x), τ(s₀x) = e.
 */
inline IdentityReport check_twisting_identities(const LoopGroup& G) {
  IdentityReport rep;
  const auto& X = *G.base();
  int N = G.truncation();
  for (int n = 1; n <= N + 1; ++n)
    for (const auto& x : X.all_simplices(n)) {
      auto t = G.tau(x);
      std::string at = " at " + X.ref_name(x);
      if (n >= 2) {
        rep.expect(G.face(0, n - 1, t) == multiply(G.tau(X.face(1, x)), inverse(G.tau(X.face(0, x)))), "d_0 tau" + at);
        for (int i = 1; i < n; ++i) rep.expect(G.face(i, n - 1, t) == G.tau(X.face(i + 1, x)), "d_i tau" + at);
      }
      if (n <= N) {
        for (int i = 0; i < n; ++i) rep.expect(G.degeneracy(i, n - 1, t) == G.tau(degeneracy(i + 1, x)), "s_i tau" + at);
        rep.expect(G.tau(degeneracy(0, x)).empty(), "tau s_0" + at);
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// PX = X ×_τ GX
// ---------------------------------------------------------------------------

struct PXSimplex {
  int degree = 0;
  Word g;
  SimplexRef x;
  bool operator==(const PXSimplex&) const = default;
};

/// d₀(g, x) = (τ(x)⁻¹ ∂₀g, d₀x); the other faces are untwisted.
inline PXSimplex px_face(const LoopGroup& G, int i, const PXSimplex& s) {
  if (s.degree < 1) throw std::out_of_range("px_face: vertices have no faces");
  const auto& X = *G.base();
  Word g = G.face(i, s.degree, s.g);
  if (i == 0) g = multiply(inverse(G.tau(s.x)), g);
  return PXSimplex{s.degree - 1, g, X.face(i, s.x)};
}

inline PXSimplex px_degeneracy(const LoopGroup& G, int j, const PXSimplex& s) {
  return PXSimplex{s.degree + 1, G.degeneracy(j, s.degree, s.g), degeneracy(j, s.x)};
}

/// Right action (g, x)·h = (gh, x).
inline PXSimplex px_act(const PXSimplex& s, const Word& h) { return PXSimplex{s.degree, multiply(s.g, h), s.x}; }

/// Simplicial identities of PX and compatibility of the right action with faces and degeneracies, on random simplices.
inline IdentityReport check_px_identities(const LoopGroup& G, std::size_t samples, std::uint64_t seed,
                                          std::size_t max_length = 6) {
  IdentityReport rep;
  std::mt19937_64 rng(seed);
  const auto& X = *G.base();
  int N = G.truncation();
  for (int n = 0; n <= N; ++n) {
    auto xs = X.all_simplices(n);
    for (std::size_t k = 0; k < samples; ++k) {
      PXSimplex s{n, G.random_word(n, rng() % (max_length + 1), rng), xs[rng() % xs.size()]};
      Word h = G.random_word(n, 1 + rng() % max_length, rng);
      std::string deg = " in degree " + std::to_string(n);
      for (int i = 0; i <= n && n >= 2; ++i)
        for (int j = i + 1; j <= n; ++j)
          rep.expect(px_face(G, i, px_face(G, j, s)) == px_face(G, j - 1, px_face(G, i, s)), "d_i d_j" + deg);
      for (int i = 0; i <= n && n >= 1; ++i)
        rep.expect(px_face(G, i, px_act(s, h)) == px_act(px_face(G, i, s), G.face(i, n, h)), "action/face" + deg);
      if (n + 1 <= N)
        for (int j = 0; j <= n; ++j) {
          auto t = px_degeneracy(G, j, s);
          rep.expect(px_degeneracy(G, j, px_act(s, h)) == px_act(t, G.degeneracy(j, n, h)), "action/degeneracy" + deg);
          for (int i = 0; i <= n + 1; ++i) {
            PXSimplex rhs;
            if (i < j)
              rhs = px_degeneracy(G, j - 1, px_face(G, i, s));
            else if (i == j || i == j + 1)
              rhs = s;
            else
              rhs = px_degeneracy(G, j, px_face(G, i - 1, s));
            rep.expect(px_face(G, i, t) == rhs, "d_i s_j" + deg);
          }
        }
    }
  }
  return rep;
}

/**
 * PX/GX → X: every (g, x) is (e, x)·g, the projection (g, x) ↦ x commutes
 * with faces and degeneracies, and distinct simplices of X have distinct
 * orbit representatives. Checked on all simplices of X in degrees ≤ N with
 * `samples` random words each.
 */
inline bool px_quotient_certificate(const LoopGroup& G, std::size_t samples = 5, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  const auto& X = *G.base();
  for (int n = 0; n <= G.truncation(); ++n) {
    auto xs = X.all_simplices(n);
    std::set<SimplexRef> reps;
    for (const auto& x : xs) {
      PXSimplex rep{n, {}, x};
      if (!reps.insert(rep.x).second) return false;
      for (std::size_t k = 0; k <= samples; ++k) {
        Word g = k == 0 ? Word{} : G.random_word(n, 1 + rng() % 6, rng);
        PXSimplex s{n, g, x};
        if (!(px_act(rep, g) == s)) return false;
        for (int i = 0; i <= n && n >= 1; ++i)
          if (!(px_face(G, i, s).x == X.face(i, x))) return false;
        for (int j = 0; j <= n && n < G.truncation(); ++j)
          if (!(px_degeneracy(G, j, s).x == degeneracy(j, x))) return false;
      }
    }
    if (reps.size() != X.count_all(n)) return false;
  }
  return true;
}

struct ConnectivityPath {
  std::vector<PXSimplex> edges;
  std::vector<Word> vertices;  // w = vertices[0], ..., vertices.back() = e
  bool verified = false;
};

/**
 * An edge path in PX from the vertex (w, *) to (e, *), one edge per letter:
 * w = x̄w' uses the edge (s₀w, x) with d₁ = w and d₀ = w'; w = x̄⁻¹w' uses
 * (s₀w', x) with d₁ = w' and d₀ = w.
 */
inline ConnectivityPath px_connectivity_certificate(const LoopGroup& G, const Word& w) {
  ConnectivityPath out;
  Word cur = free_reduce(w);
  out.vertices.push_back(cur);
  auto vertex = [&](const Word& g) { return PXSimplex{0, g, SimplexRef::nondeg(0, 0)}; };
  bool ok = true;
  while (!cur.empty()) {
    int a = cur.front();
    const auto& x = G.generator(0, std::abs(a) - 1);
    Word rest(cur.begin() + 1, cur.end());
    PXSimplex e{1, G.degeneracy(0, 0, a > 0 ? cur : rest), x};
    auto d0 = px_face(G, 0, e);
    auto d1 = px_face(G, 1, e);
    if (a > 0)
      ok = ok && d1 == vertex(cur) && d0 == vertex(rest);
    else
      ok = ok && d1 == vertex(rest) && d0 == vertex(cur);
    out.edges.push_back(e);
    cur = rest;
    out.vertices.push_back(cur);
  }
  out.verified = ok && out.edges.size() <= w.size();
  return out;
}

/// π₀GX = GX₀ / ⟨∂₀ȳ ∂₁ȳ⁻¹ : y a generator of GX₁⟩.
inline GroupPresentation pi0_loop_group(const LoopGroup& G) {
  GroupPresentation P;
  for (std::size_t k = 0; k < G.generator_count(0); ++k) P.generators.push_back(G.generator_name(0, static_cast<int>(k)));
  for (std::size_t k = 0; k < G.generator_count(1); ++k) {
    Word y{static_cast<int>(k) + 1};
    auto r = multiply(G.face(0, 1, y), inverse(G.face(1, 1, y)));
    if (!r.empty()) P.relators.push_back(r);
  }
  return P;
}

}  // namespace comodx
