#pragma once

#include <string>
#include <vector>

#include "comodule.hpp"
#include "group.hpp"
#include "homology.hpp"
#include "retractive.hpp"

namespace comodx {

struct CoverCertificate {
  bool covering = false;          // |G| lifts of every simplex, determined by the lift of vertex 0
  bool connected = false;
  bool simply_connected = false;  // edge-path group of the cover enumerates to order 1
  bool deck_free_transitive = false;
  bool cocycle = false;           // w(x₀₂) = w(x₀₁) w(x₁₂) on every nondegenerate 2-simplex
  bool all() const { return covering && connected && simply_connected && deck_free_transitive && cocycle; }
};

/**
 * X̃ = X ×_w G: the nondegenerate simplices are pairs (x, g) for nondegenerate
 * x, with d₀(x, g) = (d₀x, g·w(x₀₁)) and all other faces untwisted. Element
 * indices are those of `group`; element 0 is the identity.
 */
struct CoverData {
  SSet base;
  SSet total;
  SimplicialMap q;
  EdgePathGroup pi1;
  FiniteGroup group;

  int order() const { return group.order(); }
  /// The simplex (x, g) of X̃.
  SimplexRef lift(const SimplexRef& x, int g) const { return SimplexRef{x.dim, x.base * order() + g, x.word}; }
  int element_of(const SimplexRef& s) const { return s.base % order(); }
  /// The element attached to an edge; identity on degenerate and tree edges.
  int edge_class(const SimplexRef& e) const { return group.element(pi1.edge_word(e)); }
  /// Deck transformation (x, g) ↦ (x, h·g).
  SimplicialMap deck(int h) const {
    const auto& T = *total;
    SimplicialMap::Images img(T.dimension() + 1);
    for (int n = 0; n <= T.dimension(); ++n)
      for (int b = 0; b < static_cast<int>(T.count(n)); ++b)
        img[n].push_back(SimplexRef::nondeg(n, (b / order()) * order() + group.multiply(h, b % order())));
    return SimplicialMap(total, total, std::move(img));
  }
};

/// The edge x₀₁ = d₂ ⋯ dₙ x.
inline SimplexRef leading_edge(const SimplicialSet& X, SimplexRef x) {
  while (x.dim > 1) x = X.face(x.dim, x);
  return x;
}

namespace detail {

inline CoverCertificate certify_cover(const CoverData& c, std::size_t bound) {
  CoverCertificate cert;
  const auto& X = *c.base;
  const auto& T = *c.total;
  int G = c.order();

  cert.covering = true;
  for (int n = 0; n <= X.dimension() + 1 && cert.covering; ++n)
    cert.covering = T.count_all(n) == X.count_all(n) * static_cast<std::size_t>(G);
  for (int n = 0; n <= X.dimension() && cert.covering; ++n)
    for (int b = 0; b < static_cast<int>(X.count(n)); ++b) {
      std::vector<bool> hit(G, false);
      int v0 = X.vertex(SimplexRef::nondeg(n, b), 0);
      for (int g = 0; g < G; ++g) {
        auto s = c.lift(SimplexRef::nondeg(n, b), g);
        int tv = T.vertex(s, 0);
        if (c.q.image(0, tv).base != v0 || hit[tv % G]) cert.covering = false;
        hit[tv % G] = true;
        if (!(c.q(s) == SimplexRef::nondeg(n, b))) cert.covering = false;
      }
    }

  cert.connected = is_connected(T);
  if (cert.connected) {
    auto pi = fundamental_group(T);
    auto tc = coset_enumeration(pi.presentation, bound);
    cert.simply_connected = !tc.exceeded() && tc.group->order() == 1;
  }

  cert.deck_free_transitive = true;
  for (int h = 0; h < G && cert.deck_free_transitive; ++h) {
    auto d = c.deck(h);
    if (!(compose(c.q, d) == c.q)) cert.deck_free_transitive = false;
  }
  for (int v = 0; v < static_cast<int>(X.count(0)) && cert.deck_free_transitive; ++v) {
    std::vector<bool> hit(G, false);
    for (int h = 0; h < G; ++h) {
      int img = c.deck(h).image(0, v * G).base;
      if (img / G != v || hit[img % G]) cert.deck_free_transitive = false;
      else hit[img % G] = true;
    }
  }

  cert.cocycle = true;
  if (X.dimension() >= 2)
    for (int t = 0; t < static_cast<int>(X.count(2)); ++t) {
      const auto& f = X.simplex(2, t).faces;
      if (c.edge_class(f[1]) != c.group.multiply(c.edge_class(f[2]), c.edge_class(f[0]))) cert.cocycle = false;
    }
  return cert;
}

}  // namespace detail

struct CoverResult {
  std::optional<CoverData> cover;  // empty when π₁ exceeded the coset bound
  EdgePathGroup pi1;
  std::size_t cosets_defined = 0;
  CoverCertificate certificate;
  bool exceeded() const { return !cover.has_value(); }
};

inline CoverResult universal_cover(const SSet& X, std::size_t bound = 10'000) {
  CoverResult out;
  out.pi1 = fundamental_group(*X);
  auto tc = coset_enumeration(out.pi1.presentation, bound);
  out.cosets_defined = tc.cosets_defined;
  if (tc.exceeded()) return out;

  CoverData c;
  c.base = X;
  c.pi1 = out.pi1;
  c.group = *tc.group;
  int G = c.order();
  SimplicialSet T;
  for (int n = 0; n <= X->dimension(); ++n)
    for (int b = 0; b < static_cast<int>(X->count(n)); ++b) {
      SimplexRef x = SimplexRef::nondeg(n, b);
      int shift = n >= 1 ? c.edge_class(leading_edge(*X, x)) : 0;
      for (int g = 0; g < G; ++g) {
        std::vector<SimplexRef> faces;
        for (int i = 0; i <= n && n > 0; ++i)
          faces.push_back(c.lift(X->face(i, x), i == 0 ? c.group.multiply(g, shift) : g));
        T.add_simplex(n, X->name(n, b) + "@" + std::to_string(g), std::move(faces));
      }
    }
  if (X->pointed()) T.set_basepoint(*X->basepoint() * G);
  T.validate();
  c.total = share(std::move(T));
  SimplicialMap::Images q(X->dimension() + 1);
  for (int n = 0; n <= X->dimension(); ++n)
    for (int b = 0; b < static_cast<int>(c.total->count(n)); ++b) q[n].push_back(SimplexRef::nondeg(n, b / G));
  c.q = SimplicialMap(c.total, X, std::move(q));
  out.certificate = detail::certify_cover(c, bound);
  out.cover = std::move(c);
  return out;
}

// ---------------------------------------------------------------------------
// Twisted homology equivalences
// ---------------------------------------------------------------------------

struct HqVerdict {
  bool equivalence = false;
  EquivalenceVerdict pulled_back;  // HZ verdict on q^* f
};

inline HqVerdict is_hq_equivalence(const RetractiveMap& f, const CoverData& cover) {
  auto s = pullback_ret(cover.q, f.source);
  auto t = pullback_ret(cover.q, f.target);
  HqVerdict out;
  out.pulled_back = is_hz_equivalence(pullback_map(f, s, t).map, ChainPolicy::augmented);
  out.equivalence = out.pulled_back.equivalence;
  return out;
}

inline HqVerdict is_hq_equivalence(const ComoduleMap& f, const CoverData& cover) {
  auto s = pullback_comod(cover.q, f.source);
  auto t = pullback_comod(cover.q, f.target);
  HqVerdict out;
  out.pulled_back = is_hz_equivalence(pullback_comod_map(f, s, t).map, ChainPolicy::based);
  out.equivalence = out.pulled_back.equivalence;
  return out;
}

}  // namespace comodx
