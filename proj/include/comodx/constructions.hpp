#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simplicial_map.hpp"

namespace comodx {

// ---------------------------------------------------------------------------
// Products and fiber products
// ---------------------------------------------------------------------------

/**
 * A sub-simplicial set of X × Y cut out by a degreewise predicate on pairs.
 * The plain product and every pullback are instances. Nondegenerate
 * simplices are the pairs whose degeneracy words share no index.
 */
struct FiberProduct {
  SSet object;
  SimplicialMap proj1;
  SimplicialMap proj2;
  std::vector<std::map<std::pair<SimplexRef, SimplexRef>, int>> index;

  /// The simplex (a, b), if it lies in the fiber product.
  std::optional<SimplexRef> pair(const SimplexRef& a, const SimplexRef& b) const {
    if (a.dim != b.dim) throw std::invalid_argument("pair: dimensions differ");
    DegeneracyWord common = common_part(a.word, b.word);
    int k = a.dim - static_cast<int>(common.size());
    SimplexRef a0{k, a.base, strip_common(a.word, common)};
    SimplexRef b0{k, b.base, strip_common(b.word, common)};
    if (k >= static_cast<int>(index.size())) return std::nullopt;
    auto it = index[k].find({a0, b0});
    if (it == index[k].end()) return std::nullopt;
    return SimplexRef{a.dim, it->second, common};
  }

  SimplexRef pair_or_throw(const SimplexRef& a, const SimplexRef& b) const {
    auto p = pair(a, b);
    if (!p) throw ValidationError("pair does not lie in the fiber product");
    return *p;
  }
};

using PairPredicate = std::function<bool(const SimplexRef&, const SimplexRef&)>;

namespace detail {

inline bool disjoint_words(const DegeneracyWord& a, const DegeneracyWord& b) {
  for (int i : a.indices())
    if (b.contains(i)) return false;
  return true;
}

}  // namespace detail

inline FiberProduct fiber_product(const SSet& X, const SSet& Y, const PairPredicate& keep) {
  FiberProduct out;
  SimplicialSet P;
  SimplicialMap::Images p1;
  SimplicialMap::Images p2;
  int top = (X->empty() || Y->empty()) ? -1 : X->dimension() + Y->dimension();
  if (top >= 0) check_dimension(top, "product");
  for (int n = 0; n <= top; ++n) {
    out.index.emplace_back();
    auto xs = X->all_simplices(n);
    auto ys = Y->all_simplices(n);
    for (const auto& a : xs)
      for (const auto& b : ys) {
        if (!detail::disjoint_words(a.word, b.word)) continue;
        if (!keep(a, b)) continue;
        std::vector<SimplexRef> faces;
        if (n > 0)
          for (int i = 0; i <= n; ++i) {
            auto f = out.pair(X->face(i, a), Y->face(i, b));
            if (!f) throw ValidationError("fiber product predicate is not closed under faces");
            faces.push_back(*f);
          }
        int id = P.add_simplex(n, "(" + X->ref_name(a) + "," + Y->ref_name(b) + ")", std::move(faces));
        out.index[n].emplace(std::make_pair(a, b), id);
        if (static_cast<int>(p1.size()) <= n) {
          p1.resize(n + 1);
          p2.resize(n + 1);
        }
        p1[n].push_back(a);
        p2[n].push_back(b);
      }
  }
  while (!out.index.empty() && out.index.back().empty()) out.index.pop_back();
  p1.resize(out.index.size());
  p2.resize(out.index.size());
  if (X->pointed() && Y->pointed()) {
    if (auto bp = out.pair(SimplexRef::nondeg(0, *X->basepoint()), SimplexRef::nondeg(0, *Y->basepoint())))
      P.set_basepoint(bp->base);
  }
  out.object = share(std::move(P));
  out.proj1 = SimplicialMap(out.object, X, std::move(p1), false);
  out.proj2 = SimplicialMap(out.object, Y, std::move(p2), false);
  return out;
}

inline FiberProduct product(const SSet& X, const SSet& Y) {
  return fiber_product(X, Y, [](const SimplexRef&, const SimplexRef&) { return true; });
}

/// Z ×_B E for f: Z → B and p: E → B.
inline FiberProduct pullback(const SimplicialMap& f, const SimplicialMap& p) {
  if (f.codomain() != p.codomain() && !f.codomain()->same_structure(*p.codomain()))
    throw std::invalid_argument("pullback: maps do not share a codomain");
  return fiber_product(f.domain(), p.domain(),
                       [&](const SimplexRef& a, const SimplexRef& b) { return f(a) == p(b); });
}

/// The mediating map W → Z ×_B E determined by u: W → Z and v: W → E.
inline SimplicialMap induced_map_into(const FiberProduct& target, const SimplicialMap& u, const SimplicialMap& v) {
  if (u.domain() != v.domain() && !u.domain()->same_structure(*v.domain()))
    throw std::invalid_argument("induced map: legs have different domains");
  const auto& W = *u.domain();
  SimplicialMap::Images images(W.dimension() + 1);
  for (int n = 0; n <= W.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(W.count(n)); ++b) {
      auto p = target.pair(u.image(n, b), v.image(n, b));
      if (!p) throw ValidationError("induced map into pullback: the cone does not commute at '" + W.name(n, b) + "'");
      images[n].push_back(*p);
    }
  return SimplicialMap(u.domain(), target.object, std::move(images));
}

/// f × g : A × C → B × D between two constructed products.
inline SimplicialMap product_map(const SimplicialMap& f, const SimplicialMap& g, const FiberProduct& source,
                                 const FiberProduct& target) {
  return induced_map_into(target, compose(f, source.proj1), compose(g, source.proj2));
}

// ---------------------------------------------------------------------------
// Subobjects and quotients
// ---------------------------------------------------------------------------

struct Subobject {
  SSet object;
  SimplicialMap inclusion;
  std::vector<std::vector<int>> new_index;  // -1 when dropped
};

/// The sub-simplicial set on the nondegenerate simplices flagged in `keep`.
inline Subobject subobject(const SSet& X, const std::vector<std::vector<bool>>& keep) {
  Subobject out;
  SimplicialSet S;
  SimplicialMap::Images incl;
  out.new_index.resize(X->dimension() + 1);
  for (int n = 0; n <= X->dimension(); ++n) {
    out.new_index[n].assign(X->count(n), -1);
    for (int b = 0; b < static_cast<int>(X->count(n)); ++b) {
      if (n >= static_cast<int>(keep.size()) || !keep[n][b]) continue;
      std::vector<SimplexRef> faces;
      for (const auto& f : X->simplex(n, b).faces) {
        int nb = out.new_index[f.base_dim()][f.base];
        if (nb < 0) throw ValidationError("subobject: not closed under faces at '" + X->name(n, b) + "'");
        faces.push_back(SimplexRef{f.dim, nb, f.word});
      }
      out.new_index[n][b] = S.add_simplex(n, X->name(n, b), std::move(faces));
      if (static_cast<int>(incl.size()) <= n) incl.resize(n + 1);
      incl[n].push_back(SimplexRef::nondeg(n, b));
    }
  }
  if (X->pointed() && out.new_index[0][*X->basepoint()] >= 0) S.set_basepoint(out.new_index[0][*X->basepoint()]);
  out.object = share(std::move(S));
  out.inclusion = SimplicialMap(out.object, X, std::move(incl), false);
  return out;
}

/// Flags the nondegenerate simplices of f's codomain that are bases of images.
inline std::vector<std::vector<bool>> image_flags(const SimplicialMap& f) {
  const auto& Y = *f.codomain();
  std::vector<std::vector<bool>> flags(Y.dimension() + 1);
  for (int n = 0; n <= Y.dimension(); ++n) flags[n].assign(Y.count(n), false);
  for (const auto& level : f.images())
    for (const auto& img : level) flags[img.base_dim()][img.base] = true;
  return flags;
}

struct Quotient {
  SSet object;
  SimplicialMap projection;
  std::vector<std::vector<int>> new_index;  // -1 when collapsed to the basepoint
  std::vector<std::vector<int>> origin;     // quotient simplex -> original index, -1 for the basepoint
};

/**
 * Z with the flagged sub-simplicial set collapsed to a new basepoint, which
 * becomes vertex 0 of the result. Faces that land in the collapsed part are
 * redirected to the matching degeneracy of the basepoint.
 */
inline Quotient collapse(const SSet& Z, const std::vector<std::vector<bool>>& collapsed) {
  Quotient out;
  SimplicialSet Q;
  int bp = Q.add_vertex("*");
  Q.set_basepoint(bp);
  out.new_index.resize(Z->dimension() + 1);
  out.origin.resize(std::max(Z->dimension() + 1, 1));
  out.origin[0].push_back(-1);
  auto is_collapsed = [&](int n, int b) { return n < static_cast<int>(collapsed.size()) && collapsed[n][b]; };
  for (int n = 0; n <= Z->dimension(); ++n) {
    out.new_index[n].assign(Z->count(n), -1);
    for (int b = 0; b < static_cast<int>(Z->count(n)); ++b) {
      if (is_collapsed(n, b)) continue;
      std::vector<SimplexRef> faces;
      for (const auto& f : Z->simplex(n, b).faces) {
        int k = f.base_dim();
        if (is_collapsed(k, f.base))
          faces.push_back(degenerate_vertex(bp, f.dim));
        else
          faces.push_back(SimplexRef{f.dim, out.new_index[k][f.base], f.word});
      }
      out.new_index[n][b] = Q.add_simplex(n, Z->name(n, b), std::move(faces));
      out.origin[n].push_back(b);
    }
  }
  while (out.origin.size() > 1 && out.origin.back().empty()) out.origin.pop_back();
  out.object = share(std::move(Q));
  SimplicialMap::Images proj(Z->dimension() + 1);
  for (int n = 0; n <= Z->dimension(); ++n)
    for (int b = 0; b < static_cast<int>(Z->count(n)); ++b)
      proj[n].push_back(out.new_index[n][b] < 0 ? degenerate_vertex(bp, n) : SimplexRef::nondeg(n, out.new_index[n][b]));
  out.projection = SimplicialMap(Z, out.object, std::move(proj), false);
  return out;
}

/// Z / A for a degreewise injective A → Z.
inline Quotient quotient(const SimplicialMap& inclusion) {
  if (!is_mono(inclusion)) throw std::invalid_argument("quotient: the map is not degreewise injective");
  return collapse(inclusion.codomain(), image_flags(inclusion));
}

/// The map Z/A → Z'/A' induced by f: Z → Z' carrying the collapsed part of q into that of q'.
inline SimplicialMap induced_quotient_map(const SimplicialMap& f, const Quotient& q, const Quotient& q2) {
  const auto& Qs = *q.object;
  SimplicialMap::Images images(Qs.dimension() + 1);
  for (int n = 0; n <= Qs.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(Qs.count(n)); ++b) {
      int orig = q.origin[n][b];
      if (orig < 0)
        images[n].push_back(degenerate_vertex(*q2.object->basepoint(), n));
      else
        images[n].push_back(q2.projection(f.image(n, orig)));
    }
  return SimplicialMap(q.object, q2.object, std::move(images));
}

// ---------------------------------------------------------------------------
// Pushouts
// ---------------------------------------------------------------------------

struct Pushout {
  SSet object;
  SimplicialMap inj1;  // B → P
  SimplicialMap inj2;  // C → P
  /// For each nondegenerate simplex of P: (1 or 2, nondegenerate simplex of B or C) representing it.
  std::vector<std::vector<std::pair<int, SimplexRef>>> representative;
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;  // smallest element is the root
  }
};

}  // namespace detail

/**
 * The pushout of B ←f− A −g→ C: degreewise union–find on all simplices,
 * then Eilenberg–Zilber renormalization (a class x is degenerate iff
 * x = s_i d_i x for some i).
 */
inline Pushout pushout(const SimplicialMap& f, const SimplicialMap& g) {
  if (f.domain() != g.domain() && !f.domain()->same_structure(*g.domain()))
    throw std::invalid_argument("pushout: maps do not share a domain");
  const auto& A = *f.domain();
  const auto& B = *f.codomain();
  const auto& C = *g.codomain();
  int top = std::max({A.dimension(), B.dimension(), C.dimension()});
  if (top >= 0) check_dimension(top, "pushout");

  struct Level {
    std::vector<SimplexRef> bs, cs;
    std::map<SimplexRef, int> bid, cid;
    std::vector<int> root;  // element -> root element
  };
  std::vector<Level> levels(top + 1);
  for (int n = 0; n <= top; ++n) {
    auto& L = levels[n];
    L.bs = B.all_simplices(n);
    L.cs = C.all_simplices(n);
    for (int k = 0; k < static_cast<int>(L.bs.size()); ++k) L.bid[L.bs[k]] = k;
    for (int k = 0; k < static_cast<int>(L.cs.size()); ++k) L.cid[L.cs[k]] = static_cast<int>(L.bs.size()) + k;
    detail::UnionFind uf(L.bs.size() + L.cs.size());
    for (const auto& a : A.all_simplices(n)) uf.unite(L.bid.at(f(a)), L.cid.at(g(a)));
    L.root.resize(uf.parent.size());
    for (int k = 0; k < static_cast<int>(L.root.size()); ++k) L.root[k] = uf.find(k);
  }
  auto element = [&](int n, int id) -> std::pair<int, SimplexRef> {
    const auto& L = levels[n];
    if (id < static_cast<int>(L.bs.size())) return {1, L.bs[id]};
    return {2, L.cs[id - static_cast<int>(L.bs.size())]};
  };
  auto class_of = [&](int n, int side, const SimplexRef& s) {
    const auto& L = levels[n];
    return L.root[side == 1 ? L.bid.at(s) : L.cid.at(s)];
  };
  auto face_class = [&](int n, int cls, int i) {
    auto [side, s] = element(n, cls);
    return class_of(n - 1, side, (side == 1 ? B : C).face(i, s));
  };
  auto degeneracy_class = [&](int n, int cls, int i) {
    auto [side, s] = element(n, cls);
    return class_of(n + 1, side, degeneracy(i, s));
  };

  // nondegenerate classes, in order of their root element
  std::vector<std::map<int, int>> nondeg_id(top + 1);
  std::vector<std::map<int, int>> degenerate_via(top + 1);  // class -> i with x = s_i d_i x
  SimplicialSet P;
  Pushout out;
  std::vector<std::map<int, SimplexRef>> canon(top + 1);
  std::function<SimplexRef(int, int)> canonical = [&](int n, int cls) -> SimplexRef {
    auto it = canon[n].find(cls);
    if (it != canon[n].end()) return it->second;
    SimplexRef r;
    if (auto nd = nondeg_id[n].find(cls); nd != nondeg_id[n].end()) {
      r = SimplexRef::nondeg(n, nd->second);
    } else {
      int i = degenerate_via[n].at(cls);
      r = degeneracy(i, canonical(n - 1, face_class(n, cls, i)));
    }
    canon[n].emplace(cls, r);
    return r;
  };

  for (int n = 0; n <= top; ++n) {
    const auto& L = levels[n];
    for (int k = 0; k < static_cast<int>(L.root.size()); ++k) {
      if (L.root[k] != k) continue;
      bool degenerate_class = false;
      for (int i = 0; i < n && !degenerate_class; ++i) {
        int d = face_class(n, k, i);
        if (degeneracy_class(n - 1, d, i) == k) {
          degenerate_via[n][k] = i;
          degenerate_class = true;
        }
      }
      if (degenerate_class) continue;
      std::vector<SimplexRef> faces;
      for (int i = 0; i <= n && n > 0; ++i) faces.push_back(canonical(n - 1, face_class(n, k, i)));
      auto [side, rep] = element(n, k);
      std::string nm = (side == 1 ? B : C).ref_name(rep);
      int id = P.add_simplex(n, nm, std::move(faces));
      nondeg_id[n][k] = id;
      if (static_cast<int>(out.representative.size()) <= n) out.representative.resize(n + 1);
      out.representative[n].push_back({side, rep});
    }
  }
  out.object = share(std::move(P));
  SimplicialMap::Images i1(B.dimension() + 1);
  SimplicialMap::Images i2(C.dimension() + 1);
  for (int n = 0; n <= B.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(B.count(n)); ++b)
      i1[n].push_back(canonical(n, class_of(n, 1, SimplexRef::nondeg(n, b))));
  for (int n = 0; n <= C.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(C.count(n)); ++b)
      i2[n].push_back(canonical(n, class_of(n, 2, SimplexRef::nondeg(n, b))));
  out.inj1 = SimplicialMap(f.codomain(), out.object, std::move(i1), false);
  out.inj2 = SimplicialMap(g.codomain(), out.object, std::move(i2), false);
  out.object->validate();
  return out;
}

/// The mediating map P → T from h1: B → T and h2: C → T with h1 f = h2 g.
inline SimplicialMap induced_map_from(const Pushout& source, const SimplicialMap& f, const SimplicialMap& g,
                                      const SimplicialMap& h1, const SimplicialMap& h2) {
  if (!(compose(h1, f) == compose(h2, g)))
    throw ValidationError("induced map from pushout: the cocone does not commute");
  const auto& P = *source.object;
  SimplicialMap::Images images(P.dimension() + 1);
  for (int n = 0; n <= P.dimension(); ++n)
    for (const auto& [side, rep] : source.representative[n]) images[n].push_back(side == 1 ? h1(rep) : h2(rep));
  return SimplicialMap(source.object, h1.codomain(), std::move(images));
}

// ---------------------------------------------------------------------------
// Pointed constructions
// ---------------------------------------------------------------------------

/// X₊ = X ⊔ {+}; the new basepoint is the last vertex so X's indices are unchanged.
inline SSet plus_basepoint(const SSet& X) {
  SimplicialSet P;
  for (int n = 0; n <= X->dimension(); ++n)
    for (int b = 0; b < static_cast<int>(X->count(n)); ++b) P.add_simplex(n, X->name(n, b), X->simplex(n, b).faces);
  int bp = P.add_vertex("+");
  P.set_basepoint(bp);
  return share(std::move(P));
}

/// The inclusion X → X₊.
inline SimplicialMap plus_inclusion(const SSet& X, const SSet& Xplus) {
  auto id = identity_map(X);
  return SimplicialMap(X, Xplus, id.images());
}

struct Smash {
  SSet object;
  FiberProduct product;
  Quotient quotient;

  /// The class of (a, b) in Y ∧ Y'.
  SimplexRef pair(const SimplexRef& a, const SimplexRef& b) const {
    return quotient.projection(product.pair_or_throw(a, b));
  }
  /// The pair representing s, or nullopt when s is (a degeneracy of) the basepoint.
  std::optional<std::pair<SimplexRef, SimplexRef>> components(const SimplexRef& s) const {
    int orig = quotient.origin.at(s.base_dim()).at(s.base);
    if (orig < 0) return std::nullopt;
    const auto& a = product.proj1.image(s.base_dim(), orig);
    const auto& b = product.proj2.image(s.base_dim(), orig);
    return std::make_pair(degenerate(s.word, a), degenerate(s.word, b));
  }
};

/// Y ∧ Y' = (Y × Y') / (Y ∨ Y').
inline Smash smash(const SSet& Y, const SSet& Y2) {
  if (!Y->pointed() || !Y2->pointed()) throw std::invalid_argument("smash: both factors must be pointed");
  Smash out;
  out.product = product(Y, Y2);
  const auto& P = *out.product.object;
  std::vector<std::vector<bool>> wedge(P.dimension() + 1);
  for (int n = 0; n <= P.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(P.count(n)); ++b)
      wedge[n].push_back(Y->is_basepoint(out.product.proj1.image(n, b)) ||
                         Y2->is_basepoint(out.product.proj2.image(n, b)));
  out.quotient = collapse(out.product.object, wedge);
  out.object = out.quotient.object;
  return out;
}

/// f ∧ g between constructed smash products (f, g pointed).
inline SimplicialMap smash_map(const SimplicialMap& f, const SimplicialMap& g, const Smash& source, const Smash& target) {
  auto prod = product_map(f, g, source.product, target.product);
  return induced_quotient_map(prod, source.quotient, target.quotient);
}

}  // namespace comodx
