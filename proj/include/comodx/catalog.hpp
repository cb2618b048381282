#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "adjunction.hpp"
#include "hom_enumeration.hpp"
#include "io.hpp"
#include "standard.hpp"

namespace comodx {

/// A₊ ⊆ X₊ for the full subcomplex of X on a vertex set, labeled by the inclusion.
struct SubComodule {
  Comodule comodule;
  Subobject sub;
};

inline SubComodule full_subcomodule(const SSet& X, const std::set<int>& verts) {
  auto Xp = plus_basepoint(X);
  std::vector<std::vector<bool>> keep(Xp->dimension() + 1);
  for (int n = 0; n <= Xp->dimension(); ++n)
    for (int b = 0; b < static_cast<int>(Xp->count(n)); ++b) {
      SimplexRef s = SimplexRef::nondeg(n, b);
      bool ok = true;
      for (int k = 0; k <= n; ++k) {
        int v = Xp->vertex(s, k);
        ok = ok && (Xp->is_basepoint(SimplexRef::nondeg(0, v)) || verts.count(v));
      }
      keep[n].push_back(ok);
    }
  SubComodule out;
  out.sub = subobject(Xp, keep);
  const auto& A = *out.sub.object;
  Labels l(A.dimension() + 1);
  for (int n = 0; n <= A.dimension(); ++n)
    for (int b = 0; b < static_cast<int>(A.count(n)); ++b) {
      auto img = out.sub.inclusion.image(n, b);
      l[n].push_back(Xp->is_basepoint(img) ? std::nullopt : std::optional<SimplexRef>(img));
    }
  out.comodule = from_labels(X, out.sub.object, std::move(l));
  return out;
}

/// The inclusion of full subcomodules a ⊆ b.
inline ComoduleMap sub_inclusion(const SubComodule& a, const SubComodule& b) {
  const auto& A = *a.sub.object;
  SimplicialMap::Images img(A.dimension() + 1);
  for (int n = 0; n <= A.dimension(); ++n)
    for (int k = 0; k < static_cast<int>(A.count(n)); ++k) {
      int nb = b.sub.new_index[n][a.sub.inclusion.image(n, k).base];
      if (nb < 0) throw std::invalid_argument("sub_inclusion: not a subcomodule");
      img[n].push_back(SimplexRef::nondeg(n, nb));
    }
  return make_comodule_map(a.comodule, b.comodule, SimplicialMap(a.sub.object, b.sub.object, std::move(img)));
}

/**
 * Deterministic generator of small test objects. Only rng() is used for
 * sampling (no distributions), so output depends on the seed alone.
 */
class Catalog {
 public:
  explicit Catalog(std::uint64_t seed) : rng_(seed) {}

  std::size_t pick(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }

  /// Connected bases: the point, Δ[1], Δ[2], ∂Δ[2], S¹, RP² (one vertex), S¹ ∨ S¹.
  static std::vector<std::pair<std::string, SSet>> bases() {
    return {{"pt", point()},
            {"D1", standard_simplex(1)},
            {"D2", standard_simplex(2)},
            {"dD2", boundary_simplex(2)},
            {"S1", sphere(1)},
            {"RP2", rp2_minimal()},
            {"S1vS1", wedge(sphere(1), sphere(1))}};
  }

  /// A random simplicial complex on 3 to 5 vertices with 2 to 4 facets of size 2 or 3.
  SSet random_complex() {
    int v = 3 + static_cast<int>(pick(3));
    int k = 2 + static_cast<int>(pick(3));
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < k; ++i) {
      int size = 2 + static_cast<int>(pick(2));
      std::vector<int> f;
      while (static_cast<int>(f.size()) < size) {
        int x = static_cast<int>(pick(v));
        if (std::find(f.begin(), f.end(), x) == f.end()) f.push_back(x);
      }
      facets.push_back(f);
    }
    return from_simplicial_complex(facets);
  }

  std::pair<std::string, SSet> random_pointed() {
    switch (pick(7)) {
      case 0: return {"S0", sphere(0)};
      case 1: return {"S1", sphere(1)};
      case 2: return {"S2", sphere(2)};
      case 3: return {"D1*", with_basepoint(standard_simplex(1), 0)};
      case 4: return {"RP2", rp2_minimal()};
      case 5: return {"S1vS1", wedge(sphere(1), sphere(1))};
      default: return {"K*", with_basepoint(random_complex(), 0)};
    }
  }

  /// Labels chosen dimension by dimension among X-simplices matching the labels of the faces.
  Labels random_labels(const SSet& Y, const SSet& X, int attempts = 20) {
    for (int a = 0; a < attempts; ++a) {
      Labels l(Y->dimension() + 1);
      bool ok = true;
      for (int n = 0; n <= Y->dimension() && ok; ++n)
        for (int b = 0; b < static_cast<int>(Y->count(n)) && ok; ++b) {
          SimplexRef y = SimplexRef::nondeg(n, b);
          if (Y->is_basepoint(y)) {
            l[n].push_back(std::nullopt);
            continue;
          }
          std::vector<SimplexRef> cands;
          for (const auto& x : X->all_simplices(n)) {
            bool fits = true;
            for (int i = 0; i <= n && n > 0 && fits; ++i) {
              auto f = Y->face(i, y);
              if (Y->is_basepoint(f)) continue;
              fits = X->face(i, x) == degenerate(f.word, *l[f.base_dim()][f.base]);
            }
            if (fits) cands.push_back(x);
          }
          if (cands.empty()) ok = false;
          else l[n].push_back(cands[pick(cands.size())]);
        }
      if (ok) return l;
    }
    Labels l(Y->dimension() + 1);
    for (int n = 0; n <= Y->dimension(); ++n)
      for (int b = 0; b < static_cast<int>(Y->count(n)); ++b)
        l[n].push_back(Y->is_basepoint(SimplexRef::nondeg(n, b)) ? std::nullopt
                                                                 : std::optional<SimplexRef>(degenerate_vertex(0, n)));
    return l;
  }

  /// A uniformly chosen simplicial map K → X (the hom-set is enumerated).
  SimplicialMap random_map(const SSet& K, const SSet& X) {
    auto maps = enumerate_maps(K, X, 200'000);
    return maps.at(pick(maps.size()));
  }

  /// X ∪_K (K × Δ[1]) for a random f: K → X, retracting through f ∘ pr.
  RetractiveSpace random_attachment(const SSet& X) {
    SSet K;
    switch (pick(3)) {
      case 0: K = point(); break;
      case 1: K = standard_simplex(1); break;
      default: K = boundary_simplex(2); break;
    }
    auto f = random_map(K, X);
    auto cyl = product(K, standard_simplex(1));
    auto end0 = detail::cylinder_end(K, cyl, 0);
    auto po = pushout(f, end0);
    auto r = induced_map_from(po, f, end0, identity_map(X), compose(f, cyl.proj1));
    return make_retractive(po.inj1, r);
  }

  Comodule identity_comodule(const SSet& X) {
    auto Xp = plus_basepoint(X);
    Labels l(Xp->dimension() + 1);
    for (int n = 0; n <= Xp->dimension(); ++n)
      for (int b = 0; b < static_cast<int>(Xp->count(n)); ++b)
        l[n].push_back(Xp->is_basepoint(SimplexRef::nondeg(n, b)) ? std::nullopt
                                                                  : std::optional<SimplexRef>(SimplexRef::nondeg(n, b)));
    return from_labels(X, Xp, std::move(l));
  }

  std::vector<Document> retractive_spaces(std::size_t count) {
    std::vector<Document> out;
    auto bs = bases();
    for (std::size_t i = 0; out.size() < count; ++i) {
      const auto& [bname, X] = bs[i % bs.size()];
      std::string tag;
      RetractiveSpace Z;
      switch ((i / bs.size()) % 6) {
        case 0: tag = "cylinder"; Z = cylinder_object(X); break;
        case 1: {
          auto [yn, Y] = random_pointed();
          tag = "ret-" + yn;
          Z = ret_functor(Y, X).space;
          break;
        }
        case 2: tag = "attach"; Z = random_attachment(X); break;
        case 3: tag = "cone"; Z = relative_cone(random_attachment(X)).space; break;
        case 4: tag = "zero"; Z = zero_retractive(X); break;
        default: {
          tag = "star";
          Z = star(random_comodule(X).second).space;
          break;
        }
      }
      out.push_back(Document{entry_name("retractive", out.size(), bname, tag), Z});
    }
    return out;
  }

  std::pair<std::string, Comodule> random_comodule(const SSet& X) {
    switch (pick(4)) {
      case 0: return {"identity", identity_comodule(X)};
      case 1: {
        auto [yn, Y] = random_pointed();
        if (Y->dimension() + X->dimension() > 4) return {"cofree-S1", cofree(sphere(1), X).comodule};
        return {"cofree-" + yn, cofree(Y, X).comodule};
      }
      case 2: {
        auto [yn, Y] = random_pointed();
        return {"labels-" + yn, from_labels(X, Y, random_labels(Y, X))};
      }
      default: {
        auto [yn, Y] = random_pointed();
        auto c = from_labels(X, Y, random_labels(Y, X));
        if (Y->dimension() + X->dimension() > 3) return {"labels-" + yn, c};
        return {"tensor-" + yn, tensor_sset(c, sphere(1))};
      }
    }
  }

  std::vector<Document> comodules(std::size_t count) {
    std::vector<Document> out;
    auto bs = bases();
    for (std::size_t i = 0; out.size() < count; ++i) {
      if (i % (bs.size() + 1) == bs.size()) {
        // over a discrete monoid: a monoidal product of two labeled sets
        auto m = cyclic_monoid(2 + static_cast<int>(pick(2)));
        auto [an, A] = random_pointed();
        auto [bn, B] = random_pointed();
        if (A->dimension() + B->dimension() > 3) B = sphere(0);
        auto c = from_labels(m.base, A, random_labels(A, m.base));
        auto d = from_labels(m.base, B, random_labels(B, m.base));
        out.push_back(Document{entry_name("comodule", out.size(), "Z/" + std::to_string(m.base->count(0)), "monoidal"),
                               monoidal_product(c, d, m)});
        continue;
      }
      const auto& [bname, X] = bs[i % (bs.size() + 1)];
      auto [tag, c] = random_comodule(X);
      out.push_back(Document{entry_name("comodule", out.size(), bname, tag), c});
    }
    return out;
  }

  std::vector<Document> simplicial_sets(std::size_t count) {
    std::vector<Document> out;
    for (std::size_t i = 0; out.size() < count; ++i) {
      std::string tag;
      SSet X;
      switch (i % 8) {
        case 0: tag = "S" + std::to_string(i / 8 % 4); X = sphere(static_cast<int>(i / 8 % 4)); break;
        case 1: tag = "wedge"; X = wedge(random_pointed().second, random_pointed().second); break;
        case 2: tag = "product"; X = product(random_complex(), standard_simplex(1)).object; break;
        case 3: tag = "quotient"; X = quotient(boundary_inclusion(1 + static_cast<int>(pick(3)))).object; break;
        case 4: tag = "RP2"; X = pick(2) ? rp2_triangulation() : rp2_minimal(); break;
        case 5: tag = "simplex"; X = standard_simplex(static_cast<int>(pick(4))); break;
        case 6: tag = "complex"; X = random_complex(); break;
        default: tag = "reduced"; X = collapse_spanning_tree(random_complex()); break;
      }
      out.push_back(Document{entry_name("sset", out.size(), "", tag), X});
    }
    return out;
  }

  static SimplicialMap boundary_inclusion(int n) {
    auto D = standard_simplex(n);
    std::vector<std::vector<bool>> keep(n + 1);
    for (int k = 0; k <= n; ++k) keep[k].assign(D->count(k), k < n);
    auto sub = subobject(D, keep);
    return sub.inclusion;
  }

 private:
  std::mt19937_64 rng_;

  static std::string entry_name(const std::string& kind, std::size_t i, const std::string& base, const std::string& tag) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%03zu", i);
    return kind + "-" + buf + (base.empty() ? "" : "-" + base) + "-" + tag;
  }
};

/// The full catalog: `size` documents of each kind (simplicial sets, retractive spaces, comodules).
inline std::vector<Document> catalog(std::uint64_t seed, std::size_t size) {
  Catalog c(seed);
  auto out = c.simplicial_sets(size);
  for (auto& d : c.retractive_spaces(size)) out.push_back(std::move(d));
  for (auto& d : c.comodules(size)) out.push_back(std::move(d));
  return out;
}

}  // namespace comodx
