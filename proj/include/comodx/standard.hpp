#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "constructions.hpp"

namespace comodx {

/**
 * The simplicial set of an ordered simplicial complex: each facet is a list of
 * vertex labels; every nonempty subset of a facet becomes a nondegenerate
 * simplex with vertices in increasing label order.
 */
inline SSet from_simplicial_complex(const std::vector<std::vector<int>>& facets, std::optional<int> basepoint = {}) {
  std::set<std::vector<int>> all;
  for (auto facet : facets) {
    std::sort(facet.begin(), facet.end());
    facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
    int k = static_cast<int>(facet.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
      std::vector<int> face;
      for (int i = 0; i < k; ++i)
        if (mask & (1 << i)) face.push_back(facet[i]);
      all.insert(face);
    }
  }
  std::vector<std::map<std::vector<int>, int>> ids;
  SimplicialSet X;
  int top = 0;
  for (const auto& s : all) top = std::max(top, static_cast<int>(s.size()) - 1);
  ids.resize(top + 1);
  for (int n = 0; n <= top; ++n)
    for (const auto& s : all) {
      if (static_cast<int>(s.size()) != n + 1) continue;
      std::string name;
      for (int v : s) name += (name.empty() ? "" : ".") + std::to_string(v);
      std::vector<SimplexRef> faces;
      if (n > 0)
        for (int i = 0; i <= n; ++i) {
          auto f = s;
          f.erase(f.begin() + i);
          faces.push_back(SimplexRef::nondeg(n - 1, ids[n - 1].at(f)));
        }
      ids[n][s] = X.add_simplex(n, "v" + name, std::move(faces));
    }
  if (basepoint) X.set_basepoint(ids[0].at({*basepoint}));
  X.validate();
  return share(std::move(X));
}

inline SSet point() {
  SimplicialSet X;
  X.add_vertex("pt");
  return share(std::move(X));
}

inline SSet pointed_point() {
  SimplicialSet X;
  X.set_basepoint(X.add_vertex("pt"));
  return share(std::move(X));
}

/// Δ[n]: nondegenerate k-simplices are the strictly increasing maps [k] → [n].
inline SSet standard_simplex(int n) {
  if (n < 0) throw std::invalid_argument("standard_simplex: negative dimension");
  std::vector<int> facet(n + 1);
  for (int i = 0; i <= n; ++i) facet[i] = i;
  return from_simplicial_complex({facet});
}

/// ∂Δ[n], n ≥ 1.
inline SSet boundary_simplex(int n) {
  if (n < 1) throw std::invalid_argument("boundary_simplex: needs n >= 1");
  std::vector<std::vector<int>> facets;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> f;
    for (int i = 0; i <= n; ++i)
      if (i != skip) f.push_back(i);
    facets.push_back(f);
  }
  return from_simplicial_complex(facets);
}

/// Sⁿ = Δ[n]/∂Δ[n] (one vertex, one n-simplex), pointed. S⁰ is two points.
inline SSet sphere(int n) {
  if (n < 0) throw std::invalid_argument("sphere: negative dimension");
  SimplicialSet X;
  if (n == 0) {
    X.set_basepoint(X.add_vertex("*"));
    X.add_vertex("1");
  } else {
    X.set_basepoint(X.add_vertex("*"));
    std::vector<SimplexRef> faces(n + 1, degenerate_vertex(0, n - 1));
    X.add_simplex(n, "e" + std::to_string(n), std::move(faces));
  }
  X.validate();
  return share(std::move(X));
}

/// The constant simplicial set on a finite set (vertices only).
inline SSet discrete(const std::vector<std::string>& names, std::optional<int> basepoint = {}) {
  SimplicialSet X;
  for (const auto& nm : names) X.add_vertex(nm);
  X.set_basepoint(basepoint);
  X.validate();
  return share(std::move(X));
}

/// The same simplicial set with a chosen basepoint vertex.
inline SSet with_basepoint(const SSet& X, int vertex) {
  SimplicialSet Y = *X;
  Y.set_basepoint(vertex);
  Y.validate();
  return share(std::move(Y));
}

inline SSet without_basepoint(const SSet& X) {
  SimplicialSet Y = *X;
  Y.set_basepoint(std::nullopt);
  return share(std::move(Y));
}

/// Six-vertex triangulation of the real projective plane.
inline SSet rp2_triangulation() {
  return from_simplicial_complex({{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
                                  {2, 3, 4}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}});
}

/// The one-vertex model of RP²: an edge a and a 2-simplex with boundary a, *, a.
inline SSet rp2_minimal() {
  SimplicialSet X;
  X.set_basepoint(X.add_vertex("*"));
  int a = X.add_simplex(1, "a", {degenerate_vertex(0, 0), degenerate_vertex(0, 0)});
  X.add_simplex(2, "t", {SimplexRef::nondeg(1, a), degenerate_vertex(0, 1), SimplexRef::nondeg(1, a)});
  X.validate();
  return share(std::move(X));
}

/// Wedge of pointed simplicial sets, glued at their basepoints.
inline SSet wedge(const SSet& A, const SSet& B) {
  if (!A->pointed() || !B->pointed()) throw std::invalid_argument("wedge: both summands must be pointed");
  auto pt = pointed_point();
  auto f = constant_map(pt, A, *A->basepoint());
  auto g = constant_map(pt, B, *B->basepoint());
  auto po = pushout(SimplicialMap(pt, A, f.images()), SimplicialMap(pt, B, g.images()));
  SimplicialSet W = *po.object;
  W.set_basepoint(po.inj1.image(0, *A->basepoint()).base);
  return share(std::move(W));
}

/**
 * Collapses a maximal tree of the 1-skeleton (lexicographic BFS from vertex 0)
 * to a point, producing a reduced simplicial set with the same homotopy type.
 */
inline SSet collapse_spanning_tree(const SSet& X) {
  std::vector<std::vector<bool>> flags(X->dimension() + 1);
  for (int n = 0; n <= X->dimension(); ++n) flags[n].assign(X->count(n), false);
  std::vector<bool> seen(X->count(0), false);
  std::vector<int> queue{0};
  seen[0] = true;
  flags[0][0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int e = 0; e < static_cast<int>(X->count(1)); ++e) {
      const auto& f = X->simplex(1, e).faces;
      int src = f[1].base;
      int dst = f[0].base;
      int other = src == v ? dst : (dst == v ? src : -1);
      if (other < 0 || seen[other]) continue;
      seen[other] = true;
      flags[0][other] = true;
      flags[1][e] = true;
      queue.push_back(other);
    }
  }
  return collapse(X, flags).object;
}

}  // namespace comodx
