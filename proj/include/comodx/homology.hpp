#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "simplicial_map.hpp"

namespace comodx {

/**
 * A bounded chain complex of free abelian groups. Degree d lives at position
 * d - min_degree; boundary[k] maps position k to position k-1 (boundary[0]
 * has zero rows).
 */
struct ChainComplex {
  int min_degree = 0;
  std::vector<int> ranks;
  std::vector<SparseMatrix> boundary;

  int max_degree() const { return min_degree + static_cast<int>(ranks.size()) - 1; }
  int rank(int degree) const {
    int k = degree - min_degree;
    return k >= 0 && k < static_cast<int>(ranks.size()) ? ranks[k] : 0;
  }
  /// ∂_d as a rank(d-1) × rank(d) matrix (zero outside the stored range).
  SparseMatrix d(int degree) const {
    int k = degree - min_degree;
    if (k >= 0 && k < static_cast<int>(boundary.size())) return boundary[k];
    return SparseMatrix(rank(degree - 1), rank(degree));
  }
  /// ∂∂ = 0 in every degree.
  bool is_complex() const {
    for (int deg = min_degree + 1; deg <= max_degree(); ++deg)
      if (!(d(deg - 1) * d(deg)).is_zero()) return false;
    return true;
  }
};

namespace detail {

inline ChainComplex simplicial_chains(const SimplicialSet& X, bool augmented, bool drop_basepoint) {
  if (augmented && X.empty()) throw std::invalid_argument("augmented chains of the empty simplicial set");
  ChainComplex C;
  C.min_degree = augmented ? -1 : 0;
  int top = X.dimension();
  // relative chains drop the basepoint vertex from the basis
  auto index_of = [&](int n, int b) {
    if (!drop_basepoint || n > 0) return b;
    if (b == *X.basepoint()) return -1;
    return b > *X.basepoint() ? b - 1 : b;
  };
  auto rank_of = [&](int n) {
    int r = static_cast<int>(X.count(n));
    return (drop_basepoint && n == 0) ? r - 1 : r;
  };
  if (augmented) {
    C.ranks.push_back(1);
    C.boundary.emplace_back(0, 1);
  }
  for (int n = 0; n <= top; ++n) {
    C.ranks.push_back(rank_of(n));
    if (n == 0) {
      if (augmented) {
        SparseMatrix e(1, rank_of(0));
        for (int b = 0; b < rank_of(0); ++b) e.add(0, b, 1);
        C.boundary.push_back(std::move(e));
      } else {
        C.boundary.emplace_back(0, rank_of(0));
      }
      continue;
    }
    SparseMatrix D(rank_of(n - 1), rank_of(n));
    for (int b = 0; b < static_cast<int>(X.count(n)); ++b)
      for (int i = 0; i <= n; ++i) {
        const auto& f = X.simplex(n, b).faces[i];
        if (!f.nondegenerate()) continue;
        int row = index_of(n - 1, f.base);
        if (row < 0) continue;
        D.add(row, b, i % 2 == 0 ? 1 : -1);
      }
    C.boundary.push_back(std::move(D));
  }
  return C;
}

}  // namespace detail

/// Normalized chains: basis the nondegenerate simplices, degenerate faces count as zero.
inline ChainComplex normalized_chains(const SimplicialSet& X, bool augmented = false) {
  return detail::simplicial_chains(X, augmented, false);
}

/// Chains relative to the basepoint, C(X)/C(*); computes reduced homology.
inline ChainComplex reduced_chains(const SimplicialSet& X) {
  if (!X.pointed()) throw std::invalid_argument("reduced_chains: unpointed simplicial set");
  return detail::simplicial_chains(X, false, true);
}

struct AbelianGroup {
  int rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next

  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup&) const = default;
  std::string to_string() const {
    if (trivial()) return "0";
    std::string out;
    if (rank == 1) out = "Z";
    if (rank > 1) out = "Z^" + std::to_string(rank);
    for (const auto& t : torsion) out += (out.empty() ? "" : " + ") + ("Z/" + t.str());
    return out;
  }
};

inline AbelianGroup make_group(int rank, std::vector<long long> torsion = {}) {
  AbelianGroup g;
  g.rank = rank;
  for (auto t : torsion) g.torsion.emplace_back(t);
  return g;
}

/// A ⊕ B, with invariant factors recomputed by Smith form of the combined diagonal.
inline AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  AbelianGroup out;
  out.rank = a.rank + b.rank;
  std::vector<Integer> diag = a.torsion;
  diag.insert(diag.end(), b.torsion.begin(), b.torsion.end());
  int k = static_cast<int>(diag.size());
  DenseMatrix D(k, k);
  for (int i = 0; i < k; ++i) D(i, i) = diag[i];
  for (const auto& f : smith_normal_form(std::move(D), false).factors)
    if (f != 1) out.torsion.push_back(f);
  return out;
}

struct HomologySummary {
  int min_degree = 0;
  std::vector<AbelianGroup> groups;

  AbelianGroup at(int degree) const {
    int k = degree - min_degree;
    return k >= 0 && k < static_cast<int>(groups.size()) ? groups[k] : AbelianGroup{};
  }
  /// Highest degree with a nonzero group, or min_degree - 1.
  int top_nonzero() const {
    for (int k = static_cast<int>(groups.size()) - 1; k >= 0; --k)
      if (!groups[k].trivial()) return min_degree + k;
    return min_degree - 1;
  }
  bool acyclic() const { return top_nonzero() < min_degree; }
  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < groups.size(); ++k)
      os << (k ? ", " : "") << "H" << (min_degree + static_cast<int>(k)) << "=" << groups[k].to_string();
    return os.str();
  }
};

inline HomologySummary homology(const ChainComplex& C) {
  HomologySummary H;
  H.min_degree = C.min_degree;
  int lo = C.min_degree;
  int hi = C.max_degree();
  std::vector<std::vector<Integer>> factors(hi - lo + 2);
  for (int deg = lo; deg <= hi + 1; ++deg) factors[deg - lo] = invariant_factors(C.d(deg));
  for (int deg = lo; deg <= hi; ++deg) {
    AbelianGroup g;
    int rank_out = static_cast<int>(factors[deg - lo].size());
    const auto& in = factors[deg + 1 - lo];
    g.rank = C.rank(deg) - rank_out - static_cast<int>(in.size());
    for (const auto& f : in)
      if (f != 1) g.torsion.push_back(f);
    H.groups.push_back(std::move(g));
  }
  return H;
}

inline HomologySummary homology(const SimplicialSet& X, bool reduced = false) {
  if (reduced && X.empty()) return HomologySummary{-1, {}};
  return homology(normalized_chains(X, reduced));
}

/// Degreewise equality of ranks and invariant factors over the union of degree ranges.
inline bool groups_isomorphic(const HomologySummary& a, const HomologySummary& b) {
  int lo = std::min(a.min_degree, b.min_degree);
  int hi = std::max(a.min_degree + static_cast<int>(a.groups.size()),
                    b.min_degree + static_cast<int>(b.groups.size()));
  for (int d = lo; d <= hi; ++d)
    if (!(a.at(d) == b.at(d))) return false;
  return true;
}

/// Degreewise direct sum of two summaries.
inline HomologySummary direct_sum(const HomologySummary& a, const HomologySummary& b) {
  HomologySummary out;
  out.min_degree = std::min(a.min_degree, b.min_degree);
  int hi = std::max(a.min_degree + static_cast<int>(a.groups.size()),
                    b.min_degree + static_cast<int>(b.groups.size()));
  for (int d = out.min_degree; d < hi; ++d) out.groups.push_back(direct_sum(a.at(d), b.at(d)));
  return out;
}

/// Degree-d components f_d: A_d → B_d, positioned like ChainComplex.
struct ChainMap {
  ChainComplex source;
  ChainComplex target;
  std::vector<SparseMatrix> components;

  SparseMatrix at(int degree) const {
    int k = degree - source.min_degree;
    if (k >= 0 && k < static_cast<int>(components.size())) return components[k];
    return SparseMatrix(target.rank(degree), source.rank(degree));
  }
  /// ∂f = f∂ in every degree.
  bool commutes() const {
    int hi = std::max(source.max_degree(), target.max_degree());
    for (int deg = source.min_degree + 1; deg <= hi; ++deg)
      if (!(target.d(deg) * at(deg) == at(deg - 1) * source.d(deg))) return false;
    return true;
  }
};

enum class ChainPolicy { unreduced, augmented, based };

inline ChainComplex chains_for(const SimplicialSet& X, ChainPolicy policy) {
  switch (policy) {
    case ChainPolicy::augmented:
      return normalized_chains(X, true);
    case ChainPolicy::based:
      return reduced_chains(X);
    default:
      return normalized_chains(X, false);
  }
}

/**
 * f_#(σ) = f(σ) when that is nondegenerate, 0 otherwise. Under the based
 * policy images at the basepoint also vanish. Throws when the result fails
 * to commute with the boundaries.
 */
inline ChainMap chain_map(const SimplicialMap& f, ChainPolicy policy = ChainPolicy::unreduced) {
  const auto& X = *f.domain();
  const auto& Y = *f.codomain();
  ChainMap out;
  out.source = chains_for(X, policy);
  out.target = chains_for(Y, policy);
  if (policy == ChainPolicy::based && !f.is_pointed())
    throw std::invalid_argument("chain_map: based chains need a pointed map");
  int lo = out.source.min_degree;
  auto shift_vertex = [&](const SimplicialSet& S, int b) -> int {
    if (policy != ChainPolicy::based) return b;
    int bp = *S.basepoint();
    return b == bp ? -1 : (b > bp ? b - 1 : b);
  };
  for (int deg = lo; deg <= out.source.max_degree(); ++deg) {
    SparseMatrix M(out.target.rank(deg), out.source.rank(deg));
    if (deg < 0) {
      M.add(0, 0, 1);
    } else {
      for (int b = 0; b < static_cast<int>(X.count(deg)); ++b) {
        int col = deg == 0 ? shift_vertex(X, b) : b;
        if (col < 0) continue;
        const auto& img = f.image(deg, b);
        if (!img.nondegenerate()) continue;
        int row = deg == 0 ? shift_vertex(Y, img.base) : img.base;
        if (row < 0) continue;
        M.add(row, col, 1);
      }
    }
    out.components.push_back(std::move(M));
  }
  if (!out.commutes()) throw std::logic_error("chain_map: induced map does not commute with boundaries");
  return out;
}

/// Composite g ∘ f of chain maps.
inline ChainMap compose(const ChainMap& g, const ChainMap& f) {
  ChainMap out;
  out.source = f.source;
  out.target = g.target;
  for (int deg = f.source.min_degree; deg <= f.source.max_degree(); ++deg) out.components.push_back(g.at(deg) * f.at(deg));
  return out;
}

/// cone_n = A_{n-1} ⊕ B_n with ∂(a, b) = (-∂a, φa + ∂b).
inline ChainComplex mapping_cone(const ChainMap& phi) {
  const auto& A = phi.source;
  const auto& B = phi.target;
  if (A.min_degree != B.min_degree) throw std::invalid_argument("mapping_cone: complexes start in different degrees");
  ChainComplex C;
  C.min_degree = A.min_degree;
  int hi = std::max(A.max_degree() + 1, B.max_degree());
  for (int deg = C.min_degree; deg <= hi; ++deg) {
    int a_in = A.rank(deg - 1);
    int b_in = B.rank(deg);
    int a_out = A.rank(deg - 2);
    int b_out = B.rank(deg - 1);
    C.ranks.push_back(a_in + b_in);
    SparseMatrix D(a_out + b_out, a_in + b_in);
    auto dA = A.d(deg - 1);
    auto dB = B.d(deg);
    auto f = phi.at(deg - 1);
    for (int j = 0; j < a_in; ++j) {
      if (a_out > 0)
        for (const auto& [i, v] : dA.columns[j]) D.add(i, j, -v);
      for (const auto& [i, v] : f.columns[j]) D.add(a_out + i, j, v);
    }
    for (int j = 0; j < b_in; ++j)
      for (const auto& [i, v] : dB.columns[j]) D.add(a_out + i, a_in + j, v);
    C.boundary.push_back(std::move(D));
  }
  return C;
}

struct EquivalenceVerdict {
  bool equivalence = false;
  HomologySummary cone;  // certificate: homology of the mapping cone
};

/**
 * f is an HZ-equivalence iff its mapping cone is acyclic. Augmented chains
 * are used when both sides are nonempty.
 */
inline EquivalenceVerdict is_hz_equivalence(const SimplicialMap& f, ChainPolicy policy = ChainPolicy::augmented) {
  if (policy == ChainPolicy::augmented && (f.domain()->empty() || f.codomain()->empty()))
    policy = ChainPolicy::unreduced;
  EquivalenceVerdict out;
  out.cone = homology(mapping_cone(chain_map(f, policy)));
  out.equivalence = out.cone.acyclic();
  return out;
}

}  // namespace comodx
