#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simplicial_set.hpp"

namespace comodx {

/**
 * A simplicial map between finite simplicial sets, given by the image of every
 * nondegenerate simplex. Construction checks f(d_i σ) = d_i f(σ) on all
 * nondegenerate σ unless told not to.
 */
class SimplicialMap {
 public:
  using Images = std::vector<std::vector<SimplexRef>>;

  SimplicialMap() = default;
  SimplicialMap(SSet domain, SSet codomain, Images images, bool check = true);

  const SSet& domain() const { return domain_; }
  const SSet& codomain() const { return codomain_; }
  const Images& images() const { return images_; }
  const SimplexRef& image(int n, int index) const { return images_.at(n).at(index); }

  /// Image of an arbitrary simplex: f(s_w σ) = s_w f(σ).
  SimplexRef operator()(const SimplexRef& s) const {
    return degenerate(s.word, images_.at(s.base_dim()).at(s.base));
  }

  /// Both ends pointed and the basepoint goes to the basepoint.
  bool is_pointed() const;
  void validate() const;

  bool operator==(const SimplicialMap& other) const { return images_ == other.images_; }

 private:
  SSet domain_;
  SSet codomain_;
  Images images_;
};

inline SimplicialMap::SimplicialMap(SSet domain, SSet codomain, Images images, bool check)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  images_.resize(static_cast<std::size_t>(std::max(domain_->dimension() + 1, 0)));
  if (check) validate();
}

inline bool SimplicialMap::is_pointed() const {
  if (!domain_->pointed() || !codomain_->pointed()) return false;
  return codomain_->is_basepoint(image(0, *domain_->basepoint()));
}

inline void SimplicialMap::validate() const {
  const auto& X = *domain_;
  const auto& Y = *codomain_;
  for (int n = 0; n <= X.dimension(); ++n) {
    if (images_[n].size() != X.count(n))
      throw ValidationError("simplicial map: image table has the wrong size in dimension " + std::to_string(n));
    for (int b = 0; b < static_cast<int>(X.count(n)); ++b) {
      const auto& img = images_[n][b];
      if (img.dim != n || !Y.contains(img))
        throw ValidationError("simplicial map: image of '" + X.name(n, b) + "' is not an " + std::to_string(n) +
                              "-simplex of the codomain");
      if (n == 0) continue;
      SimplexRef self = SimplexRef::nondeg(n, b);
      for (int i = 0; i <= n; ++i)
        if ((*this)(X.face(i, self)) != Y.face(i, img))
          throw ValidationError("simplicial map: f(d" + std::to_string(i) + " " + X.name(n, b) + ") != d" +
                                std::to_string(i) + " f(" + X.name(n, b) + ")");
    }
  }
}

inline SimplicialMap identity_map(const SSet& X) {
  SimplicialMap::Images images(X->dimension() + 1);
  for (int n = 0; n <= X->dimension(); ++n)
    for (int b = 0; b < static_cast<int>(X->count(n)); ++b) images[n].push_back(SimplexRef::nondeg(n, b));
  return SimplicialMap(X, X, std::move(images), false);
}

/// g ∘ f
inline SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.codomain() != g.domain() && !f.codomain()->same_structure(*g.domain()))
    throw std::invalid_argument("compose: codomain of f is not the domain of g");
  SimplicialMap::Images images(f.domain()->dimension() + 1);
  for (int n = 0; n <= f.domain()->dimension(); ++n)
    for (const auto& img : f.images()[n]) images[n].push_back(g(img));
  return SimplicialMap(f.domain(), g.codomain(), std::move(images), false);
}

/// The map sending everything to (degeneracies of) one vertex of Y.
inline SimplicialMap constant_map(const SSet& X, const SSet& Y, int vertex) {
  SimplicialMap::Images images(X->dimension() + 1);
  for (int n = 0; n <= X->dimension(); ++n)
    images[n].assign(X->count(n), degenerate_vertex(vertex, n));
  return SimplicialMap(X, Y, std::move(images), false);
}

/// Degreewise injectivity, checked on every simplex (degenerate ones included)
/// up to the domain's dimension, through canonical forms.
inline bool is_mono(const SimplicialMap& f) {
  const auto& X = *f.domain();
  for (int n = 0; n <= X.dimension(); ++n) {
    std::map<SimplexRef, int> seen;
    for (const auto& s : X.all_simplices(n))
      if (!seen.emplace(f(s), 0).second) return false;
  }
  return true;
}

/**
 * Certifies that f is an isomorphism by constructing the candidate inverse
 * from f's image table and checking both composites are identities.
 * Returns the inverse, or nullopt when f is not bijective.
 */
inline std::optional<SimplicialMap> certify_iso(const SimplicialMap& f) {
  const auto& X = *f.domain();
  const auto& Y = *f.codomain();
  if (X.dimension() != Y.dimension()) return std::nullopt;
  SimplicialMap::Images inv(Y.dimension() + 1);
  for (int n = 0; n <= Y.dimension(); ++n) {
    if (X.count(n) != Y.count(n)) return std::nullopt;
    inv[n].assign(Y.count(n), SimplexRef{-1, -1, {}});
    for (int b = 0; b < static_cast<int>(X.count(n)); ++b) {
      const auto& img = f.image(n, b);
      if (!img.nondegenerate() || inv[n][img.base].dim != -1) return std::nullopt;
      inv[n][img.base] = SimplexRef::nondeg(n, b);
    }
  }
  SimplicialMap g;
  try {
    g = SimplicialMap(f.codomain(), f.domain(), std::move(inv));
  } catch (const ValidationError&) {
    return std::nullopt;
  }
  if (!(compose(g, f) == identity_map(f.domain())) || !(compose(f, g) == identity_map(f.codomain())))
    return std::nullopt;
  return g;
}

}  // namespace comodx
