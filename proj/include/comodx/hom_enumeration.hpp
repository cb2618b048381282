#pragma once

#include <functional>
#include <vector>

#include "simplicial_map.hpp"

namespace comodx {

/// Extra constraint on the image of the nondegenerate simplex (n, b).
using ImageFilter = std::function<bool(int n, int b, const SimplexRef& candidate)>;

/**
 * All simplicial maps X → Y satisfying `filter`, by backtracking over the
 * nondegenerate simplices of X in dimension order. Each visited partial
 * assignment costs one unit of `budget`; running out throws BudgetExceeded.
 */
inline std::vector<SimplicialMap> enumerate_maps(const SSet& X, const SSet& Y, const ImageFilter& filter,
                                                 std::size_t budget = 1'000'000) {
  std::vector<std::pair<int, int>> order;
  for (int n = 0; n <= X->dimension(); ++n)
    for (int b = 0; b < static_cast<int>(X->count(n)); ++b) order.push_back({n, b});
  std::vector<std::vector<SimplexRef>> pool(X->dimension() + 1);
  for (int n = 0; n <= X->dimension(); ++n) pool[n] = Y->all_simplices(n);

  SimplicialMap::Images images(X->dimension() + 1);
  for (int n = 0; n <= X->dimension(); ++n) images[n].resize(X->count(n));
  std::vector<SimplicialMap> out;
  std::size_t spent = 0;
  auto image_of = [&](const SimplexRef& s) { return degenerate(s.word, images[s.base_dim()][s.base]); };

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (++spent > budget) throw BudgetExceeded("hom-set enumeration exceeded its budget");
    if (k == order.size()) {
      out.emplace_back(X, Y, images, false);
      return;
    }
    auto [n, b] = order[k];
    const auto& faces = X->simplex(n, b).faces;
    std::vector<SimplexRef> want;
    for (const auto& f : faces) want.push_back(image_of(f));
    for (const auto& cand : pool[n]) {
      bool ok = true;
      for (int i = 0; i < static_cast<int>(want.size()) && ok; ++i) ok = Y->face(i, cand) == want[i];
      if (!ok || (filter && !filter(n, b, cand))) continue;
      images[n][b] = cand;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

inline std::vector<SimplicialMap> enumerate_maps(const SSet& X, const SSet& Y, std::size_t budget = 1'000'000) {
  return enumerate_maps(X, Y, ImageFilter{}, budget);
}

/// Pointed maps only.
inline std::vector<SimplicialMap> enumerate_pointed_maps(const SSet& X, const SSet& Y, std::size_t budget = 1'000'000) {
  int xb = X->basepoint().value();
  return enumerate_maps(
      X, Y,
      [&](int n, int b, const SimplexRef& c) { return n > 0 || b != xb || Y->is_basepoint(c); }, budget);
}

}  // namespace comodx
