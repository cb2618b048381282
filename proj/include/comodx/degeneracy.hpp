#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace comodx {

/**
 * An iterated degeneracy operator s_{i_1} s_{i_2} ... s_{i_k}, applied right to
 * left. The canonical form has i_1 > i_2 > ... > i_k; every composite of
 * degeneracies has exactly one such form.
 */
class DegeneracyWord {
 public:
  DegeneracyWord() = default;

  /// Builds the canonical word for the composite s_{ops[0]} s_{ops[1]} ... .
  static DegeneracyWord from_operators(std::vector<int> ops);

  const std::vector<int>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(int i) const { return std::find(indices_.begin(), indices_.end(), i) != indices_.end(); }

  /// s_j ∘ this
  DegeneracyWord prepend(int j) const;
  /// this ∘ other: apply other first, then this.
  DegeneracyWord then_after(const DegeneracyWord& other) const;

  std::string to_string() const;

  auto operator<=>(const DegeneracyWord&) const = default;

 private:
  std::vector<int> indices_;
};

/// Rewrites s_i s_j -> s_{j+1} s_i (i <= j) until the word is strictly decreasing.
inline DegeneracyWord normalize_word(std::vector<int> ops) {
  for (int op : ops)
    if (op < 0) throw std::invalid_argument("normalize_word: negative degeneracy index");
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < ops.size(); ++k) {
      if (ops[k] <= ops[k + 1]) {
        int i = ops[k];
        int j = ops[k + 1];
        ops[k] = j + 1;
        ops[k + 1] = i;
        changed = true;
      }
    }
  }
  return DegeneracyWord::from_operators(std::move(ops));
}

inline DegeneracyWord DegeneracyWord::from_operators(std::vector<int> ops) {
  DegeneracyWord w;
  bool canonical = std::is_sorted(ops.begin(), ops.end(), std::greater<>()) &&
                   std::adjacent_find(ops.begin(), ops.end()) == ops.end();
  if (!canonical) return normalize_word(std::move(ops));
  w.indices_ = std::move(ops);
  return w;
}

inline DegeneracyWord DegeneracyWord::prepend(int j) const {
  std::vector<int> ops;
  ops.reserve(indices_.size() + 1);
  ops.push_back(j);
  ops.insert(ops.end(), indices_.begin(), indices_.end());
  return normalize_word(std::move(ops));
}

inline DegeneracyWord DegeneracyWord::then_after(const DegeneracyWord& other) const {
  std::vector<int> ops = indices_;
  ops.insert(ops.end(), other.indices_.begin(), other.indices_.end());
  return normalize_word(std::move(ops));
}

inline std::string DegeneracyWord::to_string() const {
  std::string out;
  for (int i : indices_) out += "s" + std::to_string(i);
  return out;
}

/**
 * Given a canonical word `word` and a canonical sub-word `common` (as index
 * sets, common ⊆ word), returns the canonical w' with s_common ∘ s_{w'} = s_word.
 */
inline DegeneracyWord strip_common(const DegeneracyWord& word, const DegeneracyWord& common) {
  std::vector<int> rest;
  for (int j : word.indices()) {
    if (common.contains(j)) continue;
    int shift = 0;
    for (int c : common.indices())
      if (c < j) ++shift;
    rest.push_back(j - shift);
  }
  return DegeneracyWord::from_operators(std::move(rest));
}

/// Index-set intersection of two canonical words.
inline DegeneracyWord common_part(const DegeneracyWord& a, const DegeneracyWord& b) {
  std::vector<int> out;
  for (int i : a.indices())
    if (b.contains(i)) out.push_back(i);
  return DegeneracyWord::from_operators(std::move(out));
}

/// All canonical words of length `length` that map dimension dim-length to dim,
/// i.e. strictly decreasing subsets of {0, ..., dim-1}. Deterministic order.
inline std::vector<DegeneracyWord> canonical_words(int dim, int length) {
  std::vector<DegeneracyWord> out;
  if (length < 0 || length > dim) return out;
  // enumerate combinations of {0..dim-1} in lexicographic order, stored decreasing
  std::vector<int> comb(length);
  for (int i = 0; i < length; ++i) comb[i] = i;
  while (true) {
    std::vector<int> dec(comb.rbegin(), comb.rend());
    out.push_back(DegeneracyWord::from_operators(std::move(dec)));
    int k = length - 1;
    while (k >= 0 && comb[k] == dim - length + k) --k;
    if (k < 0) break;
    ++comb[k];
    for (int m = k + 1; m < length; ++m) comb[m] = comb[m - 1] + 1;
  }
  return out;
}

}  // namespace comodx
