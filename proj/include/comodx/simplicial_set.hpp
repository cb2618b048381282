#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "config.hpp"
#include "degeneracy.hpp"

namespace comodx {

/**
 * A simplex in Eilenberg–Zilber form: the degeneracy `word` applied to the
 * nondegenerate simplex `base` of dimension dim - |word|.
 */
struct SimplexRef {
  int dim = 0;
  int base = 0;
  DegeneracyWord word;

  int base_dim() const { return dim - static_cast<int>(word.size()); }
  bool nondegenerate() const { return word.empty(); }

  static SimplexRef nondeg(int dim, int base) { return SimplexRef{dim, base, {}}; }

  auto operator<=>(const SimplexRef&) const = default;
};

/// Applies the degeneracy word w on top of s.
inline SimplexRef degenerate(const DegeneracyWord& w, const SimplexRef& s) {
  return SimplexRef{s.dim + static_cast<int>(w.size()), s.base, w.then_after(s.word)};
}

inline SimplexRef degeneracy(int j, const SimplexRef& s) {
  if (j < 0 || j > s.dim) throw std::out_of_range("degeneracy index out of range");
  return SimplexRef{s.dim + 1, s.base, s.word.prepend(j)};
}

/// Total degeneracy s_{n-1} ... s_0 of a vertex, landing in dimension n.
inline SimplexRef degenerate_vertex(int vertex, int n) {
  std::vector<int> ops;
  for (int i = n - 1; i >= 0; --i) ops.push_back(i);
  return SimplexRef{n, vertex, DegeneracyWord::from_operators(std::move(ops))};
}

struct NondegenerateSimplex {
  std::string name;
  std::vector<SimplexRef> faces;  // d_0 .. d_n, empty for vertices
};

/**
 * A finite simplicial set stored as its table of nondegenerate simplices.
 * Degenerate simplices are never materialized; they are addressed by SimplexRef.
 * Build with add_simplex (dimension by dimension), then call validate().
 */
class SimplicialSet {
 public:
  SimplicialSet() = default;

  /// Appends a nondegenerate simplex of dimension faces.size()-1 (or 0 when
  /// faces is empty) and returns its index within that dimension.
  int add_simplex(int dim, std::string name, std::vector<SimplexRef> faces = {});
  int add_vertex(std::string name) { return add_simplex(0, std::move(name)); }
  void set_basepoint(std::optional<int> vertex) { basepoint_ = vertex; }

  /// Highest dimension holding a nondegenerate simplex, -1 when empty.
  int dimension() const { return static_cast<int>(levels_.size()) - 1; }
  bool empty() const { return levels_.empty(); }
  std::size_t count(int n) const {
    return n >= 0 && n < static_cast<int>(levels_.size()) ? levels_[n].size() : 0;
  }
  std::size_t total_nondegenerate() const {
    std::size_t total = 0;
    for (const auto& level : levels_) total += level.size();
    return total;
  }
  std::vector<std::size_t> counts() const {
    std::vector<std::size_t> out;
    for (const auto& level : levels_) out.push_back(level.size());
    return out;
  }
  /// Number of all n-simplices, degenerate ones included.
  std::size_t count_all(int n) const;

  const NondegenerateSimplex& simplex(int n, int index) const { return levels_.at(n).at(index); }
  const std::string& name(int n, int index) const { return simplex(n, index).name; }

  const std::optional<int>& basepoint() const { return basepoint_; }
  bool pointed() const { return basepoint_.has_value(); }
  bool is_basepoint(const SimplexRef& s) const {
    return basepoint_ && s.base_dim() == 0 && s.base == *basepoint_;
  }
  SimplexRef basepoint_at(int n) const { return degenerate_vertex(basepoint_.value(), n); }

  /// d_i s, via d_i s_j rewriting followed by a face-table lookup.
  SimplexRef face(int i, const SimplexRef& s) const;
  /// Vertex k of s (k-th vertex in the ordering of Δ[n]).
  int vertex(const SimplexRef& s, int k) const;
  /// All n-simplices in canonical order: by base dimension descending, base, word.
  std::vector<SimplexRef> all_simplices(int n) const;
  bool contains(const SimplexRef& s) const;

  /// Throws ValidationError naming the offending simplex when a stored face
  /// does not resolve or d_i d_j = d_{j-1} d_i fails for some i < j.
  void validate() const;

  std::string ref_name(const SimplexRef& s) const;
  /// Structural equality: same face tables and basepoint; names ignored.
  bool same_structure(const SimplicialSet& other) const;

 private:
  std::vector<std::vector<NondegenerateSimplex>> levels_;
  std::optional<int> basepoint_;
};

using SSet = std::shared_ptr<const SimplicialSet>;

inline SSet share(SimplicialSet x) { return std::make_shared<const SimplicialSet>(std::move(x)); }

inline std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

inline int SimplicialSet::add_simplex(int dim, std::string name, std::vector<SimplexRef> faces) {
  if (dim < 0) throw std::invalid_argument("add_simplex: negative dimension");
  if (dim == 0 && !faces.empty()) throw std::invalid_argument("add_simplex: a vertex has no faces");
  if (dim > 0 && static_cast<int>(faces.size()) != dim + 1)
    throw std::invalid_argument("add_simplex: an n-simplex needs n+1 faces");
  check_dimension(dim, "add_simplex");
  if (static_cast<int>(levels_.size()) <= dim) levels_.resize(dim + 1);
  levels_[dim].push_back(NondegenerateSimplex{std::move(name), std::move(faces)});
  return static_cast<int>(levels_[dim].size()) - 1;
}

inline std::size_t SimplicialSet::count_all(int n) const {
  std::size_t total = 0;
  for (int k = 0; k <= n && k <= dimension(); ++k) total += count(k) * binomial(n, n - k);
  return total;
}

inline SimplexRef SimplicialSet::face(int i, const SimplexRef& s) const {
  if (s.dim < 1 || i < 0 || i > s.dim) throw std::out_of_range("face index out of range");
  std::vector<int> outer;
  int cur = i;
  const auto& w = s.word.indices();
  for (std::size_t k = 0; k < w.size(); ++k) {
    int j = w[k];
    if (cur < j) {
      outer.push_back(j - 1);
    } else if (cur == j || cur == j + 1) {
      std::vector<int> ops = outer;
      ops.insert(ops.end(), w.begin() + static_cast<long>(k) + 1, w.end());
      return SimplexRef{s.dim - 1, s.base, normalize_word(std::move(ops))};
    } else {
      outer.push_back(j);
      --cur;
    }
  }
  const auto& f = levels_.at(s.base_dim()).at(s.base).faces.at(cur);
  return degenerate(normalize_word(std::move(outer)), f);
}

inline int SimplicialSet::vertex(const SimplexRef& s, int k) const {
  SimplexRef cur = s;
  // drop vertices above k, then those below
  for (int d = cur.dim; d > k; --d) cur = face(d, cur);
  for (int d = 0; d < k; ++d) cur = face(0, cur);
  return cur.base;
}

inline std::vector<SimplexRef> SimplicialSet::all_simplices(int n) const {
  std::vector<SimplexRef> out;
  for (int k = std::min(n, dimension()); k >= 0; --k) {
    auto words = canonical_words(n, n - k);
    for (int b = 0; b < static_cast<int>(count(k)); ++b)
      for (const auto& w : words) out.push_back(SimplexRef{n, b, w});
  }
  return out;
}

inline bool SimplicialSet::contains(const SimplexRef& s) const {
  int k = s.base_dim();
  if (k < 0 || s.base < 0 || s.base >= static_cast<int>(count(k))) return false;
  const auto& w = s.word.indices();
  for (std::size_t m = 0; m < w.size(); ++m) {
    // s_{w[m]} is applied to a simplex of dimension k + (|w| - m - 1)
    int target = k + static_cast<int>(w.size() - m - 1);
    if (w[m] < 0 || w[m] > target) return false;
    if (m + 1 < w.size() && w[m] <= w[m + 1]) return false;
  }
  return true;
}

inline std::string SimplicialSet::ref_name(const SimplexRef& s) const {
  std::string base = contains(s) ? name(s.base_dim(), s.base) : std::string("?");
  return s.word.empty() ? base : s.word.to_string() + "(" + base + ")";
}

inline void SimplicialSet::validate() const {
  if (basepoint_ && (*basepoint_ < 0 || *basepoint_ >= static_cast<int>(count(0))))
    throw ValidationError("basepoint is not a vertex");
  for (int n = 1; n <= dimension(); ++n) {
    for (int b = 0; b < static_cast<int>(count(n)); ++b) {
      const auto& sx = levels_[n][b];
      for (std::size_t i = 0; i < sx.faces.size(); ++i) {
        const auto& f = sx.faces[i];
        if (f.dim != n - 1 || !contains(f))
          throw ValidationError("simplex '" + sx.name + "': face d" + std::to_string(i) +
                                " does not resolve to an existing (n-1)-simplex");
      }
      SimplexRef self = SimplexRef::nondeg(n, b);
      if (n < 2) continue;
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
          if (face(i, face(j, self)) != face(j - 1, face(i, self)))
            throw ValidationError("simplex '" + sx.name + "' violates d" + std::to_string(i) + "d" +
                                  std::to_string(j) + " = d" + std::to_string(j - 1) + "d" +
                                  std::to_string(i));
        }
    }
  }
}

inline bool SimplicialSet::same_structure(const SimplicialSet& other) const {
  if (basepoint_ != other.basepoint_ || levels_.size() != other.levels_.size()) return false;
  for (std::size_t n = 0; n < levels_.size(); ++n) {
    if (levels_[n].size() != other.levels_[n].size()) return false;
    for (std::size_t b = 0; b < levels_[n].size(); ++b)
      if (levels_[n][b].faces != other.levels_[n][b].faces) return false;
  }
  return true;
}

}  // namespace comodx
