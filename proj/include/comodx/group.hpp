#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "homology.hpp"
#include "matrix.hpp"
#include "simplicial_set.hpp"

namespace comodx {

/// A word in a free group: letter +(g+1) is generator g, -(g+1) its inverse.
using Word = std::vector<int>;

inline Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int a : w) {
    if (a == 0) throw std::invalid_argument("word: letter 0");
    if (!out.empty() && out.back() == -a)
      out.pop_back();
    else
      out.push_back(a);
  }
  return out;
}

inline Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& a : out) a = -a;
  return out;
}

inline Word multiply(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

inline Word multiply(const Word& a, const Word& b, const Word& c) { return multiply(multiply(a, b), c); }

inline bool is_reduced(const Word& w) { return free_reduce(w) == w; }

inline std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "e";
  std::string out;
  for (int a : w) {
    if (!out.empty()) out += " ";
    out += names.at(std::abs(a) - 1);
    if (a < 0) out += "^-1";
  }
  return out;
}

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::string to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ", " : "") + generators[i];
    out += " |";
    for (std::size_t i = 0; i < relators.size(); ++i)
      out += (i ? ", " : " ") + word_to_string(relators[i], generators);
    return out + ">";
  }
};

/// Abelianization from the exponent-sum matrix of the relators.
inline AbelianGroup abelianization(const GroupPresentation& P) {
  int k = static_cast<int>(P.generators.size());
  SparseMatrix M(k, static_cast<int>(P.relators.size()));
  for (std::size_t r = 0; r < P.relators.size(); ++r)
    for (int a : P.relators[r]) M.add(std::abs(a) - 1, static_cast<int>(r), a > 0 ? 1 : -1);
  AbelianGroup out;
  auto factors = invariant_factors(M);
  out.rank = k - static_cast<int>(factors.size());
  for (auto f : factors) {
    if (f < 0) f = -f;
    if (f != 1) out.torsion.push_back(f);
  }
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

// ---------------------------------------------------------------------------
// Edge-path group
// ---------------------------------------------------------------------------

struct EdgePathGroup {
  GroupPresentation presentation;
  int basepoint = 0;
  std::vector<bool> tree;           // per nondegenerate edge
  std::vector<int> edge_generator;  // -1 for tree edges

  /// The word of an edge: empty for degenerate and tree edges.
  Word edge_word(const SimplexRef& e) const {
    if (!e.nondegenerate()) return {};
    int g = edge_generator.at(e.base);
    return g < 0 ? Word{} : Word{g + 1};
  }
};

inline bool is_connected(const SimplicialSet& X) {
  if (X.empty() || X.count(0) == 0) return false;
  std::vector<bool> seen(X.count(0), false);
  std::vector<int> queue{0};
  seen[0] = true;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int v = queue[h];
    for (int e = 0; e < static_cast<int>(X.dimension() >= 1 ? X.count(1) : 0); ++e) {
      const auto& f = X.simplex(1, e).faces;
      int a = f[1].base, b = f[0].base;
      for (auto [from, to] : {std::pair{a, b}, std::pair{b, a}})
        if (from == v && !seen[to]) {
          seen[to] = true;
          queue.push_back(to);
        }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

/**
 * Edge-path presentation of π₁(X, v). The spanning tree comes from a BFS that
 * visits edges in index order; each non-tree edge is a generator and each
 * nondegenerate 2-simplex σ gives the relator g(d₂σ) g(d₀σ) g(d₁σ)⁻¹.
 */
inline EdgePathGroup fundamental_group(const SimplicialSet& X, std::optional<int> basepoint = {}) {
  if (!is_connected(X)) throw ValidationError("fundamental group: simplicial set is not connected");
  EdgePathGroup out;
  out.basepoint = basepoint.value_or(X.basepoint().value_or(0));
  if (out.basepoint < 0 || out.basepoint >= static_cast<int>(X.count(0)))
    throw std::invalid_argument("fundamental group: basepoint is not a vertex");
  std::size_t edges = X.dimension() >= 1 ? X.count(1) : 0;
  out.tree.assign(edges, false);
  std::vector<bool> seen(X.count(0), false);
  std::vector<int> queue{out.basepoint};
  seen[out.basepoint] = true;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int v = queue[h];
    for (std::size_t e = 0; e < edges; ++e) {
      const auto& f = X.simplex(1, static_cast<int>(e)).faces;
      int src = f[1].base, dst = f[0].base;
      int other = src == v ? dst : (dst == v ? src : -1);
      if (other < 0 || seen[other]) continue;
      seen[other] = true;
      out.tree[e] = true;
      queue.push_back(other);
    }
  }
  out.edge_generator.assign(edges, -1);
  for (std::size_t e = 0; e < edges; ++e) {
    if (out.tree[e]) continue;
    out.edge_generator[e] = static_cast<int>(out.presentation.generators.size());
    out.presentation.generators.push_back(X.name(1, static_cast<int>(e)));
  }
  if (X.dimension() >= 2)
    for (int t = 0; t < static_cast<int>(X.count(2)); ++t) {
      const auto& f = X.simplex(2, t).faces;
      auto r = multiply(out.edge_word(f[2]), out.edge_word(f[0]), inverse(out.edge_word(f[1])));
      if (!r.empty()) out.presentation.relators.push_back(r);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Coset enumeration
// ---------------------------------------------------------------------------

/// A finite group as the regular right action of its generators on its elements.
struct FiniteGroup {
  int generators = 0;
  std::vector<std::vector<int>> action;  // action[e][2g] = e·g, action[e][2g+1] = e·g⁻¹
  std::vector<Word> representative;      // a word for each element; element 0 is the identity

  int order() const { return static_cast<int>(action.size()); }
  int act(int e, const Word& w) const {
    for (int a : w) e = action[e][a > 0 ? 2 * (a - 1) : 2 * (-a - 1) + 1];
    return e;
  }
  int element(const Word& w) const { return act(0, w); }
  int multiply(int a, int b) const { return act(a, representative[b]); }
  int inverse(int a) const { return element(comodx::inverse(representative[a])); }
};

struct CosetResult {
  std::optional<FiniteGroup> group;
  std::size_t cosets_defined = 0;
  bool exceeded() const { return !group.has_value(); }
};

namespace detail {

class ToddCoxeter {
 public:
  ToddCoxeter(const GroupPresentation& P, std::size_t bound) : cols_(2 * static_cast<int>(P.generators.size())), bound_(bound) {
    for (const auto& r : P.relators) {
      std::vector<int> w;
      for (int a : free_reduce(r)) w.push_back(a > 0 ? 2 * (a - 1) : 2 * (-a - 1) + 1);
      if (!w.empty()) rels_.push_back(std::move(w));
    }
    new_coset();
  }

  bool run() {
    for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
      for (const auto& r : rels_) {
        if (!live(c)) break;
        if (!scan_and_fill(c, r)) return false;
      }
      for (int x = 0; x < cols_ && live(c); ++x)
        if (table_[c][x] < 0 && !define(c, x)) return false;
    }
    return true;
  }

  std::size_t defined() const { return table_.size(); }

  FiniteGroup result() const {
    std::vector<int> renum(table_.size(), -1);
    int k = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (parent_[c] == static_cast<int>(c)) renum[c] = k++;
    FiniteGroup G;
    G.generators = cols_ / 2;
    G.action.assign(k, std::vector<int>(cols_, -1));
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (renum[c] < 0) continue;
      for (int x = 0; x < cols_; ++x) G.action[renum[c]][x] = renum[table_[c][x]];
    }
    G.representative.assign(k, {});
    std::vector<bool> seen(k, false);
    std::vector<int> queue{0};
    seen[0] = true;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int e = queue[h];
      for (int x = 0; x < cols_; ++x) {
        int t = G.action[e][x];
        if (seen[t]) continue;
        seen[t] = true;
        G.representative[t] = G.representative[e];
        G.representative[t].push_back(x % 2 == 0 ? x / 2 + 1 : -(x / 2 + 1));
        queue.push_back(t);
      }
    }
    return G;
  }

 private:
  int cols_;
  std::size_t bound_;
  std::vector<std::vector<int>> rels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;

  static int inv(int x) { return x ^ 1; }
  bool live(int c) const { return parent_[c] == c; }

  int new_coset() {
    table_.emplace_back(cols_, -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  bool define(int c, int x) {
    if (table_.size() >= bound_) return false;
    int d = new_coset();
    table_[c][x] = d;
    table_[d][inv(x)] = c;
    return true;
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      int n = parent_[c];
      parent_[c] = r;
      c = n;
    }
    return r;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int e = queue[h];
      for (int x = 0; x < cols_; ++x) {
        int f = table_[e][x];
        if (f < 0) continue;
        if (table_[f][inv(x)] == e) table_[f][inv(x)] = -1;
        int e1 = rep(e), f1 = rep(f);
        if (table_[e1][x] >= 0)
          merge(f1, table_[e1][x], queue);
        else if (table_[f1][inv(x)] >= 0)
          merge(e1, table_[f1][inv(x)], queue);
        else {
          table_[e1][x] = f1;
          table_[f1][inv(x)] = e1;
        }
      }
    }
  }

  bool scan_and_fill(int c, const std::vector<int>& w) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && table_[f][w[i]] >= 0) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && table_[b][inv(w[j])] >= 0) b = table_[b][inv(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][inv(w[i])] = f;
        return true;
      }
      if (!define(f, w[i])) return false;
    }
  }
};

}  // namespace detail

/// Todd–Coxeter over the trivial subgroup (HLT strategy); gives up after `bound` coset definitions.
inline CosetResult coset_enumeration(const GroupPresentation& P, std::size_t bound = 10'000) {
  detail::ToddCoxeter tc(P, bound);
  CosetResult out;
  bool done = tc.run();
  out.cosets_defined = tc.defined();
  if (done) out.group = tc.result();
  return out;
}

/// Every generator column is a permutation and every relator acts trivially.
inline bool validate_group(const FiniteGroup& G, const GroupPresentation& P) {
  int n = G.order();
  for (int x = 0; x < 2 * G.generators; ++x) {
    std::vector<bool> hit(n, false);
    for (int e = 0; e < n; ++e) {
      int t = G.action[e][x];
      if (t < 0 || t >= n || hit[t] || G.action[t][x ^ 1] != e) return false;
      hit[t] = true;
    }
  }
  for (int e = 0; e < n; ++e) {
    if (G.element(G.representative[e]) != e) return false;
    for (const auto& r : P.relators)
      if (G.act(e, r) != e) return false;
  }
  return true;
}

}  // namespace comodx
