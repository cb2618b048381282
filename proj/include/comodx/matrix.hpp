#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace comodx {

using Integer = boost::multiprecision::cpp_int;

/// Row-major dense integer matrix.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Integer> a;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  static DenseMatrix identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static DenseMatrix from_rows(const std::vector<std::vector<long long>>& rs) {
    int r = static_cast<int>(rs.size());
    int c = r ? static_cast<int>(rs[0].size()) : 0;
    DenseMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = rs[i].at(j);
    return m;
  }

  Integer& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Integer& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  bool operator==(const DenseMatrix&) const = default;
};

inline DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix product: shape mismatch");
  DenseMatrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) out(i, j) += x(i, k) * y(k, j);
    }
  return out;
}

/// Determinant by fraction-free Bareiss elimination.
inline Integer determinant(DenseMatrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: matrix is not square");
  int n = m.rows;
  Integer sign = 1;
  Integer prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return n == 0 ? Integer(1) : sign * m(n - 1, n - 1);
}

/// Column-major sparse integer matrix; each column sorted by row, no zero entries.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, Integer>>> columns;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), columns(c) {}

  /// Adds v to entry (i, j). Columns stay sorted.
  void add(int i, int j, const Integer& v) {
    if (v == 0) return;
    auto& col = columns.at(j);
    auto it = std::lower_bound(col.begin(), col.end(), i, [](const auto& e, int r) { return e.first < r; });
    if (it != col.end() && it->first == i) {
      it->second += v;
      if (it->second == 0) col.erase(it);
    } else {
      col.insert(it, {i, v});
    }
  }
  Integer at(int i, int j) const {
    for (const auto& [r, v] : columns.at(j))
      if (r == i) return v;
    return 0;
  }
  bool is_zero() const {
    for (const auto& c : columns)
      if (!c.empty()) return false;
    return true;
  }
  DenseMatrix dense() const {
    DenseMatrix d(rows, cols);
    for (int j = 0; j < cols; ++j)
      for (const auto& [i, v] : columns[j]) d(i, j) = v;
    return d;
  }
  bool operator==(const SparseMatrix&) const = default;
};

inline SparseMatrix operator*(const SparseMatrix& x, const SparseMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("sparse product: shape mismatch");
  SparseMatrix out(x.rows, y.cols);
  for (int j = 0; j < y.cols; ++j) {
    std::map<int, Integer> acc;
    for (const auto& [k, v] : y.columns[j])
      for (const auto& [i, w] : x.columns[k]) acc[i] += w * v;
    for (const auto& [i, v] : acc)
      if (v != 0) out.columns[j].push_back({i, v});
  }
  return out;
}

struct SmithForm {
  std::vector<Integer> factors;  // nonzero invariant factors, each dividing the next
  int rank = 0;
  DenseMatrix U;  // rows × rows, unimodular
  DenseMatrix V;  // cols × cols, unimodular
  DenseMatrix D;  // U * M * V
};

/**
 * Smith normal form by repeated reduction at the entry of smallest nonzero
 * absolute value. With `transforms` false, U and V are left empty.
 */
inline SmithForm smith_normal_form(DenseMatrix M, bool transforms = true) {
  SmithForm out;
  int m = M.rows;
  int n = M.cols;
  DenseMatrix U = transforms ? DenseMatrix::identity(m) : DenseMatrix();
  DenseMatrix V = transforms ? DenseMatrix::identity(n) : DenseMatrix();
  auto swap_rows = [&](int i, int k) {
    if (i == k) return;
    for (int j = 0; j < n; ++j) std::swap(M(i, j), M(k, j));
    if (transforms)
      for (int j = 0; j < m; ++j) std::swap(U(i, j), U(k, j));
  };
  auto swap_cols = [&](int j, int k) {
    if (j == k) return;
    for (int i = 0; i < m; ++i) std::swap(M(i, j), M(i, k));
    if (transforms)
      for (int i = 0; i < n; ++i) std::swap(V(i, j), V(i, k));
  };
  // row_i += q * row_k
  auto add_row = [&](int i, int k, const Integer& q) {
    for (int j = 0; j < n; ++j)
      if (M(k, j) != 0) M(i, j) += q * M(k, j);
    if (transforms)
      for (int j = 0; j < m; ++j)
        if (U(k, j) != 0) U(i, j) += q * U(k, j);
  };
  auto add_col = [&](int j, int k, const Integer& q) {
    for (int i = 0; i < m; ++i)
      if (M(i, k) != 0) M(i, j) += q * M(i, k);
    if (transforms)
      for (int i = 0; i < n; ++i)
        if (V(i, k) != 0) V(i, j) += q * V(i, k);
  };

  int t = 0;
  while (t < m && t < n) {
    int pi = -1, pj = -1;
    Integer best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (M(i, j) != 0 && (pi < 0 || abs(M(i, j)) < best)) {
          best = abs(M(i, j));
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (M(i, t) == 0) continue;
        add_row(i, t, -(M(i, t) / M(t, t)));
        if (M(i, t) != 0) {
          swap_rows(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (M(t, j) == 0) continue;
        add_col(j, t, -(M(t, j) / M(t, t)));
        if (M(t, j) != 0) {
          swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility: pull a non-multiple into the pivot row
      for (int i = t + 1; i < m && clean; ++i)
        for (int j = t + 1; j < n; ++j)
          if (M(i, j) % M(t, t) != 0) {
            add_row(t, i, 1);
            clean = false;
            break;
          }
    }
    if (M(t, t) < 0) {
      for (int j = 0; j < n; ++j) M(t, j) = -M(t, j);
      if (transforms)
        for (int j = 0; j < m; ++j) U(t, j) = -U(t, j);
    }
    out.factors.push_back(M(t, t));
    ++t;
  }
  out.rank = static_cast<int>(out.factors.size());
  out.U = std::move(U);
  out.V = std::move(V);
  out.D = std::move(M);
  return out;
}

/**
 * Nonzero invariant factors of a sparse matrix: unit pivots are eliminated
 * by column operations first, the remainder goes through dense Smith form.
 */
inline std::vector<Integer> invariant_factors(const SparseMatrix& S) {
  std::vector<std::map<int, Integer>> cols(S.cols);
  std::vector<std::set<int>> rows(S.rows);
  for (int j = 0; j < S.cols; ++j)
    for (const auto& [i, v] : S.columns[j]) {
      cols[j][i] = v;
      rows[i].insert(j);
    }
  std::size_t units = 0;
  std::vector<bool> col_alive(S.cols, true);
  std::vector<bool> row_alive(S.rows, true);
  while (true) {
    int pr = -1, pc = -1;
    std::size_t best = 0;
    for (int j = 0; j < S.cols; ++j) {
      if (!col_alive[j]) continue;
      for (const auto& [i, v] : cols[j]) {
        if (v != 1 && v != -1) continue;
        std::size_t cost = (rows[i].size() - 1) * (cols[j].size() - 1);
        if (pr < 0 || cost < best) {
          best = cost;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;
    Integer u = cols[pc].at(pr);
    std::vector<int> others(rows[pr].begin(), rows[pr].end());
    for (int c2 : others) {
      if (c2 == pc) continue;
      Integer q = -(cols[c2].at(pr) * u);
      for (const auto& [i, v] : cols[pc]) {
        Integer nv = cols[c2][i] + q * v;
        if (nv == 0) {
          cols[c2].erase(i);
          rows[i].erase(c2);
        } else {
          cols[c2][i] = nv;
          rows[i].insert(c2);
        }
      }
    }
    for (const auto& [i, v] : cols[pc]) rows[i].erase(pc);
    cols[pc].clear();
    col_alive[pc] = false;
    row_alive[pr] = false;
    ++units;
  }
  std::vector<int> live_rows, live_cols;
  for (int i = 0; i < S.rows; ++i)
    if (row_alive[i] && !rows[i].empty()) live_rows.push_back(i);
  for (int j = 0; j < S.cols; ++j)
    if (col_alive[j] && !cols[j].empty()) live_cols.push_back(j);
  std::vector<Integer> out(units, Integer(1));
  if (!live_rows.empty() && !live_cols.empty()) {
    std::map<int, int> rpos;
    for (int k = 0; k < static_cast<int>(live_rows.size()); ++k) rpos[live_rows[k]] = k;
    DenseMatrix D(static_cast<int>(live_rows.size()), static_cast<int>(live_cols.size()));
    for (int k = 0; k < static_cast<int>(live_cols.size()); ++k)
      for (const auto& [i, v] : cols[live_cols[k]]) D(rpos.at(i), k) = v;
    auto snf = smith_normal_form(std::move(D), false);
    out.insert(out.end(), snf.factors.begin(), snf.factors.end());
  }
  return out;
}

}  // namespace comodx
