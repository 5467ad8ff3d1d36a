#pragma once

#include <cassert>
#include <cstdlib>
#include <vector>

#include "rational.hpp"

namespace prolrig {

using RatMat = std::vector<std::vector<Rat>>;
using IntMat = std::vector<std::vector<Int>>;

/// In-place reduced row echelon form. Returns pivot column per row (echelon order).
inline std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    Rat inv = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(pivots.size());
  return pivots;
}

inline int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

/// Kernel basis of the row-equation system m x = 0 (m given as rows of equations).
inline RatMat kernel_basis(RatMat m, int ncols) {
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  RatMat basis;
  for (int c = 0; c < ncols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Membership of v in the rational row space of m.
inline bool in_row_space(const RatMat& m, const std::vector<Rat>& v) {
  RatMat red = m;
  std::vector<int> pivots = rref(red);
  std::vector<Rat> w = v;
  for (size_t i = 0; i < pivots.size(); ++i) {
    Rat f = w[pivots[i]];
    if (f == 0) continue;
    for (size_t j = 0; j < w.size(); ++j) w[j] -= f * red[i][j];
  }
  for (const Rat& x : w)
    if (x != 0) return false;
  return true;
}

/// Row-style Hermite normal form over Z; returns the reduced row lattice basis.
inline IntMat hermite(IntMat m) {
  if (m.empty()) return m;
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    // euclidean elimination in column c on rows >= r
    while (true) {
      int sel = -1;
      for (int i = r; i < static_cast<int>(m.size()); ++i)
        if (m[i][c] != 0 && (sel < 0 || abs(m[i][c]) < abs(m[sel][c]))) sel = i;
      if (sel < 0) break;
      std::swap(m[r], m[sel]);
      bool clean = true;
      for (int i = r + 1; i < static_cast<int>(m.size()); ++i) {
        if (m[i][c] == 0) continue;
        Int q = m[i][c] / m[r][c];
        for (int j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (int j = 0; j < cols; ++j) m[r][j] = -m[r][j];
    for (int i = 0; i < r; ++i) {
      // reduce entries above the pivot into canonical range
      Int q = m[i][c] / m[r][c];
      if (m[i][c] - q * m[r][c] < 0) q -= 1;
      if (q != 0)
        for (int j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

/// Membership of v in the integer row lattice of m (m need not be in HNF).
inline bool in_lattice(const IntMat& m, const std::vector<Int>& v) {
  IntMat h = hermite(m);
  std::vector<Int> w = v;
  const int cols = static_cast<int>(v.size());
  size_t row = 0;
  for (int c = 0; c < cols; ++c) {
    if (row < h.size() && h[row][c] != 0) {
      if (w[c] % h[row][c] == 0) {
        Int q = w[c] / h[row][c];
        for (int j = 0; j < cols; ++j) w[j] -= q * h[row][j];
      }
      ++row;
    }
    if (w[c] != 0) return false;
  }
  return true;
}

struct SmithForm {
  IntMat u, v, d;  // u * a * v = d, u and v unimodular, d diagonal
  std::vector<Int> diag;
};

/// Smith normal form with transforms.
inline SmithForm smith(IntMat a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  SmithForm s;
  s.u.assign(rows, std::vector<Int>(rows, 0));
  s.v.assign(cols, std::vector<Int>(cols, 0));
  for (int i = 0; i < rows; ++i) s.u[i][i] = 1;
  for (int i = 0; i < cols; ++i) s.v[i][i] = 1;
  auto row_op = [&](int i, int j, const Int& q) {  // row_i -= q*row_j
    for (int c = 0; c < cols; ++c) a[i][c] -= q * a[j][c];
    for (int c = 0; c < rows; ++c) s.u[i][c] -= q * s.u[j][c];
  };
  auto col_op = [&](int i, int j, const Int& q) {  // col_i -= q*col_j
    for (int r = 0; r < rows; ++r) a[r][i] -= q * a[r][j];
    for (int r = 0; r < cols; ++r) s.v[r][i] -= q * s.v[r][j];
  };
  auto row_swap = [&](int i, int j) { std::swap(a[i], a[j]); std::swap(s.u[i], s.u[j]); };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    for (int r = 0; r < cols; ++r) std::swap(s.v[r][i], s.v[r][j]);
  };
  int t = 0;
  while (t < rows && t < cols) {
    // locate smallest nonzero entry in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi < 0 || abs(a[i][j]) < abs(a[pi][pj]))) { pi = i; pj = j; }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    bool dirty = false;
    for (int i = t + 1; i < rows; ++i) {
      if (a[i][t] == 0) continue;
      Int q = a[i][t] / a[t][t];
      row_op(i, t, q);
      if (a[i][t] != 0) dirty = true;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (a[t][j] == 0) continue;
      Int q = a[t][j] / a[t][t];
      col_op(j, t, q);
      if (a[t][j] != 0) dirty = true;
    }
    if (dirty) continue;
    // divisibility sweep so diag entries divide the rest of the block
    bool fixed = true;
    for (int i = t + 1; i < rows && fixed; ++i)
      for (int j = t + 1; j < cols && fixed; ++j)
        if (a[i][j] % a[t][t] != 0) {
          row_op(t, i, Int(-1));
          fixed = false;
        }
    if (!fixed) continue;
    if (a[t][t] < 0) {
      for (int j = 0; j < cols; ++j) a[t][j] = -a[t][j];
      for (int j = 0; j < rows; ++j) s.u[t][j] = -s.u[t][j];
    }
    ++t;
  }
  s.d = a;
  for (int i = 0; i < t; ++i) s.diag.push_back(a[i][i]);
  return s;
}

} // namespace prolrig
