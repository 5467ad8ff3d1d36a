#pragma once

#include <utility>

#include "grading.hpp"

namespace prolrig {

/// Alternating g-valued 2-form on g_-, stored on ordered key pairs (i<j) of
/// negative-root indices.
struct Cochain2 {
  std::map<std::pair<int, int>, GVec> terms;

  void add(int i, int j, const GVec& v, const Rat& c = Rat(1)) {
    if (i == j || v.empty() || c == 0) return;
    Rat cc = c;
    if (i > j) {
      std::swap(i, j);
      cc = -cc;
    }
    GVec& slot = terms[{i, j}];
    gvec_add(slot, v, cc);
    if (slot.empty()) terms.erase({i, j});
  }

  GVec eval(int i, int j) const {
    if (i == j) return {};
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = terms.find({i, j});
    if (it == terms.end()) return {};
    GVec out = it->second;
    if (flip)
      for (auto& [k, v] : out) v = -v;
    return out;
  }

  bool zero() const { return terms.empty(); }
};

/// Action of a g0 basis element on a 2-cochain:
/// (b.phi)(x,y) = [b, phi(x,y)] - phi([b,x],y) - phi(x,[b,y]).
inline Cochain2 act(const Grading& g, int b, const Cochain2& phi) {
  const RootSystem& rs = g.rs();
  const int R = rs.num_roots();
  Cochain2 out;
  for (const auto& [key, val] : phi.terms) {
    const auto [i, j] = key;
    out.add(i, j, rs.bracket(GVec{{b, Rat(1)}}, val));
    if (b < R) {
      assert(g.sheight(b) == 0);
      for (int slot = 0; slot < 2; ++slot) {
        int arg = slot ? j : i;
        Coord c = rs.root(arg);
        for (int m = 0; m < rs.rank(); ++m) c[m] -= rs.root(b)[m];
        int u = rs.root_index(c);  // [b, e_u] = N(b,u) e_arg
        if (u < 0) continue;
        assert(g.in_gminus(u));
        int n = rs.N(b, u);
        assert(n != 0);
        if (slot)
          out.add(i, u, val, Rat(-n));
        else
          out.add(u, j, val, Rat(-n));
      }
    } else {
      int m = b - R;
      int c = rs.pair_coroot_root(i, m) + rs.pair_coroot_root(j, m);
      if (c) out.add(i, j, val, Rat(-c));
    }
  }
  return out;
}

inline Cochain2 act(const Grading& g, const GVec& a, const Cochain2& phi) {
  Cochain2 out;
  for (const auto& [b, c] : a) {
    Cochain2 t = act(g, b, phi);
    for (const auto& [key, val] : t.terms) out.add(key.first, key.second, val, c);
  }
  return out;
}

using SparseVec = std::map<long long, Rat>;

inline SparseVec flatten(const RootSystem& rs, const Cochain2& phi) {
  const long long D = rs.num_roots() + rs.rank();
  SparseVec v;
  for (const auto& [key, val] : phi.terms)
    for (const auto& [b, c] : val)
      v[(static_cast<long long>(key.first) * rs.num_roots() + key.second) * D + b] = c;
  return v;
}

/// Incremental echelon span of sparse vectors; each stored row has its pivot
/// as smallest key, fully reduced against the rows present when it arrived.
struct SparseRed {
  std::map<long long, SparseVec> rows;

  void reduce(SparseVec& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto r = rows.find(it->first);
      if (r == rows.end()) {
        ++it;
        continue;
      }
      Rat c = it->second;
      long long cur = it->first;
      for (const auto& [k, x] : r->second) {
        Rat& s = v[k];
        s -= c * x;
        if (s == 0) v.erase(k);
      }
      it = v.lower_bound(cur);  // row keys are all >= its pivot
    }
  }

  bool contains(SparseVec v) const {
    reduce(v);
    return v.empty();
  }

  /// Adds v to the span; returns false if it was already dependent.
  bool add(SparseVec v) {
    reduce(v);
    if (v.empty()) return false;
    Rat c = v.begin()->second;
    for (auto& [k, x] : v) x /= c;
    long long piv = v.begin()->first;
    rows[piv] = std::move(v);
    return true;
  }

  int dim() const { return static_cast<int>(rows.size()); }
};

} // namespace prolrig
