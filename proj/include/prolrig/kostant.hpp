#pragma once

#include <tuple>

#include "cochain.hpp"

namespace prolrig {

/// One irreducible g0-component of H^2(g_-, g), indexed by a length-two word
/// w = s_p s_q of the Weyl group and the factor carrying the value.
struct HComponent {
  int p = -1, q = -1;      // word nodes, 0-based
  int value_factor = 0;
  int beta1 = -1, beta2 = -1;  // the two positive roots sent negative by w^{-1}
  int value_root = -1;         // root index of -w(theta_t)
  WCoord lowest_weight;        // simple-root coordinates
  WCoord highest_weight;
  int homogeneity = 0;         // Sigma-height of the weight
  std::vector<int> multigrade;
};

inline std::vector<HComponent> harmonic_components(const Grading& g) {
  const RootSystem& rs = g.rs();
  std::vector<HComponent> out;
  for (int p : g.sigma())
    for (int q = 0; q < rs.rank(); ++q) {
      if (q == p) continue;
      Coord b2 = rs.reflect_root(p, rs.root(rs.simple_root_index(q)));
      int b2i = rs.root_index(b2);
      int h = 0;
      for (int a : g.sigma()) h += b2[a];
      if (h < 1) continue;  // both inversions must lie outside g0
      bool qin = std::binary_search(g.sigma().begin(), g.sigma().end(), q);
      if (qin && rs.cartan(p, q) == 0 && q < p) continue;  // s_p s_q = s_q s_p
      for (int t = 0; t < rs.num_factors(); ++t) {
        HComponent c;
        c.p = p;
        c.q = q;
        c.value_factor = t;
        c.beta1 = rs.simple_root_index(p);
        c.beta2 = b2i;
        Coord wth = rs.reflect_root(p, rs.reflect_root(q, rs.root(rs.highest_root(t))));
        Coord neg = wth;
        for (int& v : neg) v = -v;
        c.value_root = rs.root_index(neg);
        WCoord lw(rs.rank());
        for (int j = 0; j < rs.rank(); ++j) lw[j] = Rat(rs.root(c.beta1)[j] + b2[j] - wth[j]);
        c.lowest_weight = lw;
        c.highest_weight = rs.straighten(lw, g.g0_nodes());
        c.multigrade = g.multigrade_of_weight(lw);
        for (int m : c.multigrade) c.homogeneity += m;
        out.push_back(std::move(c));
      }
    }
  return out;
}

/// Extreme (lowest-weight) cochain of a component: the wedge of the duals of
/// the two inverted roots, valued on the reflected highest root.
inline Cochain2 phi0(const Grading& g, const HComponent& c) {
  Cochain2 phi;
  phi.add(g.rs().negate_root(c.beta1), g.rs().negate_root(c.beta2), GVec{{c.value_root, Rat(1)}});
  return phi;
}

/// Dimension of the irreducible g0-module with the given highest weight.
inline Int weyl_dim(const Grading& g, const WCoord& hw) {
  const RootSystem& rs = g.rs();
  std::vector<int> posr = g.g0_pos_roots();
  WCoord rho0(rs.rank(), Rat(0));
  for (int r : posr)
    for (int j = 0; j < rs.rank(); ++j) rho0[j] += Rat(rs.root(r)[j]) / 2;
  std::vector<Rat> pc_hw(rs.rank()), pc_r0(rs.rank());
  for (int j = 0; j < rs.rank(); ++j) {
    pc_hw[j] = rs.pair_coroot(hw, j);
    pc_r0[j] = rs.pair_coroot(rho0, j);
  }
  Rat num(1), den(1);
  for (int r : posr) {
    const std::vector<Rat>& cr = rs.coroot(r);
    Rat a(0), b(0);
    for (int j = 0; j < rs.rank(); ++j) {
      if (cr[j] == 0) continue;
      a += cr[j] * (pc_hw[j] + pc_r0[j]);
      b += cr[j] * pc_r0[j];
    }
    num *= a;
    den *= b;
  }
  Rat d = num / den;
  if (rat_den(d) != 1 || d <= 0) throw std::logic_error("weyl_dim: non-integral dimension");
  return rat_num(d);
}

/// Basis of the full component inside Lambda^2 g_-^* (x) g, generated from the
/// extreme cochain by the raising operators of g0. Dimension is checked
/// against the Weyl formula.
inline std::vector<Cochain2> realize_component(const Grading& g, const HComponent& c) {
  const RootSystem& rs = g.rs();
  std::vector<int> raise;
  for (int n : g.g0_nodes()) raise.push_back(rs.simple_root_index(n));
  std::vector<Cochain2> basis{phi0(g, c)};
  SparseRed red;
  red.add(flatten(rs, basis[0]));
  for (size_t head = 0; head < basis.size(); ++head) {
    Cochain2 cur = basis[head];
    for (int b : raise) {
      Cochain2 nxt = act(g, b, cur);
      if (nxt.zero()) continue;
      if (red.add(flatten(rs, nxt))) basis.push_back(std::move(nxt));
    }
  }
  if (Int(basis.size()) != weyl_dim(g, c.highest_weight))
    throw std::logic_error("realize_component: dimension mismatch with Weyl formula");
  return basis;
}

struct H2Summary {
  int dim = 0;
  std::vector<std::pair<WCoord, int>> lowest;  // weight -> multiplicity, sorted
};

/// Direct Chevalley-Eilenberg computation of H^2(g_-, g) as a g0-module,
/// independent of the word-combinatorial construction. Small ranks only.
inline H2Summary brute_force_h2(const Grading& g) {
  const RootSystem& rs = g.rs();
  for (SimpleType t : rs.factors())
    if (t.rank > 3) throw std::length_error("brute_force_h2: factor rank above 3");

  std::vector<int> gm;
  for (int r = 0; r < rs.num_roots(); ++r)
    if (g.in_gminus(r)) gm.push_back(r);
  const int R = rs.num_roots();
  const int D = R + rs.rank();
  auto wt_basis = [&](int b) -> Coord {
    if (b < R) return rs.root(b);
    return Coord(rs.rank(), 0);
  };
  auto coord_sub = [&](Coord a, const Coord& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
  };

  // weight-bucketed bases of C^1, C^2, C^3
  std::map<Coord, std::vector<std::pair<int, int>>> c1;
  std::map<Coord, std::vector<std::tuple<int, int, int>>> c2;
  std::map<Coord, std::vector<std::tuple<int, int, int, int>>> c3;
  for (int b = 0; b < D; ++b) {
    Coord wb = wt_basis(b);
    for (size_t x = 0; x < gm.size(); ++x) {
      c1[coord_sub(wb, rs.root(gm[x]))].push_back({gm[x], b});
      for (size_t y = x + 1; y < gm.size(); ++y) {
        Coord w2 = coord_sub(coord_sub(wb, rs.root(gm[x])), rs.root(gm[y]));
        c2[w2].push_back({gm[x], gm[y], b});
        for (size_t z = y + 1; z < gm.size(); ++z)
          c3[coord_sub(w2, rs.root(gm[z]))].push_back({gm[x], gm[y], gm[z], b});
      }
    }
  }

  auto d1 = [&](int x, int b) {  // differential of the 1-cochain e_x^* (x) e_b
    Cochain2 out;
    GVec eb{{b, Rat(1)}};
    for (int u : gm) {
      if (u == x) continue;
      out.add(u, x, rs.bracket(GVec{{u, Rat(1)}}, eb));
    }
    // -phi([u,v]) terms: [e_u, e_v] = N e_w contributes at pairs with w = x
    for (size_t a = 0; a < gm.size(); ++a)
      for (size_t bb = a + 1; bb < gm.size(); ++bb) {
        int u = gm[a], v = gm[bb];
        Coord s = rs.root(u);
        for (int j = 0; j < rs.rank(); ++j) s[j] += rs.root(v)[j];
        if (rs.root_index(s) == x) out.add(u, v, eb, Rat(-rs.N(u, v)));
      }
    return out;
  };

  struct Tri {
    std::map<std::tuple<int, int, int>, GVec> terms;
    void add(int x, int y, int z, const GVec& v, Rat c) {
      if (v.empty() || c == 0) return;
      // sort with sign
      int idx[3] = {x, y, z};
      int sgn = 1;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2 - i; ++j)
          if (idx[j] > idx[j + 1]) {
            std::swap(idx[j], idx[j + 1]);
            sgn = -sgn;
          }
      if (idx[0] == idx[1] || idx[1] == idx[2]) return;
      GVec& slot = terms[{idx[0], idx[1], idx[2]}];
      gvec_add(slot, v, c * sgn);
      if (slot.empty()) terms.erase({idx[0], idx[1], idx[2]});
    }
  };

  auto d2 = [&](const Cochain2& phi) {
    Tri out;
    for (size_t a = 0; a < gm.size(); ++a)
      for (size_t b = a + 1; b < gm.size(); ++b)
        for (size_t c = b + 1; c < gm.size(); ++c) {
          int x = gm[a], y = gm[b], z = gm[c];
          GVec val = rs.bracket(GVec{{x, Rat(1)}}, phi.eval(y, z));
          gvec_add(val, rs.bracket(GVec{{y, Rat(1)}}, phi.eval(x, z)), Rat(-1));
          gvec_add(val, rs.bracket(GVec{{z, Rat(1)}}, phi.eval(x, y)));
          auto pairterm = [&](int u, int v, int warg, Rat sgn) {
            Coord s = rs.root(u);
            for (int j = 0; j < rs.rank(); ++j) s[j] += rs.root(v)[j];
            int w = rs.root_index(s);
            if (w >= 0 && rs.N(u, v) != 0) gvec_add(val, phi.eval(w, warg), sgn * rs.N(u, v));
          };
          pairterm(x, y, z, Rat(-1));
          pairterm(x, z, y, Rat(1));
          pairterm(y, z, x, Rat(-1));
          out.add(x, y, z, val, Rat(1));
        }
    return out;
  };

  // position lookups
  std::map<std::tuple<int, int, int>, std::pair<Coord, int>> pos2;
  for (const auto& [w, list] : c2)
    for (size_t i = 0; i < list.size(); ++i) pos2[list[i]] = {w, static_cast<int>(i)};

  auto to_coords2 = [&](const Cochain2& phi, const Coord& w) {
    std::vector<Rat> v(c2.at(w).size(), Rat(0));
    for (const auto& [key, val] : phi.terms)
      for (const auto& [b, c] : val) {
        auto it = pos2.find({key.first, key.second, b});
        assert(it != pos2.end() && it->second.first == w);
        v[it->second.second] = c;
      }
    return v;
  };

  H2Summary out;
  std::vector<int> lowers;
  for (int n : g.g0_nodes()) lowers.push_back(rs.negate_root(rs.simple_root_index(n)));

  // image of d1 per weight, as row-reduced matrices
  std::map<Coord, RatMat> im;
  for (const auto& [w, list] : c1) {
    RatMat rowsm;
    for (auto [x, b] : list) {
      Cochain2 phi = d1(x, b);
      if (phi.zero()) continue;
      rowsm.push_back(to_coords2(phi, w));
    }
    if (!rowsm.empty()) {
      rref(rowsm);
      if (!rowsm.empty()) im[w] = std::move(rowsm);
    }
  }
  auto im_rank = [&](const Coord& w) {
    auto it = im.find(w);
    return it == im.end() ? 0 : static_cast<int>(it->second.size());
  };

  std::map<WCoord, int> lowmult;
  for (const auto& [w, list] : c2) {
    const int n2 = static_cast<int>(list.size());
    // kernel of d2 restricted to weight w
    std::map<std::tuple<int, int, int, int>, int> pos3;
    auto itc3 = c3.find(w);
    if (itc3 != c3.end())
      for (size_t i = 0; i < itc3->second.size(); ++i) pos3[itc3->second[i]] = static_cast<int>(i);
    RatMat eq(pos3.size(), std::vector<Rat>(n2, Rat(0)));
    for (int col = 0; col < n2; ++col) {
      auto [i, j, b] = list[col];
      Cochain2 phi;
      phi.add(i, j, GVec{{b, Rat(1)}});
      Tri t = d2(phi);
      for (const auto& [key, val] : t.terms)
        for (const auto& [vb, vc] : val) {
          auto it = pos3.find({std::get<0>(key), std::get<1>(key), std::get<2>(key), vb});
          assert(it != pos3.end());
          eq[it->second][col] = vc;
        }
    }
    RatMat ker = kernel_basis(std::move(eq), n2);
    int quot = static_cast<int>(ker.size()) - im_rank(w);
    assert(quot >= 0);
    if (quot == 0) continue;
    out.dim += quot;

    // lowest-weight subspace of the quotient at this weight
    const int a = static_cast<int>(ker.size());
    std::vector<RatMat> lowmat;  // per lowering op: rows = target coords, cols = ker
    std::vector<const RatMat*> lowim;
    std::vector<int> tgtdim;
    for (size_t li = 0; li < lowers.size(); ++li) {
      int L = lowers[li];
      Coord w2 = w;
      for (int j = 0; j < rs.rank(); ++j) w2[j] += rs.root(L)[j];
      auto itt = c2.find(w2);
      int td = itt == c2.end() ? 0 : static_cast<int>(itt->second.size());
      RatMat A(td, std::vector<Rat>(a, Rat(0)));
      for (int col = 0; col < a; ++col) {
        Cochain2 phi;
        for (int m = 0; m < n2; ++m)
          if (ker[col][m] != 0) {
            auto [i, j, b] = list[m];
            phi.add(i, j, GVec{{b, ker[col][m]}});
          }
        Cochain2 lphi = act(g, L, phi);
        if (lphi.zero()) continue;
        assert(td > 0);
        std::vector<Rat> coords = to_coords2(lphi, w2);
        for (int r = 0; r < td; ++r) A[r][col] = coords[r];
      }
      lowmat.push_back(std::move(A));
      auto iti = im.find(w2);
      lowim.push_back(iti == im.end() ? nullptr : &iti->second);
      tgtdim.push_back(td);
    }
    // stacked system: [A_l | -Im_l^T] over shared ker coefficients
    int extra = 0;
    std::vector<int> off;
    for (size_t li = 0; li < lowers.size(); ++li) {
      off.push_back(a + extra);
      extra += lowim[li] ? static_cast<int>(lowim[li]->size()) : 0;
    }
    RatMat sys;
    for (size_t li = 0; li < lowers.size(); ++li)
      for (int r = 0; r < tgtdim[li]; ++r) {
        std::vector<Rat> row(a + extra, Rat(0));
        bool nz = false;
        for (int col = 0; col < a; ++col) {
          row[col] = lowmat[li][r][col];
          nz = nz || row[col] != 0;
        }
        if (lowim[li])
          for (size_t ir = 0; ir < lowim[li]->size(); ++ir) {
            row[off[li] + static_cast<int>(ir)] = -(*lowim[li])[ir][r];
            nz = nz || row[off[li] + static_cast<int>(ir)] != 0;
          }
        if (nz) sys.push_back(std::move(row));
      }
    RatMat sol = kernel_basis(std::move(sys), a + extra);
    RatMat proj;
    for (const auto& v : sol) proj.push_back(std::vector<Rat>(v.begin(), v.begin() + a));
    int lw_dim = rank(std::move(proj));
    int mult = lw_dim - im_rank(w);
    assert(mult >= 0);
    if (mult > 0) {
      WCoord ww(rs.rank());
      for (int j = 0; j < rs.rank(); ++j) ww[j] = w[j];
      lowmult[ww] += mult;
    }
  }
  for (auto& [w, m] : lowmult) out.lowest.push_back({w, m});
  return out;
}

} // namespace prolrig
