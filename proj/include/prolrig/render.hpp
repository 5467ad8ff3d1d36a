#pragma once

#include "realform.hpp"

namespace prolrig {

/// Integer kernel {v : a v = 0} of an integer matrix, via Smith reduction.
inline IntMat integer_kernel(const IntMat& a, int ncols) {
  IntMat out;
  if (a.empty()) {
    for (int i = 0; i < ncols; ++i) {
      std::vector<Int> e(ncols, 0);
      e[i] = 1;
      out.push_back(std::move(e));
    }
    return out;
  }
  SmithForm sf = smith(a);
  const int nd = static_cast<int>(sf.diag.size());
  for (int i = 0; i < ncols; ++i) {
    if (i < nd && sf.diag[i] != 0) continue;
    std::vector<Int> col(ncols);
    for (int r = 0; r < ncols; ++r) col[r] = sf.v[r][i];
    out.push_back(std::move(col));
  }
  return out;
}

/// All integer phase conditions "xi . x in 2Z" holding identically on the
/// group, as a lattice of rows.
inline IntMat phase_constraint_lattice(const LogGroup& g) {
  const int n = g.layout().norb;
  // orthogonality to the continuous phase directions
  IntMat ortho;
  for (const auto& b : g.phase_basis()) {
    Int d = 1;
    for (const Rat& v : b) d = boost::multiprecision::lcm(d, rat_den(v));
    std::vector<Int> row(n);
    for (int i = 0; i < n; ++i) row[i] = rat_num(b[i] * Rat(d));
    ortho.push_back(std::move(row));
  }
  IntMat kern = integer_kernel(ortho, n);  // rows = basis of the orthogonal lattice
  const int k = static_cast<int>(kern.size());
  if (k == 0) return {};

  // congruences from the discrete phase generators
  IntMat cong;
  std::vector<Int> moduli;
  for (const auto& gen : g.phase_gens()) {
    std::vector<Rat> w(k, Rat(0));
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < n; ++i) w[j] += Rat(kern[j][i]) * gen[i];
    Int d = 1;
    for (const Rat& v : w) d = boost::multiprecision::lcm(d, rat_den(v));
    std::vector<Int> row(k);
    for (int j = 0; j < k; ++j) row[j] = rat_num(w[j] * Rat(d));
    cong.push_back(std::move(row));
    moduli.push_back(2 * d);
  }

  IntMat ybasis;
  if (cong.empty()) {
    for (int i = 0; i < k; ++i) {
      std::vector<Int> e(k, 0);
      e[i] = 1;
      ybasis.push_back(std::move(e));
    }
  } else {
    // y with cong . y = 0 mod moduli: project the kernel of [cong | diag]
    const int m = static_cast<int>(cong.size());
    IntMat aug(m, std::vector<Int>(k + m, 0));
    for (int r = 0; r < m; ++r) {
      for (int j = 0; j < k; ++j) aug[r][j] = cong[r][j];
      aug[r][k + r] = moduli[r];
    }
    for (const auto& v : integer_kernel(aug, k + m))
      ybasis.emplace_back(v.begin(), v.begin() + k);
  }

  IntMat rows;
  for (const auto& y : ybasis) {
    std::vector<Int> row(n, 0);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < n; ++i) row[i] += y[j] * kern[j][i];
    bool z = true;
    for (const Int& v : row) z = z && v == 0;
    if (!z) rows.push_back(std::move(row));
  }
  return hermite(rows);
}

/// Per-column description of a symmetry group: how each eigenvalue column is
/// constrained given the columns declared free before it.
struct ColState {
  int node = -1;  // crossed node of the column (representative, 0-based)
  bool pair_orbit = false;  // column carries a complex eigenvalue
  bool r_free = false, x_free = false;
  std::map<int, Rat> rdep;  // r_c = sum over columns: coef * r_f
  Int xb = 0;               // xb * x_c + sum xdep * x_ref in 2Z (xb = 0: free)
  std::map<int, Int> xdep;
  int tor_order = 0;  // > 0: column introduces a root-of-unity parameter
};

struct ColumnAnalysis {
  std::vector<ColState> cols;
  std::vector<int> r_free_cols, x_free_cols, free_cols, torsion_cols;
  bool faithful = true;  // the per-column data cuts out exactly the group

  bool fractional_phase_ref(int f) const {
    for (const ColState& cs : cols)
      if (cs.xb > 1 && cs.xdep.count(f)) return true;
    return false;
  }
};

inline ColumnAnalysis analyze_columns_ordered(const LogGroup& g, const std::vector<int>& col_nodes,
                                              const std::vector<int>& order) {
  const int n = g.layout().norb;
  ColumnAnalysis an;
  an.cols.resize(n);
  const RatMat& mod = g.moduli_basis();
  IntMat lam = phase_constraint_lattice(g);

  auto proj_rank = [&](const std::vector<int>& coords) {
    RatMat m;
    for (const auto& v : mod) {
      std::vector<Rat> row;
      for (int c : coords) row.push_back(v[c]);
      m.push_back(std::move(row));
    }
    return rank(m);
  };

  for (int c : order) {
    ColState& st = an.cols[c];
    st.node = col_nodes[c];
    st.pair_orbit = g.layout().is_pair[c];

    // modulus part
    std::vector<int> fr = an.r_free_cols;
    int r0 = proj_rank(fr);
    fr.push_back(c);
    if (proj_rank(fr) > r0) {
      st.r_free = true;
      an.r_free_cols.push_back(c);
    } else {
      // solve v_c = sum lambda_f v_f over the continuous directions
      const auto& F = an.r_free_cols;
      RatMat aug;
      for (const auto& v : mod) {
        std::vector<Rat> row;
        for (int f : F) row.push_back(v[f]);
        row.push_back(v[c]);
        aug.push_back(std::move(row));
      }
      std::vector<int> piv = rref(aug);
      std::vector<Rat> lambda(F.size(), Rat(0));
      for (size_t r = 0; r < piv.size(); ++r)
        if (piv[r] < static_cast<int>(F.size())) lambda[piv[r]] = aug[r][F.size()];
      for (size_t i = 0; i < F.size(); ++i)
        if (lambda[i] != 0) st.rdep[F[i]] = lambda[i];
    }

    // phase part: smallest positive coefficient on x_c among constraints
    // supported on the free/torsion columns seen so far plus c
    std::vector<int> sup = an.x_free_cols;
    for (int t : an.torsion_cols) sup.push_back(t);
    std::sort(sup.begin(), sup.end());
    std::vector<bool> in_sup(n, false);
    for (int s : sup) in_sup[s] = true;
    in_sup[c] = true;
    // combinations of lam rows vanishing outside the support
    IntMat outside;
    {
      const int k = static_cast<int>(lam.size());
      for (int i = 0; i < n; ++i) {
        if (in_sup[i]) continue;
        std::vector<Int> row(k);
        for (int j = 0; j < k; ++j) row[j] = lam[j][i];
        outside.push_back(std::move(row));
      }
      IntMat combos = integer_kernel(outside, k);
      IntMat sub;
      for (const auto& m : combos) {
        std::vector<Int> row(1 + sup.size(), 0);
        for (int j = 0; j < k; ++j) {
          row[0] += m[j] * lam[j][c];
          for (size_t si = 0; si < sup.size(); ++si) row[1 + si] += m[j] * lam[j][sup[si]];
        }
        bool z = true;
        for (const Int& v : row) z = z && v == 0;
        if (!z) sub.push_back(std::move(row));
      }
      sub = hermite(sub);
      if (!sub.empty() && sub[0][0] != 0) {
        st.xb = sub[0][0] > 0 ? sub[0][0] : -sub[0][0];
        Int sgn = sub[0][0] > 0 ? 1 : -1;
        for (size_t si = 0; si < sup.size(); ++si)
          if (sub[0][1 + si] != 0) st.xdep[sup[si]] = sgn * sub[0][1 + si];
        if (!st.pair_orbit && st.xb == 2 && st.xdep.empty()) {
          // a real eigenvalue whose sign stays free: no constraint beyond the
          // orbit baseline
          st.xb = 0;
          st.x_free = true;
          an.x_free_cols.push_back(c);
        }
      } else {
        st.x_free = true;
        an.x_free_cols.push_back(c);
      }
    }

    if (st.r_free && st.x_free) an.free_cols.push_back(c);
    if (!st.r_free && st.rdep.empty() && st.xb > 1 && st.xdep.empty()) {
      st.tor_order = static_cast<int>(st.xb);
      an.torsion_cols.push_back(c);
    }
  }

  // verify that the per-column data reproduces the group exactly
  LogGroup h(g.layout());
  for (int c = 0; c < n; ++c) {
    const ColState& st = an.cols[c];
    std::vector<Int> zero(n, 0);
    if (!st.r_free) {
      Int d = 1;
      for (const auto& [f, v] : st.rdep) d = boost::multiprecision::lcm(d, rat_den(v));
      std::vector<Int> rrow(n, 0);
      rrow[c] = d;
      for (const auto& [f, v] : st.rdep) rrow[f] = -rat_num(v * Rat(d));
      h.add_raw(std::move(rrow), zero);
    }
    if (!st.x_free) {
      std::vector<Int> xrow(n, 0);
      xrow[c] = st.xb;
      for (const auto& [f, v] : st.xdep) xrow[f] = v;
      h.add_raw(zero, std::move(xrow));
    }
  }
  h.solve();
  an.faithful = h.same_group(g);
  return an;
}

// ---------------------------------------------------------------------------
// string formatting
// ---------------------------------------------------------------------------

inline std::string col_name(const ColumnAnalysis& an, int c) {
  return std::to_string(an.cols[c].node + 1);
}

inline std::string fmt_root_symbol(int k) {
  return k == 2 ? "sqrt(1)" : "sqrt" + std::to_string(k) + "(1)";
}

inline std::string fmt_power(const std::string& base, const Int& e) {
  if (e == 1) return base;
  std::ostringstream os;
  os << base << '^' << e;
  return os.str();
}

/// Monomial in eigenvalue columns and shared root-of-unity parameters.
inline std::string fmt_monomial(const ColumnAnalysis& an, const std::map<int, Int>& exps) {
  std::string s;
  for (const auto& [f, e] : exps) {
    if (e == 0) continue;
    if (an.cols[f].tor_order > 0) {
      int k = an.cols[f].tor_order;
      Int m = e % k;
      if (m < 0) m += k;
      if (m == 0) continue;
      s += fmt_power(fmt_root_symbol(k), m);
    } else {
      s += fmt_power("j_" + col_name(an, f), e);
    }
  }
  return s.empty() ? "1" : s;
}

inline std::string fmt_coef(const Rat& coef, const std::string& var) {
  if (coef == 1) return var;
  if (coef == -1) return "-" + var;
  std::ostringstream os;
  if (rat_den(coef) == 1) {
    os << rat_num(coef) << var;
  } else {
    if (coef < 0) os << '-';
    os << '(' << boost::multiprecision::abs(rat_num(coef)) << '/' << rat_den(coef) << ')' << var;
  }
  return os.str();
}

/// Eigenvalue cell of one column: empty for a free column, otherwise the
/// value of the column in terms of the free data.
inline std::string render_cell(const LogGroup& g, const ColumnAnalysis& an, int c) {
  const ColState& st = an.cols[c];
  const int n = static_cast<int>(an.cols.size());
  // candidate exact monomial j_c = prod j_f^{m_f} over integer moduli
  // dependence, verified against the group's phase lattice
  auto try_monomial = [&]() -> std::string {
    if (st.r_free) return "";
    std::map<int, Int> exps;
    for (const auto& [f, v] : st.rdep) {
      if (rat_den(v) != 1) return "";
      exps[f] = rat_num(v);
    }
    std::vector<Int> xrow(n, 0), zero(n, 0);
    xrow[c] = 1;
    for (const auto& [f, m] : exps) xrow[f] -= m;
    if (!g.satisfies_raw(zero, xrow)) return "";
    if (exps.empty()) return "1";
    return fmt_monomial(an, exps);
  };
  // conjugate-linear coupling j_c^b = j_f^u conj(j_f)^v to a single free
  // column, split from the modulus and phase rows
  auto try_conjugate = [&]() -> std::string {
    if (st.r_free || st.x_free) return "";
    if (st.rdep.size() != 1 || st.xdep.size() != 1) return "";
    auto [rf, a] = *st.rdep.begin();
    auto [xf, d] = *st.xdep.begin();
    if (rf != xf || an.cols[rf].tor_order > 0) return "";
    Rat ba = a * Rat(st.xb);
    if (rat_den(ba) != 1) return "";
    Int u2 = rat_num(ba) - d, v2 = rat_num(ba) + d;
    if (u2 % 2 != 0 || v2 % 2 != 0) return "";
    Int u = u2 / 2, v = v2 / 2;
    if (v == 0) return "";  // plain monomial, handled elsewhere
    std::string base = "j_" + col_name(an, rf);
    auto fmt_uv = [&](const Int& p, const Int& q) {
      std::string s;
      if (p != 0) s += fmt_power(base, p);
      if (q != 0) s += fmt_power("conj(" + base + ")", q);
      return s.empty() ? std::string("1") : s;
    };
    if (st.xb == 1) return fmt_uv(u, v);
    if (u % st.xb == 0 && v % st.xb == 0)
      return fmt_root_symbol(static_cast<int>(st.xb)) + fmt_uv(u / st.xb, v / st.xb);
    if (st.xb == 2) return "sqrt(" + fmt_uv(u, v) + ")";
    return "sqrt" + std::to_string(static_cast<int>(st.xb)) + "(" + fmt_uv(u, v) + ")";
  };
  if (st.r_free && st.x_free) return "";
  if (st.r_free && !st.x_free) {
    if (st.xb == 1 && st.xdep.empty()) return "r_" + col_name(an, c);
    // modulus free, phase confined to the real axis
    if (st.pair_orbit && st.xb == 2 && st.xdep.empty()) return "r_" + col_name(an, c);
    // modulus free, phase tied to other columns
    {
      std::map<int, Int> exps;
      exps[c] = st.xb;
      for (const auto& [f, e] : st.xdep) exps[f] += e;
      return "arg(" + fmt_monomial(an, exps) + ")=0";
    }
  }
  if (!st.r_free && st.x_free) {
    if (st.rdep.empty()) {
      if (st.pair_orbit) return "phi_" + col_name(an, c);
      return fmt_root_symbol(2);
    }
    return "?";
  }
  // both constrained
  if (st.xb == 1) {
    std::string mono = try_monomial();
    if (!mono.empty()) return mono;
    if (st.rdep.empty() && st.xdep.size() == 1 &&
        an.cols[st.xdep.begin()->first].tor_order == 0) {
      // purely imaginary value: phase multiple of a free phase
      auto [f, e] = *st.xdep.begin();
      return fmt_coef(Rat(-e), "phi_" + col_name(an, f));
    }
    if (st.xdep.empty() && st.rdep.size() == 1) {
      // purely real value: modulus multiple of a free modulus
      auto [f, lam] = *st.rdep.begin();
      return fmt_coef(lam, "r_" + col_name(an, f));
    }
    {
      std::string conj = try_conjugate();
      if (!conj.empty()) return conj;
    }
    return "?";
  }
  // xb > 1
  if (st.xdep.empty() && st.rdep.empty()) return fmt_root_symbol(static_cast<int>(st.xb));
  bool pure_tor = st.rdep.empty();
  for (const auto& [f, e] : st.xdep) pure_tor = pure_tor && an.cols[f].tor_order > 0;
  if (pure_tor) {
    std::map<int, Int> exps;
    for (const auto& [f, e] : st.xdep) exps[f] = -e;
    return fmt_monomial(an, exps);
  }
  if (st.rdep.empty() && st.xdep.size() == 1 &&
      an.cols[st.xdep.begin()->first].tor_order == 0) {
    auto [f, e] = *st.xdep.begin();
    return fmt_coef(Rat(-e) / Rat(st.xb), "phi_" + col_name(an, f));
  }
  // b-th root of a monomial in free columns
  {
    bool ok = true;
    std::map<int, Int> exps;
    size_t used = 0;
    for (const auto& [f, e] : st.xdep) {
      if (an.cols[f].tor_order > 0) continue;
      exps[f] = -e;
      auto it = st.rdep.find(f);
      if (it == st.rdep.end() || it->second != Rat(-e) / Rat(st.xb)) ok = false;
      ++used;
    }
    if (used != st.rdep.size()) ok = false;
    if (ok && st.xb == 2 && !exps.empty()) return "sqrt(" + fmt_monomial(an, exps) + ")";
  }
  {
    std::string conj = try_conjugate();
    if (!conj.empty()) return conj;
  }
  return "?";
}

inline std::vector<std::string> render_cells(const LogGroup& g, const ColumnAnalysis& an) {
  std::vector<std::string> out;
  for (size_t c = 0; c < an.cols.size(); ++c)
    out.push_back(render_cell(g, an, static_cast<int>(c)));
  return out;
}

/// Cost of a rendered cell: prefer presentations where dependent columns are
/// plain monomials or proper fractions of the free data.
inline int cell_cost(const std::string& s) {
  if (s.find('?') != std::string::npos) return 1000;
  if (s.rfind("arg(", 0) == 0) return 500;
  if (s.find("conj(") != std::string::npos) return 8;
  if (s.rfind("sqrt(", 0) == 0 && s.find("j_") != std::string::npos) return 5;
  // improper fraction like -(5/3)phi_2 or integer-coefficient phase >= 2
  size_t p = s.find("phi_");
  if (p != std::string::npos && p > 0) {
    size_t lp = s.find('('), sl = s.find('/');
    if (lp != std::string::npos && sl != std::string::npos && sl < p) {
      long num = std::labs(std::stol(s.substr(lp + 1, sl - lp - 1)));
      long den = std::stol(s.substr(sl + 1));
      if (num >= den) return 3;
    }
  }
  return 0;
}

/// Choose the free columns globally: try every processing order and keep the
/// analysis whose dependent cells have the cleanest presentation, breaking
/// ties toward freeing earlier columns.
inline ColumnAnalysis analyze_columns(const LogGroup& g, const std::vector<int>& col_nodes) {
  const int n = g.layout().norb;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  ColumnAnalysis best;
  long best_cost = -1;
  std::vector<int> best_order;
  do {
    ColumnAnalysis an = analyze_columns_ordered(g, col_nodes, order);
    long cost = an.faithful ? 0 : 100000;
    for (int c = 0; c < n; ++c) cost += cell_cost(render_cell(g, an, c));
    if (best_cost < 0 || cost < best_cost ||
        (cost == best_cost && order < best_order)) {
      best = an;
      best_cost = cost;
      best_order = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

/// Assignment-style description "j_a=..., j_b=..." listing every constrained
/// column (used by the joint-component table).
inline std::string render_assignments(const LogGroup& g, const ColumnAnalysis& an) {
  std::vector<std::string> parts;
  for (size_t c = 0; c < an.cols.size(); ++c) {
    const ColState& st = an.cols[c];
    if (st.r_free && st.x_free) continue;
    parts.push_back("j_" + col_name(an, static_cast<int>(c)) + "=" +
                    render_cell(g, an, static_cast<int>(c)));
  }
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s;
}

// ---------------------------------------------------------------------------
// extra-condition (PR) rendering
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Int> unit_row(int n, int c, Int v = 1) {
  std::vector<Int> row(n, 0);
  row[c] = v;
  return row;
}

} // namespace detail

/// Conditions cutting the rigidity locus out of the fixing locus, phrased on
/// the free columns of the fixing locus.
inline std::string render_pr(const LogGroup& fix, const LogGroup& rig, const ColumnAnalysis& fa,
                             const ChunkTable& chunks) {
  const int n = fix.layout().norb;
  if (fix.same_group(rig)) return "";
  LogGroup acc = fix;
  std::vector<std::string> conds;
  auto add = [&](const std::string& s, const std::vector<Int>& rrow, const std::vector<Int>& xrow) {
    conds.push_back(s);
    acc.add_raw(rrow, xrow);
    acc.solve();
  };
  for (int c : fa.free_cols) {
    std::string jc = "j_" + col_name(fa, c);
    std::vector<Int> ec = detail::unit_row(n, c);
    if (rig.satisfies_raw(ec, ec)) {
      if (!acc.satisfies_raw(ec, ec)) {
        if (fa.fractional_phase_ref(c))
          add("r_" + col_name(fa, c) + "=0, phi_" + col_name(fa, c) + "=2pi", ec, ec);
        else
          add(jc + "=1", ec, ec);
      }
      continue;
    }
    std::vector<Int> e2 = detail::unit_row(n, c, 2);
    if (rig.satisfies_raw(ec, e2)) {
      if (!acc.satisfies_raw(ec, e2)) {
        // exclude the trivial branch when it fixes everything
        LogGroup branch = rig;
        branch.add_raw(ec, ec);
        branch.solve();
        bool excl = fixes_everything(branch, chunks);
        add(jc + (excl ? "=-1" : "=sqrt(1)"), ec, e2);
      }
      continue;
    }
    if (rig.satisfies_raw(ec, std::vector<Int>(n, 0)) &&
        !acc.satisfies_raw(ec, std::vector<Int>(n, 0))) {
      add("r_" + col_name(fa, c) + "=0", ec, std::vector<Int>(n, 0));
      continue;
    }
    // binomial relation with another free column
    for (int f : fa.free_cols) {
      if (f == c) continue;
      bool done = false;
      for (int m = -3; m <= 3 && !done; ++m) {
        if (m == 0) continue;
        std::vector<Int> v(n, 0);
        v[c] = 1;
        v[f] = -m;
        if (rig.satisfies_raw(v, v) && !acc.satisfies_raw(v, v)) {
          add(jc + "=" + fmt_power("j_" + col_name(fa, f), m), v, v);
          done = true;
        }
      }
      if (done) break;
    }
  }
  if (!acc.same_group(rig)) conds.push_back("??");
  std::string s;
  for (size_t i = 0; i < conds.size(); ++i) s += (i ? ", " : "") + conds[i];
  return s;
}

// ---------------------------------------------------------------------------
// labels
// ---------------------------------------------------------------------------

inline std::string node_name(const RootSystem& rs, int node) {
  if (rs.num_factors() == 2 && rs.factor_of_node(node) == 1)
    return "a_{" + std::to_string(node - rs.factors()[0].rank + 1) + "'}";
  return "a_" + std::to_string(node + 1);
}

inline std::string mu_label(const RootSystem& rs, const MuRecord& rec) {
  const HComponent* lab = &rec.comps[0];
  for (const HComponent& c : rec.comps)
    if (c.value_factor == 0) {
      lab = &c;
      break;
    }
  if (rec.comps.size() == 1) lab = &rec.comps[0];
  return "(" + node_name(rs, lab->p) + "," + node_name(rs, lab->q) + ")";
}

/// Crossed set label: one entry per conjugation orbit, by representative node.
inline std::string sigma_label(const FormSpec& fs, const std::vector<int>& sigma) {
  std::vector<int> reps;
  for (int a : sigma)
    if (fs.node_iota[a] >= a) reps.push_back(a);
  std::string s = "{";
  for (size_t i = 0; i < reps.size(); ++i) s += (i ? "," : "") + std::to_string(reps[i] + 1);
  return s + "}";
}

/// Nodes of the columns: representative of each conjugation orbit of sigma,
/// in coordinate order (matching the orbit order of the layout).
inline std::vector<int> column_nodes(const Grading& g, const FormSpec& fs) {
  LogLayout lay{crossing_structure(g, fs)};
  std::vector<int> nodes;
  for (int o = 0; o < lay.norb; ++o) nodes.push_back(g.sigma()[lay.rep[o]]);
  return nodes;
}

} // namespace prolrig
