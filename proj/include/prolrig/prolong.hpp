#pragma once

#include "kostant.hpp"

namespace prolrig {

/// Stabilizer of a set of cochains inside g0. Torus-stable, so it splits into
/// a Cartan part (coefficient vectors over the simple coroots) and a root set.
struct AnnihilatorSpace {
  RatMat cartan;
  std::set<int> roots;
};

inline AnnihilatorSpace annihilator(const Grading& g, const std::vector<Cochain2>& phis) {
  const RootSystem& rs = g.rs();
  const int R = rs.num_roots();
  for (const Cochain2& phi : phis)
    if (phi.zero()) throw std::invalid_argument("annihilator: zero cochain");
  if (phis.empty()) throw std::invalid_argument("annihilator: empty input");

  AnnihilatorSpace out;
  // Cartan part: kernel of c |-> sum_j c_j (h_j . phi) over all phis
  RatMat eq;
  for (size_t pi = 0; pi < phis.size(); ++pi) {
    std::vector<SparseVec> hact;
    std::set<long long> keys;
    for (int j = 0; j < rs.rank(); ++j) {
      hact.push_back(flatten(rs, act(g, R + j, phis[pi])));
      for (const auto& [k, v] : hact.back()) keys.insert(k);
    }
    for (long long k : keys) {
      std::vector<Rat> row(rs.rank(), Rat(0));
      for (int j = 0; j < rs.rank(); ++j) {
        auto it = hact[j].find(k);
        if (it != hact[j].end()) row[j] = it->second;
      }
      eq.push_back(std::move(row));
    }
  }
  out.cartan = kernel_basis(std::move(eq), rs.rank());
  for (int r : g.layer(0)) {
    bool kills = true;
    for (const Cochain2& phi : phis)
      if (!act(g, r, phi).zero()) {
        kills = false;
        break;
      }
    if (kills) out.roots.insert(r);
  }
  return out;
}

inline AnnihilatorSpace annihilator(const Grading& g, const Cochain2& phi) {
  return annihilator(g, std::vector<Cochain2>{phi});
}

/// pr_i for i >= 1: a torus-stable subspace of g_i, hence a root set.
struct ProlongationSpace {
  int degree = 0;
  std::set<int> roots;
};

/// pr_1..pr_upto via the recursion ad(X)(Z) in pr_{i-1} for all X in g_{-1},
/// with pr_0 the annihilator.
inline std::vector<ProlongationSpace> prolongation_chain(const Grading& g,
                                                         const AnnihilatorSpace& ann, int upto) {
  if (upto < 1 || upto > g.k()) throw std::invalid_argument("prolongation: degree out of range");
  const RootSystem& rs = g.rs();
  std::vector<ProlongationSpace> out;
  const std::set<int>* prev = &ann.roots;
  for (int i = 1; i <= upto; ++i) {
    ProlongationSpace ps;
    ps.degree = i;
    for (int gam : g.layer(i)) {
      bool ok = true;
      for (int d : g.layer(-1)) {
        Coord s = rs.root(gam);
        bool zero = true;
        for (int j = 0; j < rs.rank(); ++j) {
          s[j] += rs.root(d)[j];
          zero = zero && s[j] == 0;
        }
        if (zero) {  // [e_d, e_gam] is the coroot of gam
          if (!in_row_space(ann.cartan, rs.coroot(gam))) {
            ok = false;
            break;
          }
          continue;
        }
        int w = rs.root_index(s);
        if (w < 0) continue;
        if (!prev->count(w)) {
          ok = false;
          break;
        }
      }
      if (ok) ps.roots.insert(gam);
    }
    out.push_back(std::move(ps));
    prev = &out.back().roots;
  }
  return out;
}

inline ProlongationSpace prolongation(const Grading& g, const AnnihilatorSpace& ann, int i) {
  return prolongation_chain(g, ann, i).back();
}

inline ProlongationSpace intersect_prolongations(const std::vector<ProlongationSpace>& spaces) {
  if (spaces.empty()) throw std::invalid_argument("intersect_prolongations: empty input");
  ProlongationSpace out = spaces[0];
  for (size_t i = 1; i < spaces.size(); ++i) {
    if (spaces[i].degree != out.degree)
      throw std::invalid_argument("intersect_prolongations: degree mismatch");
    std::set<int> inter;
    std::set_intersection(out.roots.begin(), out.roots.end(), spaces[i].roots.begin(),
                          spaces[i].roots.end(), std::inserter(inter, inter.begin()));
    out.roots = std::move(inter);
  }
  return out;
}

/// The spaces a_1..a_k for a set of components. An escape direction is real:
/// its part in a factor must be insertable into every component whose
/// arguments touch that factor without leaving the prolongation tower. A
/// component whose arguments lie in a single factor therefore constrains only
/// that factor; a component with arguments in both factors constrains both.
/// Towers restricted to a factor are intersected over the components
/// constraining it, and the factors' contributions are accumulated.
inline std::vector<ProlongationSpace> a_spaces(const Grading& g,
                                               const std::vector<HComponent>& mus) {
  const RootSystem& rs = g.rs();
  std::vector<ProlongationSpace> out;
  for (int i = 1; i <= g.k(); ++i) out.push_back(ProlongationSpace{i, {}});
  std::map<int, std::vector<std::vector<std::set<int>>>> groups;  // factor -> towers
  for (const HComponent& m : mus) {
    int fp = rs.factor_of_node(m.p), fq = rs.factor_of_node(m.q);
    auto chain = prolongation_chain(g, annihilator(g, phi0(g, m)), g.k());
    std::vector<int> touched{fp};
    if (fq != fp) touched.push_back(fq);
    for (int f : touched) {
      std::vector<std::set<int>> restr;
      for (const auto& ps : chain) {
        std::set<int> kept;
        for (int r : ps.roots)
          if (rs.factor_of_root(r) == f) kept.insert(r);
        restr.push_back(std::move(kept));
      }
      groups[f].push_back(std::move(restr));
    }
  }
  for (const auto& [f, towers] : groups)
    for (int i = 0; i < g.k(); ++i) {
      std::set<int> inter = towers[0][i];
      for (size_t t = 1; t < towers.size() && !inter.empty(); ++t) {
        std::set<int> next;
        std::set_intersection(inter.begin(), inter.end(), towers[t][i].begin(),
                              towers[t][i].end(), std::inserter(next, next.begin()));
        inter = std::move(next);
      }
      out[i].roots.insert(inter.begin(), inter.end());
    }
  return out;
}

/// Conjugation on the complexified algebra induced by a node involution:
/// root vectors map onto the root with permuted simple coordinates, with the
/// sign of the induced diagram automorphism, and simple coroots permute.
struct ConjMap {
  std::vector<int> node_image;
  std::vector<int> root_image;
  std::vector<Rat> sign;
};

inline ConjMap make_conj(const RootSystem& rs, const std::vector<int>& iota) {
  ConjMap cm;
  cm.node_image = iota;
  const int R = rs.num_roots();
  cm.root_image.assign(R, -1);
  cm.sign.assign(R, Rat(0));
  auto image_of = [&](int r) {
    const Coord& c = rs.root(r);
    Coord ic(rs.rank(), 0);
    for (int j = 0; j < rs.rank(); ++j) ic[iota[j]] = c[j];
    return rs.root_index(ic);
  };
  // positive roots by height; sign from a simple-root decomposition
  std::vector<int> pos;
  for (int r = 0; r < R; ++r)
    if (rs.is_positive(r)) pos.push_back(r);
  auto height = [&](int r) {
    int h = 0;
    for (int v : rs.root(r)) h += v;
    return h;
  };
  std::sort(pos.begin(), pos.end(), [&](int a, int b) { return height(a) < height(b); });
  for (int r : pos) {
    int ir = image_of(r);
    cm.root_image[r] = ir;
    cm.root_image[rs.negate_root(r)] = rs.negate_root(ir);
    if (height(r) == 1) {
      cm.sign[r] = Rat(1);
    } else {
      Rat s(0);
      for (int j = 0; j < rs.rank() && s == 0; ++j) {
        int si = rs.simple_root_index(j);
        Coord rest = rs.root(r);
        rest[j] -= 1;
        int d = rs.root_index(rest);
        if (d < 0 || !rs.is_positive(d) || rs.N(si, d) == 0) continue;
        s = cm.sign[d] * Rat(rs.N(rs.simple_root_index(iota[j]), cm.root_image[d])) /
            Rat(rs.N(si, d));
      }
      if (s == 0) throw std::logic_error("make_conj: no simple decomposition");
      cm.sign[r] = s;
    }
    cm.sign[rs.negate_root(r)] = cm.sign[r];
  }
  return cm;
}

inline GVec apply_conj(const RootSystem& rs, const ConjMap& cm, const GVec& x) {
  const int R = rs.num_roots();
  GVec out;
  for (const auto& [b, c] : x) {
    if (b < R)
      out[cm.root_image[b]] += c * cm.sign[b];
    else
      out[R + cm.node_image[b - R]] += c;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Multigrade conditions an admissible symmetry must satisfy for the record:
/// a layer chunk of positive degree contributes its eigenvalue condition when
/// some vector v of it prolongs the annihilator of some nonzero cochain of
/// the component compatibly with the real structure, i.e. when the iterated
/// brackets of v into degree zero, together with their conjugates, jointly
/// annihilate a nonzero vector of the realized component.
inline std::vector<std::vector<int>> rig_monomials(
    const Grading& g, const std::vector<int>& iota,
    const std::vector<std::vector<HComponent>>& records) {
  const RootSystem& rs = g.rs();
  const ConjMap cm = make_conj(rs, iota);
  std::vector<std::vector<Cochain2>> bases;
  for (const auto& comps : records) bases.push_back(realize_component(g, comps.at(0)));

  // lazily cached action of degree-zero basis elements on the module bases
  std::map<std::pair<size_t, int>, std::vector<SparseVec>> act_cache;
  auto acted = [&](size_t m, int idx) -> const std::vector<SparseVec>& {
    auto it = act_cache.find({m, idx});
    if (it != act_cache.end()) return it->second;
    std::vector<SparseVec> imgs;
    imgs.reserve(bases[m].size());
    for (const Cochain2& b : bases[m]) imgs.push_back(flatten(rs, act(g, idx, b)));
    return act_cache.emplace(std::make_pair(m, idx), std::move(imgs)).first->second;
  };

  // does the span of ops annihilate a nonzero vector of module m?
  auto kernel_nonzero = [&](size_t m, const std::vector<GVec>& ops) {
    const int n = static_cast<int>(bases[m].size());
    RatMat rows;
    for (const GVec& u : ops) {
      std::map<long long, std::map<int, Rat>> eqs;  // ambient key -> column -> coeff
      for (const auto& [idx, c] : u) {
        const std::vector<SparseVec>& imgs = acted(m, idx);
        for (int b = 0; b < n; ++b)
          for (const auto& [k, v] : imgs[b]) eqs[k][b] += c * v;
      }
      for (const auto& [k, cols] : eqs) {
        std::vector<Rat> row(n, Rat(0));
        bool nz = false;
        for (const auto& [b, v] : cols) {
          row[b] = v;
          nz = nz || v != 0;
        }
        if (nz) rows.push_back(std::move(row));
      }
    }
    return rank(rows) < n;
  };

  std::vector<std::vector<int>> out;
  std::set<std::vector<int>> seen;
  for (int i = 1; i <= g.k(); ++i) {
    // chunks of layer i by multigrade
    std::map<std::vector<int>, std::vector<int>> chunks;
    for (int r : g.layer(i)) chunks[g.multigrade(r)].push_back(r);
    for (const auto& [mg, roots] : chunks) {
      if (seen.count(mg)) continue;
      // candidate vectors: each root vector plus generic combinations
      std::vector<GVec> cands;
      for (int r : roots) cands.push_back(GVec{{r, Rat(1)}});
      if (roots.size() > 1)
        for (int t = 1; t <= 3; ++t) {
          GVec v;
          Rat c(1);
          for (int r : roots) {
            v[r] = c;
            c *= Rat(t + 1);
          }
          cands.push_back(std::move(v));
        }
      bool contributes = false;
      for (const GVec& v : cands) {
        // span of i-fold brackets with the first negative layer
        std::vector<GVec> span{v};
        for (int step = 0; step < i; ++step) {
          std::vector<GVec> next;
          SparseRed red;
          for (const GVec& s : span)
            for (int d : g.layer(-1)) {
              GVec t = rs.bracket(GVec{{d, Rat(1)}}, s);
              if (t.empty()) continue;
              SparseVec fl;
              for (const auto& [b, c] : t) fl[b] = c;
              if (red.add(fl)) next.push_back(std::move(t));
            }
          span = std::move(next);
          if (span.empty()) break;
        }
        std::vector<GVec> ops;
        for (const GVec& u : span) {
          ops.push_back(u);
          ops.push_back(apply_conj(rs, cm, u));
        }
        bool all = true;
        for (size_t m = 0; m < bases.size() && all; ++m) all = kernel_nonzero(m, ops);
        if (all) {
          contributes = true;
          break;
        }
      }
      if (contributes) {
        seen.insert(mg);
        out.push_back(mg);
      }
    }
  }
  return out;
}

/// True iff every cochain of the realized component vanishes whenever one
/// argument lies in span of the given negative root spaces.
inline bool inserts_trivially(const std::vector<Cochain2>& realized, const std::set<int>& q_part) {
  for (const Cochain2& c : realized)
    for (const auto& [key, val] : c.terms)
      if (q_part.count(key.first) || q_part.count(key.second)) return false;
  return true;
}

} // namespace prolrig
