// scratch harness, not part of the suite
#include <cstdio>

#include "prolrig/center.hpp"

using namespace prolrig;

static const HComponent* find_mu(const std::vector<HComponent>& comps, int p, int q, int t = 0) {
  for (const auto& c : comps)
    if (c.p == p && c.q == q && c.value_factor == t) return &c;
  return nullptr;
}

int main() {
  // sl(4), Sigma={1,2} (1-based), mu=(alpha_2,alpha_1)
  {
    RootSystem rs = RootSystem::simple({Family::A, 3});
    Grading g(rs, {0, 1});
    auto comps = harmonic_components(g);
    const HComponent* mu = find_mu(comps, 1, 0);
    if (!mu) { std::printf("A3: mu (2,1) missing\n"); return 1; }
    // fix monomial: j1 j2^2 = 1
    std::vector<int> mg = mu->multigrade;
    if (!(mg == std::vector<int>{-1, -2} || mg == std::vector<int>{1, 2})) {
      std::printf("A3 (2,1): multigrade %d,%d\n", mg[0], mg[1]);
      return 1;
    }
    // mu=(2,3): j1 = j2^2 i.e. exponents (1,-2) up to sign
    const HComponent* mu2 = find_mu(comps, 1, 2);
    std::vector<int> mg2 = mu2->multigrade;
    if (!(mg2 == std::vector<int>{-1, 2} || mg2 == std::vector<int>{1, -2})) {
      std::printf("A3 (2,3): multigrade %d,%d\n", mg2[0], mg2[1]);
      return 1;
    }
    // eigenvalue monomial of root -(a1+a2): (-1,-1)
    Coord c(3, 0);
    c[0] = c[1] = -1;
    if (eigenvalue_monomial(g, rs.root_index(c)) != std::vector<int>{-1, -1}) {
      std::printf("A3: root monomial wrong\n");
      return 1;
    }

    ConstraintSet cs = rigidity_locus(g, {*mu});
    SolvedConstraints sc = solve_constraints(cs);
    IntMat want = {{Int(1), Int(0)}, {Int(0), Int(2)}};  // j1=1, j2^2=1
    if (sc.lattice != want || sc.identity_only || sc.torsion != std::vector<Int>{Int(2)}) {
      std::printf("A3 (2,1): solved lattice wrong (rows=%zu)\n", sc.lattice.size());
      for (auto& r : sc.lattice) std::printf("  [%s %s]\n", r[0].str().c_str(), r[1].str().c_str());
      return 1;
    }
    EigenspaceInfo ei = one_eigenspace(g, sc, {*mu});
    int na1 = rs.negate_root(rs.simple_root_index(0));
    if (ei.roots != std::set<int>{na1} || ei.shape != Shape::PARABOLIC ||
        !ei.sigma_prime || *ei.sigma_prime != std::set<int>{1}) {
      std::printf("A3 (2,1): eigenspace/shape wrong (%s, %zu roots)\n", shape_name(ei.shape),
                  ei.roots.size());
      return 1;
    }

    // annihilator dense oracle on (A3,{1}), mu=(alpha_1,alpha_2)
    Grading gp(rs, {0});
    auto comps1 = harmonic_components(gp);
    const HComponent* m1 = find_mu(comps1, 0, 1);
    Cochain2 ph = phi0(gp, *m1);
    AnnihilatorSpace ann = annihilator(gp, ph);
    // dense: kernel of A -> A.phi over all of g0 (Cartan + layer-0 roots)
    std::vector<GVec> basis0;
    for (int j = 0; j < rs.rank(); ++j) basis0.push_back(GVec{{rs.num_roots() + j, Rat(1)}});
    for (int r : gp.layer(0)) basis0.push_back(GVec{{r, Rat(1)}});
    std::set<long long> keys;
    std::vector<SparseVec> cols;
    for (const GVec& b : basis0) {
      cols.push_back(flatten(rs, act(gp, b, ph)));
      for (auto& [k, v] : cols.back()) keys.insert(k);
    }
    RatMat eq;
    for (long long k : keys) {
      std::vector<Rat> row(basis0.size(), Rat(0));
      for (size_t j = 0; j < basis0.size(); ++j) {
        auto it = cols[j].find(k);
        if (it != cols[j].end()) row[j] = it->second;
      }
      eq.push_back(row);
    }
    size_t dense_dim = kernel_basis(std::move(eq), static_cast<int>(basis0.size())).size();
    size_t struct_dim = ann.cartan.size() + ann.roots.size();
    if (dense_dim != struct_dim) {
      std::printf("A3 {1}: ann dim %zu != dense %zu\n", struct_dim, dense_dim);
      return 1;
    }
    // ann contains all g0 lowering ops and is bracket-closed on root parts
    for (int n : gp.g0_nodes())
      if (!ann.roots.count(rs.negate_root(rs.simple_root_index(n)))) {
        std::printf("A3 {1}: lowering op missing from ann\n");
        return 1;
      }

    // a_i for mu=(2,1) on {1,2}: nesting invariant
    AnnihilatorSpace ann2 = annihilator(g, phi0(g, *mu));
    auto chain = prolongation_chain(g, ann2, g.k());
    for (size_t i = 1; i < chain.size(); ++i)
      for (int gam : chain[i].roots)
        for (int d : g.layer(-1)) {
          Coord s = rs.root(gam);
          for (int j = 0; j < rs.rank(); ++j) s[j] += rs.root(d)[j];
          int w = rs.root_index(s);
          if (w >= 0 && !chain[i - 1].roots.count(w)) {
            std::printf("nesting violated\n");
            return 1;
          }
        }
    // intersect of per-component chains == chain of joint annihilator
    auto joint = a_spaces(g, {*mu, *mu2});
    auto c1 = prolongation_chain(g, annihilator(g, phi0(g, *mu)), g.k());
    auto c2 = prolongation_chain(g, annihilator(g, phi0(g, *mu2)), g.k());
    for (int i = 0; i < g.k(); ++i) {
      ProlongationSpace inter = intersect_prolongations({c1[i], c2[i]});
      if (inter.roots != joint[i].roots) {
        std::printf("intersection mismatch at degree %d\n", i + 1);
        return 1;
      }
    }
  }

  // sl(4), Sigma={1}, mu=(alpha_1,alpha_2): j1^2=1, shape ZERO
  {
    RootSystem rs = RootSystem::simple({Family::A, 3});
    Grading g(rs, {0});
    auto comps = harmonic_components(g);
    const HComponent* mu = find_mu(comps, 0, 1);
    SolvedConstraints sc = solve_constraints(rigidity_locus(g, {*mu}));
    if (sc.lattice != IntMat{{Int(2)}} || sc.torsion != std::vector<Int>{Int(2)}) {
      std::printf("A3 {1}: expected j^2=1\n");
      return 1;
    }
    EigenspaceInfo ei = one_eigenspace(g, sc, {*mu});
    if (ei.shape != Shape::ZERO || !ei.roots.empty()) {
      std::printf("A3 {1}: expected shape zero, got %s\n", shape_name(ei.shape));
      return 1;
    }
  }

  // G2, Sigma={1}, mu=(alpha_1,alpha_2): order-4 torsion
  {
    RootSystem rs = RootSystem::simple({Family::G, 2});
    Grading g(rs, {0});
    auto comps = harmonic_components(g);
    const HComponent* mu = find_mu(comps, 0, 1);
    if (!mu) { std::printf("G2: mu missing\n"); return 1; }
    SolvedConstraints sc = solve_constraints(rigidity_locus(g, {*mu}));
    if (sc.lattice != IntMat{{Int(4)}}) {
      std::printf("G2 {1}: lattice rows=%zu", sc.lattice.size());
      if (!sc.lattice.empty()) std::printf(" [%s]", sc.lattice[0][0].str().c_str());
      std::printf("\n");
      return 1;
    }
  }

  // sl(5), Sigma={2,3}, mu=(alpha_3,alpha_2): identity-only locus
  {
    RootSystem rs = RootSystem::simple({Family::A, 4});
    Grading g(rs, {1, 2});
    auto comps = harmonic_components(g);
    const HComponent* mu = find_mu(comps, 2, 1);
    if (!mu) { std::printf("A4: mu missing\n"); return 1; }
    SolvedConstraints sc = solve_constraints(rigidity_locus(g, {*mu}));
    if (!sc.identity_only) {
      std::printf("A4 {2,3} (3,2): expected identity-only\n");
      for (auto& r : sc.lattice)
        std::printf("  [%s %s]\n", r[0].str().c_str(), r[1].str().c_str());
      return 1;
    }
  }

  std::printf("all prolong/center checks passed\n");
  return 0;
}
