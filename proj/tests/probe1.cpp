// scratch harness, not part of the suite
#include <cstdio>
#include <string>

#include "prolrig/center.hpp"

using namespace prolrig;

static void show(const char* name, const RootSystem& rs, std::vector<int> sigma) {
  Grading g(rs, sigma);
  auto comps = harmonic_components(g);
  std::printf("== %s sigma={", name);
  for (int s : sigma) std::printf("%d,", s);
  std::printf("}\n");
  for (const auto& c : comps) {
    std::printf("  mu (%d,%d) t=%d mg=[", c.p, c.q, c.value_factor);
    for (int m : c.multigrade) std::printf("%d,", m);
    std::printf("] hom=%d\n", c.homogeneity);
  }
  for (const auto& c : comps) {
    std::vector<HComponent> mu{c};
    // add conjugate component for doubled systems: mirror of (p,q)
    if (rs.num_factors() == 2) {
      int mp = rs.mirror_node(c.p), mq = rs.mirror_node(c.q);
      for (const auto& d : comps)
        if (d.p == mp && d.q == mq && &d != &c) { mu.push_back(d); break; }
    }
    std::printf("  --- record mu=(%d,%d)t%d nmu=%zu\n", c.p, c.q, c.value_factor, mu.size());
    auto as = a_spaces(g, mu);
    for (const auto& ps : as) {
      std::printf("    a_%d buckets:", ps.degree);
      for (int r : ps.roots) {
        auto m = g.multigrade(r);
        std::printf(" [");
        for (int x : m) std::printf("%d,", x);
        std::printf("]");
      }
      std::printf("\n");
    }
    ConstraintSet fixcs;
    fixcs.nsym = (int)g.sigma().size();
    for (const auto& m : mu) fixcs.add(m.multigrade);
    auto fix = solve_constraints(fixcs);
    std::printf("    fix lattice:");
    for (auto& row : fix.lattice) {
      std::printf(" (");
      for (auto& x : row) std::printf("%lld,", x.convert_to<long long>());
      std::printf(")");
    }
    auto rig = solve_constraints(rigidity_locus(g, mu));
    std::printf("  rig lattice:");
    for (auto& row : rig.lattice) {
      std::printf(" (");
      for (auto& x : row) std::printf("%lld,", x.convert_to<long long>());
      std::printf(")");
    }
    std::printf(" free=%d tors:", rig.free_rank);
    for (auto& t : rig.torsion) std::printf("%lld,", t.convert_to<long long>());
    std::printf("%s\n", rig.identity_only ? " IDENTITY-ONLY" : "");
  }
}

int main() {
  {
    RootSystem rs = RootSystem::simple({Family::A, 2});
    show("A2", rs, {0, 1});
    show("A2", rs, {0});
  }
  {
    RootSystem rs = RootSystem::doubled({Family::A, 2});
    show("A2xA2", rs, {0, 1, 2, 3});
  }
  {
    RootSystem rs = RootSystem::simple({Family::B, 2});
    show("B2", rs, {0, 1});
  }
  {
    RootSystem rs = RootSystem::doubled({Family::B, 2});
    show("B2xB2", rs, {0, 1, 2, 3});
  }
  {
    RootSystem rs = RootSystem::simple({Family::A, 3});
    show("A3", rs, {0, 2});   // {1,n}
    show("A3", rs, {0, 1});   // path
  }
  {
    RootSystem rs = RootSystem::simple({Family::G, 2});
    show("G2", rs, {0});
  }
  return 0;
}
