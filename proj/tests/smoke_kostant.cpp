// scratch harness, not part of the suite
#include <cstdio>

#include "prolrig/kostant.hpp"

using namespace prolrig;

static std::string wstr(const WCoord& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += rat_num(w[i]).str();
    if (rat_den(w[i]) != 1) s += "/" + rat_den(w[i]).str();
  }
  return s + ")";
}

static int check_grading(const RootSystem& rs, std::vector<int> sigma, bool verbose) {
  Grading g(rs, sigma);
  auto comps = harmonic_components(g);
  H2Summary bf = brute_force_h2(g);
  // multiset of lowest weights from the word construction
  std::map<WCoord, int> want;
  Int dimsum = 0;
  for (const auto& c : comps) {
    want[c.lowest_weight] += 1;
    dimsum += weyl_dim(g, c.highest_weight);
    auto basis = realize_component(g, c);  // throws on Weyl-dimension mismatch
    (void)basis;
    // cross-check: lowest weight equals the shifted affine action of the word
    WCoord th = rs.root_wcoord(rs.highest_root(c.value_factor));
    WCoord aff = rs.affine_action({c.p, c.q}, th);
    for (size_t j = 0; j < aff.size(); ++j)
      if (-aff[j] != c.lowest_weight[j]) {
        std::printf("affine-action mismatch\n");
        return 1;
      }
  }
  std::map<WCoord, int> got;
  for (const auto& [w, m] : bf.lowest) got[w] = m;
  if (want != got || dimsum != bf.dim) {
    std::printf("MISMATCH sigma={");
    for (int s : sigma) std::printf("%d ", s);
    std::printf("}: words=%zu bf_dim=%d dimsum=%s\n", comps.size(), bf.dim, dimsum.str().c_str());
    for (const auto& [w, m] : want) std::printf("  want %s x%d\n", wstr(w).c_str(), m);
    for (const auto& [w, m] : got) std::printf("  got  %s x%d\n", wstr(w).c_str(), m);
    return 1;
  }
  if (verbose)
    std::printf("  ok sigma size %zu: %zu components, H2 dim %d\n", sigma.size(), comps.size(),
                bf.dim);
  return 0;
}

int main() {
  // frozen basics
  {
    RootSystem rs = RootSystem::simple({Family::A, 3});
    Grading g(rs, {1});  // crossed node alpha_2 (0-based 1)
    if (g.k() != 1 || g.layer(-1).size() != 4) {
      std::printf("A3 {2}: bad layers\n");
      return 1;
    }
    Grading g2(rs, {0, 1});
    if (g2.k() != 2 || g2.layer(-1).size() != 3 || g2.layer(-2).size() != 2) {
      std::printf("A3 {1,2}: bad layers\n");
      return 1;
    }
    auto comps = g0_components(g2, -1);
    if (comps.size() != 2) {
      std::printf("A3 {1,2}: bad component count %zu\n", comps.size());
      return 1;
    }
    std::vector<std::vector<int>> mgs;
    for (auto& c : comps) mgs.push_back(c.multigrade);
    std::sort(mgs.begin(), mgs.end());
    if (mgs != std::vector<std::vector<int>>{{-1, 0}, {0, -1}}) {
      std::printf("A3 {1,2}: bad multigrades\n");
      return 1;
    }
    // parabolic closure of {-alpha_1}
    int a1 = rs.negate_root(rs.simple_root_index(0));
    auto cl = parabolic_closure(g2, {a1});
    if (!cl || *cl != std::set<int>{1}) {
      std::printf("A3 {1,2}: bad parabolic closure\n");
      return 1;
    }
    // harmonic labels contain (1,2),(2,1),(2,3) in 1-based nodes
    auto h = harmonic_components(g2);
    std::set<std::pair<int, int>> labels;
    for (auto& c : h) labels.insert({c.p + 1, c.q + 1});
    for (auto need : {std::pair{1, 2}, {2, 1}, {2, 3}})
      if (!labels.count(need)) {
        std::printf("A3 {1,2}: missing label (%d,%d)\n", need.first, need.second);
        return 1;
      }
  }
  {
    RootSystem rs = RootSystem::simple({Family::G, 2});
    Grading g(rs, {0});
    if (g.k() != 3) {
      std::printf("G2 {1}: k=%d\n", g.k());
      return 1;
    }
  }
  {
    RootSystem rs = RootSystem::simple({Family::A, 1});
    Grading g(rs, {0});
    if (!harmonic_components(g).empty() || brute_force_h2(g).dim != 0) {
      std::printf("A1 {1}: H2 not empty\n");
      return 1;
    }
  }

  // word construction vs direct cohomology on every grading of small types
  std::vector<SimpleType> types = {{Family::A, 1}, {Family::A, 2}, {Family::A, 3},
                                   {Family::B, 2}, {Family::B, 3}, {Family::C, 3},
                                   {Family::D, 3}, {Family::G, 2}};
  for (SimpleType t : types) {
    for (int doubledv = 0; doubledv < 2; ++doubledv) {
      if (doubledv && t.rank > 2) continue;  // keep the scratch run quick
      RootSystem rs = doubledv ? RootSystem::doubled(t) : RootSystem::simple(t);
      std::printf("%s%s:\n", type_name(t).c_str(), doubledv ? " doubled" : "");
      int n = t.rank;
      for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> sigma;
        for (int i = 0; i < n; ++i)
          if (mask & (1 << i)) sigma.push_back(i);
        if (doubledv) {
          // cross the mirrored nodes too, as for a complex parabolic
          size_t m = sigma.size();
          for (size_t i = 0; i < m; ++i) sigma.push_back(sigma[i] + n);
        }
        if (check_grading(rs, sigma, true)) return 1;
      }
    }
  }
  std::printf("all kostant checks passed\n");
  return 0;
}
