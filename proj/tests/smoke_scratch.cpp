// scratch harness, not part of the suite
#include <cstdio>
#include <random>

#include "prolrig/rootsys.hpp"

using namespace prolrig;

static bool jacobi_ok(const RootSystem& rs, int a, int b, int c) {
  GVec s = rs.bracket(rs.bracket_basis(a, b), GVec{{c, Rat(1)}});
  gvec_add(s, rs.bracket(rs.bracket_basis(b, c), GVec{{a, Rat(1)}}));
  gvec_add(s, rs.bracket(rs.bracket_basis(c, a), GVec{{b, Rat(1)}}));
  return s.empty();
}

int main() {
  std::vector<SimpleType> types;
  for (int n = 1; n <= 8; ++n) types.push_back({Family::A, n});
  for (int n = 2; n <= 8; ++n) types.push_back({Family::B, n});
  for (int n = 2; n <= 8; ++n) types.push_back({Family::C, n});
  for (int n = 3; n <= 8; ++n) types.push_back({Family::D, n});
  types.push_back({Family::E, 6});
  types.push_back({Family::E, 7});
  types.push_back({Family::E, 8});
  types.push_back({Family::F, 4});
  types.push_back({Family::G, 2});
  std::mt19937 rng(7);
  for (SimpleType t : types) {
    RootSystem rs = RootSystem::simple(t);
    int want = classical_root_count(t);
    if (rs.num_roots() != want) {
      std::printf("%s: root count %d != %d\n", type_name(t).c_str(), rs.num_roots(), want);
      return 1;
    }
    int dim = rs.num_roots() + rs.rank();
    int fails = 0, trials = (dim <= 30) ? 0 : 20000;
    if (trials == 0) {
      for (int a = 0; a < dim; ++a)
        for (int b = a; b < dim; ++b)
          for (int c = b; c < dim; ++c)
            if (!jacobi_ok(rs, a, b, c)) ++fails;
    } else {
      std::uniform_int_distribution<int> d(0, dim - 1);
      for (int i = 0; i < trials; ++i)
        if (!jacobi_ok(rs, d(rng), d(rng), d(rng))) ++fails;
    }
    // sl2 normalization: [e,f]=h with <alpha,h>=2
    for (int i = 0; i < rs.rank(); ++i) {
      int e = rs.simple_root_index(i);
      GVec h = rs.bracket_basis(e, rs.negate_root(e));
      GVec back = rs.bracket(h, GVec{{e, Rat(1)}});
      if (back.size() != 1 || back.begin()->second != 2) {
        std::printf("%s: sl2 normalization broken at node %d\n", type_name(t).c_str(), i);
        return 1;
      }
    }
    std::printf("%s: roots=%d jacobi_fails=%d\n", type_name(t).c_str(), rs.num_roots(), fails);
    if (fails) return 1;
  }
  RootSystem d2 = RootSystem::doubled({Family::A, 2});
  std::printf("doubled A2: roots=%d rank=%d\n", d2.num_roots(), d2.rank());
  return 0;
}
