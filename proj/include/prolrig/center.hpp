#pragma once

#include "prolong.hpp"

namespace prolrig {

/// Constraints "monomial in the j symbols equals 1", one exponent row per
/// constraint, symbols indexed by the crossed nodes in increasing order.
struct ConstraintSet {
  int nsym = 0;
  std::vector<std::vector<Int>> rows;

  void add(const std::vector<int>& exps) {
    std::vector<Int> r(exps.begin(), exps.end());
    bool zero = true;
    for (const Int& x : r) zero = zero && x == 0;
    if (zero) return;
    for (const auto& e : rows)
      if (e == r) return;
    rows.push_back(std::move(r));
  }
};

/// Exponent vector of the eigenvalue of s on a root space.
inline std::vector<int> eigenvalue_monomial(const Grading& g, int rootidx) {
  return g.multigrade(rootidx);
}
inline std::vector<int> eigenvalue_monomial(const Grading&, const HComponent& c) {
  return c.multigrade;
}
inline std::vector<int> eigenvalue_monomial(const Grading&, const IrreducibleComponent& c) {
  return c.multigrade;
}

/// Fix-mu constraints plus the rigidity conditions from the intersected
/// prolongation spaces a_i.
inline ConstraintSet rigidity_locus(const Grading& g, const std::vector<HComponent>& mu_set) {
  if (mu_set.empty()) throw std::invalid_argument("rigidity_locus: empty mu set");
  ConstraintSet cs;
  cs.nsym = static_cast<int>(g.sigma().size());
  for (const HComponent& m : mu_set) cs.add(m.multigrade);
  for (const ProlongationSpace& ps : a_spaces(g, mu_set))
    for (int r : ps.roots) cs.add(g.multigrade(r));
  return cs;
}

/// Constraint lattice in a normal form: HNF basis, invariant factors, free
/// rank of the solution group, and the identity-only flag.
struct SolvedConstraints {
  int nsym = 0;
  IntMat lattice;            // HNF rows spanning the constraint lattice
  std::vector<Int> torsion;  // invariant factors > 1 of the solution group
  int free_rank = 0;
  bool identity_only = false;

  bool operator==(const SolvedConstraints& o) const {
    return nsym == o.nsym && lattice == o.lattice;
  }
};

inline SolvedConstraints solve_constraints(const ConstraintSet& cs) {
  SolvedConstraints out;
  out.nsym = cs.nsym;
  IntMat m = cs.rows;
  out.lattice = hermite(m);
  int r = static_cast<int>(out.lattice.size());
  out.free_rank = cs.nsym - r;
  if (!m.empty()) {
    SmithForm sf = smith(cs.rows);
    for (const Int& d : sf.diag)
      if (d > 1) out.torsion.push_back(d);
  }
  out.identity_only = (out.free_rank == 0 && out.torsion.empty());
  return out;
}

/// Does every solution of the constraints satisfy monomial(exps) = 1?
/// Equivalent to membership of the exponent vector in the constraint lattice.
inline bool forced_trivial(const SolvedConstraints& sc, const std::vector<int>& exps) {
  std::vector<Int> v(exps.begin(), exps.end());
  return in_lattice(sc.lattice, v);
}

enum class Shape { ZERO, PARABOLIC, G1_ZERO, G1_IN_PARABOLIC, OTHER };

inline const char* shape_name(Shape s) {
  switch (s) {
    case Shape::ZERO: return "zero";
    case Shape::PARABOLIC: return "parabolic";
    case Shape::G1_ZERO: return "g1-zero";
    case Shape::G1_IN_PARABOLIC: return "g1-in-parabolic";
    case Shape::OTHER: return "other";
  }
  return "?";
}

struct EigenspaceInfo {
  std::set<int> roots;  // negative roots fixed by every qualifying s
  Shape shape = Shape::OTHER;
  std::optional<std::set<int>> sigma_prime;  // crossed set of q when parabolic
};

/// 1-eigenspace of a generic qualifying s in g_-, with the structural
/// trichotomy used to group the classification.
inline EigenspaceInfo one_eigenspace(const Grading& g, const SolvedConstraints& sc,
                                     const std::vector<HComponent>& mu_set) {
  if (sc.identity_only) throw std::invalid_argument("one_eigenspace: identity-only locus");
  EigenspaceInfo out;
  const RootSystem& rs = g.rs();
  for (int r = 0; r < rs.num_roots(); ++r)
    if (g.in_gminus(r) && forced_trivial(sc, g.multigrade(r))) out.roots.insert(r);
  if (out.roots.empty()) {
    out.shape = Shape::ZERO;
    return out;
  }
  auto inserts = [&](const std::set<int>& part) {
    for (const HComponent& m : mu_set)
      if (!inserts_trivially(realize_component(g, m), part)) return false;
    return true;
  };
  if (auto cl = parabolic_closure(g, out.roots); cl && inserts(out.roots)) {
    out.shape = Shape::PARABOLIC;
    out.sigma_prime = *cl;
    return out;
  }
  std::set<int> e1;
  for (int r : out.roots)
    if (g.sheight(r) == -1) e1.insert(r);
  if (e1.empty()) {
    out.shape = Shape::G1_ZERO;
    return out;
  }
  if (auto cl = parabolic_closure(g, e1); cl && inserts(e1)) {
    out.shape = Shape::G1_IN_PARABOLIC;
    out.sigma_prime = *cl;
    return out;
  }
  out.shape = Shape::OTHER;
  return out;
}

} // namespace prolrig
