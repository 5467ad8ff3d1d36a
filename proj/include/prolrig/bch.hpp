#pragma once

#include "center.hpp"

namespace prolrig {

inline bool in_pplus(const Grading& g, const GVec& v) {
  for (const auto& [b, c] : v)
    if (b >= g.rs().num_roots() || g.sheight(b) < 1) return false;
  return true;
}

inline GVec gneg(GVec v) {
  for (auto& [b, c] : v) c = -c;
  return v;
}

inline int lowest_degree(const Grading& g, const GVec& v) {
  int d = g.k() + 1;
  for (const auto& [b, c] : v) d = std::min(d, g.sheight(b));
  return d;  // k+1 means zero element
}

inline GVec graded_component(const Grading& g, const GVec& v, int i) {
  GVec out;
  for (const auto& [b, c] : v)
    if (g.sheight(b) == i) out[b] = c;
  return out;
}

/// Center element with nonzero rational eigenvalues, one per crossed node.
/// (Constraint solving uses the full root-of-unity model; the BCH layer works
/// over the rationals, which covers every defect identity under test.)
struct RatCenter {
  std::vector<Rat> j;
};

inline Rat s_eigenvalue(const Grading& g, const RatCenter& s, int rootidx) {
  if (s.j.size() != g.sigma().size()) throw std::invalid_argument("center element size mismatch");
  Rat v(1);
  std::vector<int> mg = g.multigrade(rootidx);
  for (size_t a = 0; a < mg.size(); ++a) {
    if (s.j[a] == 0) throw std::invalid_argument("center element with zero eigenvalue");
    for (int e = 0; e < std::abs(mg[a]); ++e) v *= s.j[a];
    if (mg[a] < 0) v = 1 / v;
  }
  return v;
}

/// Ad(s) acts on each root space by the eigenvalue monomial.
inline GVec ad_s(const Grading& g, const RatCenter& s, GVec v, bool inverse = false) {
  for (auto& [b, c] : v) {
    Rat e = s_eigenvalue(g, s, b);
    c = inverse ? Rat(c / e) : Rat(c * e);
  }
  return v;
}

/// C(X,Y) = log(exp X * exp Y) in p_+, computed exactly through the adjoint
/// representation: L = log(e^{ad X} e^{ad Y}) is ad of the result, which is
/// read off from L applied to the grading element.
inline GVec bch(const Grading& g, const GVec& X, const GVec& Y) {
  const RootSystem& rs = g.rs();
  if (!in_pplus(g, X) || !in_pplus(g, Y)) throw std::invalid_argument("bch: input not in p_+");

  auto expad = [&](const GVec& z, GVec v) {
    GVec acc = v;
    GVec term = std::move(v);
    for (int m = 1; !term.empty(); ++m) {
      GVec nxt = rs.bracket(z, term);
      for (auto& [b, c] : nxt) c /= m;
      gvec_add(acc, nxt);
      term = std::move(nxt);
    }
    return acc;
  };
  auto napply = [&](const GVec& v) {
    GVec out = expad(X, expad(Y, v));
    gvec_add(out, v, Rat(-1));
    return out;
  };

  // grading element: <alpha_i, h> = 1 for all i
  GVec h;
  {
    RatMat aug(rs.rank(), std::vector<Rat>(rs.rank() + 1, Rat(0)));
    for (int i = 0; i < rs.rank(); ++i) {
      for (int j = 0; j < rs.rank(); ++j) aug[i][j] = rs.cartan(j, i);
      aug[i][rs.rank()] = 1;
    }
    std::vector<int> piv = rref(aug);
    assert(static_cast<int>(piv.size()) == rs.rank());
    for (int j = 0; j < rs.rank(); ++j)
      if (aug[j][rs.rank()] != 0) h[rs.num_roots() + j] = aug[j][rs.rank()];
  }

  // L(h) with L = sum (-1)^{m+1} N^m / m; N strictly raises the lowest degree
  GVec cur = napply(h);
  GVec lh = cur;
  for (int m = 2; !cur.empty(); ++m) {
    cur = napply(cur);
    gvec_add(lh, cur, Rat((m % 2) ? 1 : -1) / m);
  }
  // ad(Z)(h) = -sum c_gamma height(gamma) e_gamma
  GVec z;
  for (const auto& [b, c] : lh) {
    assert(b < rs.num_roots() && g.sheight(b) >= 1);
    z[b] = -c / rs.height(b);
  }
  return z;
}

/// C(-Ad(s)^{-1} Y, Y): how far the frame change by Y is from commuting with s.
inline GVec symmetry_defect(const Grading& g, const GVec& Y, const RatCenter& s) {
  if (!in_pplus(g, Y)) throw std::invalid_argument("symmetry_defect: input not in p_+");
  return bch(g, gneg(ad_s(g, s, Y, true)), Y);
}

/// Defect after changing the Weyl structure by upsilon:
/// C(Ad(s)^{-1}(upsilon), C(defect, -upsilon)). On a single degree-i bucket of
/// Ad(s)-eigenvalue a with upsilon = r * defect this scales the bucket by
/// (r(1-a)+a)/a, which is what the normalization iteration relies on.
inline GVec transform_defect(const Grading& g, const GVec& defect, const GVec& upsilon,
                             const RatCenter& s) {
  if (!in_pplus(g, defect) || !in_pplus(g, upsilon))
    throw std::invalid_argument("transform_defect: input not in p_+");
  return bch(g, ad_s(g, s, upsilon, true), bch(g, defect, gneg(upsilon)));
}

struct InvariantizeResult {
  bool ok = true;
  int obstruction_degree = -1;  // degree of the 1-eigenvalue bucket when !ok
  std::vector<GVec> upsilons;
  GVec residual;  // zero when ok
};

/// Iteratively chooses upsilon_i = sum_{a != 1} a/(a-1) tau_i(a) on the lowest
/// nonzero degree and transforms the defect; reaches exactly zero in at most k
/// steps unless a 1-eigenvalue bucket obstructs.
inline InvariantizeResult invariantize(const Grading& g, GVec defect, const RatCenter& s) {
  InvariantizeResult out;
  while (!defect.empty()) {
    int i = lowest_degree(g, defect);
    GVec di = graded_component(g, defect, i);
    GVec ups;
    for (const auto& [b, c] : di) {
      Rat a = s_eigenvalue(g, s, b);
      if (a == 1) {
        out.ok = false;
        out.obstruction_degree = i;
        out.residual = std::move(defect);
        return out;
      }
      ups[b] = a / (a - 1) * c;
    }
    out.upsilons.push_back(ups);
    GVec nxt = transform_defect(g, defect, ups, s);
    assert(lowest_degree(g, nxt) > i);
    defect = std::move(nxt);
  }
  return out;
}

} // namespace prolrig
