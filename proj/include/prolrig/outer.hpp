#pragma once

#include "classify.hpp"

namespace prolrig {

/// Node permutations of one simple factor generating its outer automorphism
/// group (diagram symmetries), identity excluded.
inline std::vector<std::vector<int>> diagram_symmetries(SimpleType t) {
  std::vector<std::vector<int>> out;
  const int n = t.rank;
  auto idperm = [&] {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
  };
  switch (t.family) {
    case Family::A:
      if (n >= 2) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
        out.push_back(std::move(p));
      }
      break;
    case Family::D:
      if (n == 4) {
        // full S3 on the three outer nodes 0, 2, 3
        const int outer[3] = {0, 2, 3};
        int perm3[5][3] = {{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (auto& q : perm3) {
          std::vector<int> p = idperm();
          for (int i = 0; i < 3; ++i) p[outer[i]] = outer[q[i]];
          out.push_back(std::move(p));
        }
      } else if (n >= 3) {
        std::vector<int> p = idperm();
        std::swap(p[n - 1], p[n - 2]);
        out.push_back(std::move(p));
      }
      break;
    case Family::E:
      if (n == 6) {
        // Bourbaki: 1<->6, 3<->5 (0-based: 0<->5, 2<->4)
        std::vector<int> p = idperm();
        std::swap(p[0], p[5]);
        std::swap(p[2], p[4]);
        out.push_back(std::move(p));
      }
      break;
    default:
      break;
  }
  return out;
}

/// Outer automorphisms of the realized (possibly doubled) algebra that are
/// compatible with the given real form: node permutations commuting with the
/// conjugation involution and preserving compact nodes. For doubled systems
/// a diagram symmetry acts diagonally on both factors; the factor swap acts
/// trivially on the combinatorial data and is omitted.
inline std::vector<std::vector<int>> form_symmetries(const RootSystem& rs, const FormSpec& fs) {
  std::vector<std::vector<int>> cand;
  const int n = rs.rank();
  {
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    cand.push_back(std::move(id));
  }
  const int fr = rs.factors()[0].rank;
  for (const std::vector<int>& p : diagram_symmetries(rs.factors()[0])) {
    std::vector<int> q(n);
    for (int i = 0; i < fr; ++i) {
      q[i] = p[i];
      if (rs.num_factors() == 2) q[i + fr] = p[i] + fr;
    }
    cand.push_back(std::move(q));
  }
  std::vector<std::vector<int>> out;
  for (const auto& p : cand) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (fs.node_iota[p[i]] != p[fs.node_iota[i]]) ok = false;
      if (!fs.compact.empty() && fs.compact[p[i]] != fs.compact[i]) ok = false;
    }
    if (ok) out.push_back(p);
  }
  return out;
}

inline std::vector<int> apply_perm_sigma(const std::vector<int>& perm,
                                         const std::vector<int>& sigma) {
  std::vector<int> out;
  out.reserve(sigma.size());
  for (int a : sigma) out.push_back(perm[a]);
  std::sort(out.begin(), out.end());
  return out;
}

/// Canonical form of a crossed set under the form symmetries; used to list
/// each grading once up to outer automorphisms.
inline bool sigma_is_canonical(const RootSystem& rs, const FormSpec& fs,
                               const std::vector<int>& sigma) {
  for (const auto& p : form_symmetries(rs, fs))
    if (apply_perm_sigma(p, sigma) < sigma) return false;
  return true;
}

/// Image of a record's key set under a node permutation fixing sigma.
inline std::vector<std::tuple<int, int, int>> apply_perm_record(
    const RootSystem& rs, const std::vector<int>& perm, const MuRecord& rec) {
  std::vector<std::tuple<int, int, int>> k;
  for (const HComponent& c : rec.comps) {
    int p = perm[c.p], q = perm[c.q];
    if (p > q && rs.cartan(p, q) == 0) std::swap(p, q);
    k.emplace_back(p, q, c.value_factor);
  }
  std::sort(k.begin(), k.end());
  return k;
}

/// Partition the records of a grading into orbits under the symmetries that
/// preserve the crossed set; returns the representative index for each record.
inline std::vector<int> record_orbit_reps(const Grading& g, const FormSpec& fs,
                                          const std::vector<MuRecord>& recs) {
  const RootSystem& rs = g.rs();
  std::vector<std::vector<int>> stab;
  for (const auto& p : form_symmetries(rs, fs))
    if (apply_perm_sigma(p, g.sigma()) == g.sigma()) stab.push_back(p);
  std::map<std::vector<std::tuple<int, int, int>>, int> by_key;
  for (size_t i = 0; i < recs.size(); ++i) by_key[recs[i].keys()] = static_cast<int>(i);
  std::vector<int> rep(recs.size());
  for (size_t i = 0; i < recs.size(); ++i) {
    int best = static_cast<int>(i);
    for (const auto& p : stab) {
      auto img = apply_perm_record(rs, p, recs[i]);
      auto it = by_key.find(img);
      if (it != by_key.end() && it->second < best) best = it->second;
    }
    rep[i] = best;
  }
  return rep;
}

} // namespace prolrig
