#pragma once

#include <memory>
#include <queue>

#include "locus.hpp"

namespace prolrig {

/// Description of a real form of a (possibly doubled) complex algebra:
/// an involution on the nodes giving the conjugation action on root spaces,
/// plus the nodes that cannot be crossed.
struct FormSpec {
  std::string tag;
  SimpleType type;                // type of one simple factor
  bool doubled = false;           // complex algebra viewed as real
  std::vector<int> node_iota;     // involution on nodes of the realized system
  std::vector<bool> compact;      // per node of the realized system
  bool external_domain = false;   // domain data imported; label-level checks only
};

/// Conjugation-closed harmonic component set: one curvature slot of the real
/// classification problem (two components when conjugation moves the slot).
struct MuRecord {
  std::vector<HComponent> comps;

  std::vector<std::tuple<int, int, int>> keys() const {
    std::vector<std::tuple<int, int, int>> k;
    for (const HComponent& c : comps) k.emplace_back(c.p, c.q, c.value_factor);
    std::sort(k.begin(), k.end());
    return k;
  }
};

inline const HComponent* find_component(const std::vector<HComponent>& all, const RootSystem& rs,
                                         int p, int q, int t) {
  for (const HComponent& c : all)
    if (c.p == p && c.q == q && c.value_factor == t) return &c;
  if (rs.cartan(p, q) == 0)
    for (const HComponent& c : all)
      if (c.p == q && c.q == p && c.value_factor == t) return &c;
  return nullptr;
}

inline std::vector<MuRecord> enumerate_records(const Grading& g, const FormSpec& fs) {
  std::vector<HComponent> comps = harmonic_components(g);
  std::set<std::tuple<int, int, int>> used;
  std::vector<MuRecord> out;
  for (const HComponent& c : comps) {
    std::tuple<int, int, int> key{c.p, c.q, c.value_factor};
    if (used.count(key)) continue;
    int cp = fs.node_iota[c.p], cq = fs.node_iota[c.q];
    int ct = fs.doubled ? 1 - c.value_factor : c.value_factor;
    const HComponent* d = find_component(comps, g.rs(), cp, cq, ct);
    if (!d) throw std::logic_error("enumerate_records: conjugate component missing");
    MuRecord rec;
    rec.comps.push_back(c);
    used.insert(key);
    std::tuple<int, int, int> dkey{d->p, d->q, d->value_factor};
    if (dkey != key) {
      rec.comps.push_back(*d);
      used.insert(dkey);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

/// Real structure on the symbol coordinates induced by the node involution.
inline RealStructure crossing_structure(const Grading& g, const FormSpec& fs) {
  const std::vector<int>& sig = g.sigma();
  RealStructure rst;
  rst.iota.resize(sig.size());
  for (size_t i = 0; i < sig.size(); ++i) {
    int img = fs.node_iota[sig[i]];
    auto it = std::lower_bound(sig.begin(), sig.end(), img);
    if (it == sig.end() || *it != img)
      throw std::invalid_argument("crossed set not stable under the form involution");
    rst.iota[i] = static_cast<int>(it - sig.begin());
  }
  return rst;
}

/// Distinct eigencharacters on g_-: multigrade -> root indices.
struct ChunkTable {
  std::vector<std::vector<int>> mgs;
  std::map<std::vector<int>, std::vector<int>> roots;

  ChunkTable() = default;
  explicit ChunkTable(const Grading& g) {
    for (int r = 0; r < g.rs().num_roots(); ++r) {
      if (!g.in_gminus(r)) continue;
      std::vector<int> mg = g.multigrade(r);
      auto [it, fresh] = roots.emplace(mg, std::vector<int>{});
      it->second.push_back(r);
      if (fresh) mgs.push_back(mg);
    }
    std::sort(mgs.begin(), mgs.end());
  }
};

inline bool fixes_everything(const LogGroup& h, const ChunkTable& ct) {
  for (const auto& mg : ct.mgs)
    if (!h.satisfies(mg)) return false;
  return true;
}

enum class RowClass {
  SUPPRESSED,    // no nontrivial symmetry fixes the slot
  NO_SYMMETRY,   // fixed but never rigid: listed as never-rigid
  FLAT_ONLY,     // rigid, but only flat geometries exist (calibrated cases)
  ZERO_ALL,      // every qualifying symmetry acts freely on g_-
  PARABOLIC_ALL, // 1-eigenspace + p always parabolic with trivial insertions
  G1ZERO_ALL,    // 1-eigenspace always avoids g_{-1}
  SANDWICH_ALL,  // a parabolic between g_{-1}-part + p and the eigenspace + p
  NONTRIVIAL     // some symmetry has g_{-1}-part inserting non-trivially
};

inline const char* row_class_name(RowClass c) {
  switch (c) {
    case RowClass::SUPPRESSED: return "suppressed";
    case RowClass::NO_SYMMETRY: return "never-rigid";
    case RowClass::FLAT_ONLY: return "flat-only";
    case RowClass::ZERO_ALL: return "zero";
    case RowClass::PARABOLIC_ALL: return "parabolic";
    case RowClass::G1ZERO_ALL: return "g1-zero";
    case RowClass::SANDWICH_ALL: return "sandwich";
    case RowClass::NONTRIVIAL: return "nontrivial-insertion";
  }
  return "?";
}

struct StratumInfo {
  std::set<std::vector<int>> pattern;  // fixed chunk multigrades
  bool zero = false, parabolic = false, e1_zero = false, sandwich = false;
};

struct RecordClassification {
  MuRecord rec;
  LogGroup fix, rig;
  RowClass cls = RowClass::SUPPRESSED;
  std::vector<StratumInfo> strata;
  int table = 0;  // 1..15, or 0 when not listed
};

namespace detail {

inline bool subset_roots(const std::set<int>& a, const std::set<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace detail

/// Classify one curvature slot by the worst case over all realized strata of
/// its rigidity locus.
inline RecordClassification classify_record(const Grading& g, const FormSpec& fs,
                                            const MuRecord& rec) {
  RecordClassification out;
  out.rec = rec;
  LogLayout lay(crossing_structure(g, fs));
  ChunkTable chunks(g);

  LogGroup fix(lay);
  for (const HComponent& c : rec.comps) fix.add_monomial(c.multigrade);
  fix.solve();
  out.fix = fix;
  if (fixes_everything(fix, chunks)) {
    out.cls = RowClass::SUPPRESSED;
    return out;
  }

  LogGroup rig = fix;
  for (const ProlongationSpace& ps : a_spaces(g, rec.comps))
    for (int r : ps.roots) rig.add_monomial(g.multigrade(r));
  rig.solve();
  out.rig = rig;
  if (fixes_everything(rig, chunks)) {
    out.cls = RowClass::NO_SYMMETRY;
    out.table = 15;
    return out;
  }

  // strata: subgroup closure of the rigidity locus under chunk conditions
  std::map<std::string, LogGroup> seen;
  std::queue<std::string> work;
  {
    std::string k = rig.key();
    seen.emplace(k, rig);
    work.push(k);
  }
  while (!work.empty()) {
    LogGroup h = seen.at(work.front());
    work.pop();
    for (const auto& mg : chunks.mgs) {
      if (h.satisfies(mg)) continue;
      LogGroup h2 = h;
      h2.add_monomial(mg);
      h2.solve();
      std::string k = h2.key();
      if (seen.emplace(k, h2).second) work.push(k);
    }
  }

  // realized fixed-chunk patterns
  std::set<std::set<std::vector<int>>> patterns;
  for (const auto& [k, h] : seen) {
    std::set<std::vector<int>> pat;
    std::vector<std::vector<int>> viol;
    for (const auto& mg : chunks.mgs)
      (h.satisfies(mg) ? (void)pat.insert(mg) : (void)viol.push_back(mg));
    if (viol.empty()) continue;  // acts trivially on g_-
    if (patterns.count(pat)) continue;
    if (h.element_violating_all(viol)) patterns.insert(pat);
  }

  // realized insertion data
  std::vector<std::vector<Cochain2>> realized;
  auto inserts = [&](const std::set<int>& part) {
    if (part.empty()) return true;
    if (realized.empty())
      for (const HComponent& c : rec.comps) realized.push_back(realize_component(g, c));
    for (const auto& cc : realized)
      if (!inserts_trivially(cc, part)) return false;
    return true;
  };

  const std::vector<int>& sig = g.sigma();
  bool all_zero = true, all_par = true, all_g1z = true, all_sand = true;
  for (const auto& pat : patterns) {
    StratumInfo st;
    st.pattern = pat;
    std::set<int> fixed, e1;
    for (const auto& mg : pat)
      for (int r : chunks.roots.at(mg)) {
        fixed.insert(r);
        if (g.sheight(r) == -1) e1.insert(r);
      }
    st.zero = fixed.empty();
    st.e1_zero = e1.empty();
    if (!st.zero) {
      if (auto cl = parabolic_closure(g, fixed); cl && inserts(fixed)) st.parabolic = true;
      for (unsigned mask = 0; mask < (1u << sig.size()) && !st.sandwich; ++mask) {
        std::vector<int> sp;
        for (size_t i = 0; i < sig.size(); ++i)
          if (mask & (1u << i)) sp.push_back(sig[i]);
        std::set<int> qroots;
        for (int r = 0; r < g.rs().num_roots(); ++r) {
          if (!g.in_gminus(r)) continue;
          int h = 0;
          for (int a : sp) h += g.rs().root(r)[a];
          if (h == 0) qroots.insert(r);
        }
        if (detail::subset_roots(qroots, fixed) && detail::subset_roots(e1, qroots) &&
            inserts(qroots))
          st.sandwich = true;
      }
    } else {
      st.parabolic = st.e1_zero = st.sandwich = true;
    }
    all_zero = all_zero && st.zero;
    all_par = all_par && (st.zero || st.parabolic);
    all_g1z = all_g1z && st.e1_zero;
    all_sand = all_sand && (st.zero || st.sandwich);
    out.strata.push_back(std::move(st));
  }

  int rsz = 0;  // crossed-node count of the underlying real flag
  {
    std::set<int> orbs;
    for (int a : sig) orbs.insert(std::min(a, fs.node_iota[a]));
    rsz = static_cast<int>(orbs.size());
  }
  if (all_zero) {
    out.cls = RowClass::ZERO_ALL;
    out.table = 1;
  } else if (all_par) {
    out.cls = RowClass::PARABOLIC_ALL;
    out.table = (rsz >= 2 && rsz <= 4) ? rsz : 0;
  } else if (all_g1z) {
    out.cls = RowClass::G1ZERO_ALL;
    out.table = (rsz >= 1 && rsz <= 2) ? 4 + rsz : 0;
  } else if (all_sand) {
    out.cls = RowClass::SANDWICH_ALL;
    out.table = (rsz >= 2 && rsz <= 4) ? 5 + rsz : 0;
  } else {
    out.cls = RowClass::NONTRIVIAL;
    out.table = (rsz >= 2 && rsz <= 4) ? 8 + rsz : 0;
  }
  return out;
}

/// Joint rigidity of a pair of slots: listed when the pair admits a qualifying
/// symmetry that qualifies for neither slot alone.
struct PairClassification {
  MuRecord rec1, rec2;
  LogGroup fix, rig;
  bool listed = false;
};

inline PairClassification classify_pair(const Grading& g, const FormSpec& fs,
                                        const MuRecord& r1, const MuRecord& r2,
                                        const LogGroup& rig1, const LogGroup& rig2) {
  PairClassification out;
  out.rec1 = r1;
  out.rec2 = r2;
  LogLayout lay(crossing_structure(g, fs));
  ChunkTable chunks(g);
  LogGroup fix(lay);
  std::vector<HComponent> both;
  for (const HComponent& c : r1.comps) both.push_back(c);
  for (const HComponent& c : r2.comps) both.push_back(c);
  for (const HComponent& c : both) fix.add_monomial(c.multigrade);
  fix.solve();
  out.fix = fix;
  LogGroup rig = fix;
  std::vector<ProlongationSpace> a1 = a_spaces(g, r1.comps), a2 = a_spaces(g, r2.comps);
  for (size_t i = 0; i < a1.size(); ++i)
    for (int r : intersect_prolongations({a1[i], a2[i]}).roots) rig.add_monomial(g.multigrade(r));
  rig.solve();
  out.rig = rig;
  if (fixes_everything(rig, chunks)) return out;
  out.listed = !(rig1.contains(rig) && rig2.contains(rig));
  return out;
}

} // namespace prolrig
