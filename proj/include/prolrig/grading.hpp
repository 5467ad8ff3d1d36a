#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "rootsys.hpp"

namespace prolrig {

/// |k|-grading of g determined by a set of crossed nodes.
class Grading {
 public:
  Grading(const RootSystem& rs, std::vector<int> sigma) : rs_(&rs), sigma_(std::move(sigma)) {
    if (sigma_.empty()) throw std::invalid_argument("empty crossed-node set");
    std::sort(sigma_.begin(), sigma_.end());
    for (int i : sigma_)
      if (i < 0 || i >= rs.rank()) throw std::invalid_argument("crossed node out of range");
    ht_.resize(rs.num_roots());
    k_ = 0;
    for (int r = 0; r < rs.num_roots(); ++r) {
      int h = 0;
      for (int a : sigma_) h += rs.root(r)[a];
      ht_[r] = h;
      if (h > k_) k_ = h;
      layers_[h].push_back(r);
    }
  }

  const RootSystem& rs() const { return *rs_; }
  const std::vector<int>& sigma() const { return sigma_; }
  int k() const { return k_; }
  int sheight(int rootidx) const { return ht_[rootidx]; }

  const std::vector<int>& layer(int i) const {
    static const std::vector<int> empty;
    auto it = layers_.find(i);
    return it == layers_.end() ? empty : it->second;
  }

  std::vector<int> multigrade(int rootidx) const {
    std::vector<int> m;
    m.reserve(sigma_.size());
    for (int a : sigma_) m.push_back(rs_->root(rootidx)[a]);
    return m;
  }

  std::vector<int> multigrade_of_weight(const WCoord& w) const {
    std::vector<int> m;
    for (int a : sigma_) {
      if (rat_den(w[a]) != 1) throw std::logic_error("non-integral multigrade");
      m.push_back(static_cast<int>(rat_num(w[a])));
    }
    return m;
  }

  /// Uncrossed nodes (simple roots of the semisimple part of g0).
  std::vector<int> g0_nodes() const {
    std::vector<int> out;
    for (int i = 0; i < rs_->rank(); ++i)
      if (!std::binary_search(sigma_.begin(), sigma_.end(), i)) out.push_back(i);
    return out;
  }

  /// Positive roots of g0.
  std::vector<int> g0_pos_roots() const {
    std::vector<int> out;
    for (int r : layer(0))
      if (rs_->is_positive(r)) out.push_back(r);
    return out;
  }

  bool in_gminus(int rootidx) const { return ht_[rootidx] < 0; }

 private:
  const RootSystem* rs_;
  std::vector<int> sigma_;
  int k_;
  std::vector<int> ht_;
  std::map<int, std::vector<int>> layers_;
};

/// One g0-irreducible piece of a layer g_i (root part only; the Cartan block of
/// layer 0 is carried separately).
struct IrreducibleComponent {
  int degree = 0;
  std::vector<int> roots;           // sorted root indices
  std::vector<int> multigrade;      // common Sigma-heights
  WCoord lowest_weight;             // in simple-root coordinates
  WCoord highest_weight;
};

inline std::vector<IrreducibleComponent> g0_components(const Grading& g, int degree) {
  const RootSystem& rs = g.rs();
  const std::vector<int>& lay = g.layer(degree);
  std::map<int, int> pos;  // root idx -> position
  for (size_t i = 0; i < lay.size(); ++i) pos[lay[i]] = static_cast<int>(i);
  std::vector<int> parent(lay.size());
  for (size_t i = 0; i < lay.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<int> g0n = g.g0_nodes();
  for (size_t i = 0; i < lay.size(); ++i)
    for (int n : g0n) {
      Coord c = rs.root(lay[i]);
      c[n] += 1;
      int r2 = rs.root_index(c);
      if (r2 >= 0 && pos.count(r2)) parent[find(static_cast<int>(i))] = find(pos[r2]);
    }
  std::map<int, IrreducibleComponent> comps;
  for (size_t i = 0; i < lay.size(); ++i) comps[find(static_cast<int>(i))].roots.push_back(lay[i]);
  std::vector<IrreducibleComponent> out;
  for (auto& [root_of_set, comp] : comps) {
    comp.degree = degree;
    std::sort(comp.roots.begin(), comp.roots.end());
    comp.multigrade = g.multigrade(comp.roots[0]);
    for (int r : comp.roots)
      if (g.multigrade(r) != comp.multigrade) throw std::logic_error("component not multigraded");
    // lowest root: no g0 lowering stays inside
    for (int r : comp.roots) {
      bool low = true, high = true;
      for (int n : g0n) {
        Coord c = rs.root(r);
        c[n] -= 1;
        if (rs.root_index(c) >= 0 && g.sheight(rs.root_index(c)) == degree) low = false;
        c[n] += 2;
        if (rs.root_index(c) >= 0 && g.sheight(rs.root_index(c)) == degree) high = false;
      }
      if (low) comp.lowest_weight = rs.root_wcoord(r);
      if (high) comp.highest_weight = rs.root_wcoord(r);
    }
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const IrreducibleComponent& a, const IrreducibleComponent& b) { return a.roots < b.roots; });
  return out;
}

/// Smallest standard parabolic containing p and the given negative root spaces;
/// returns its crossed set iff that parabolic is exactly span(extra) + p.
inline std::optional<std::set<int>> parabolic_closure(const Grading& g, const std::set<int>& extra) {
  const RootSystem& rs = g.rs();
  std::set<int> sp(g.sigma().begin(), g.sigma().end());
  for (int r : extra) {
    if (!g.in_gminus(r)) throw std::invalid_argument("parabolic_closure: root not in g_-");
    for (int a : g.sigma())
      if (rs.root(r)[a] != 0) sp.erase(a);
  }
  // p_{sp} minus p must be exactly the extra roots
  for (int r = 0; r < rs.num_roots(); ++r) {
    if (!g.in_gminus(r)) continue;
    int h = 0;
    for (int a : sp) h += rs.root(r)[a];
    bool in_q = (h == 0);
    if (in_q != (extra.count(r) > 0)) return std::nullopt;
  }
  return sp;
}

} // namespace prolrig
