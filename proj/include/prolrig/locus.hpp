#pragma once

#include <numeric>
#include <sstream>
#include <string>

#include "center.hpp"

namespace prolrig {

/// Real structure on the symbol coordinates: an involution of the crossed
/// nodes with j_{iota(a)} = conj(j_a). A fixed node forces j_a real; the
/// identity involution describes a split form, the factor swap of a doubled
/// system describes a complex algebra viewed as real.
struct RealStructure {
  std::vector<int> iota;

  static RealStructure split(int nsym) {
    RealStructure rs;
    rs.iota.resize(nsym);
    for (int i = 0; i < nsym; ++i) rs.iota[i] = i;
    return rs;
  }
};

/// Logarithmic coordinates per involution orbit: j_a = exp(r + i*pi*x) with a
/// shared modulus r per orbit, an opposite phase on the two members of a pair
/// orbit, and an integer phase (in pi units) on a fixed orbit.
struct LogLayout {
  int nsym = 0;
  std::vector<int> iota;
  std::vector<int> orb_of;    // coordinate -> orbit index
  std::vector<int> rep;       // orbit -> smallest coordinate
  std::vector<bool> is_pair;  // orbit has two coordinates
  int norb = 0;

  LogLayout() = default;
  explicit LogLayout(const RealStructure& rs) {
    nsym = static_cast<int>(rs.iota.size());
    iota = rs.iota;
    orb_of.assign(nsym, -1);
    for (int a = 0; a < nsym; ++a) {
      if (orb_of[a] >= 0) continue;
      int b = iota[a];
      if (b < 0 || b >= nsym || iota[b] != a) throw std::invalid_argument("iota not an involution");
      orb_of[a] = norb;
      orb_of[b] = norb;
      rep.push_back(a);
      is_pair.push_back(b != a);
      ++norb;
    }
  }

  /// Orbit-level rows of the condition "monomial(m) = 1":
  /// rrow . r = 0  and  xrow . x in 2Z  (phases in pi units).
  void project(const std::vector<int>& m, std::vector<Int>& rrow, std::vector<Int>& xrow) const {
    rrow.assign(norb, 0);
    xrow.assign(norb, 0);
    for (int a = 0; a < nsym; ++a) {
      int o = orb_of[a];
      rrow[o] += m[a];
      xrow[o] += (a == rep[o]) ? m[a] : -m[a];
    }
  }
};

inline Rat dot(const std::vector<Int>& a, const std::vector<Rat>& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

inline bool in_2z(const Rat& v) { return rat_den(v) == 1 && rat_num(v) % 2 == 0; }

/// Closed subgroup of the symmetry parameter space cut out by monomial
/// conditions under a real structure. Solved into continuous directions plus
/// discrete phase generators via Smith reduction.
class LogGroup {
 public:
  LogGroup() = default;
  explicit LogGroup(const LogLayout& lay) : lay_(lay) {
    // a fixed orbit carries an integer phase: x_o in Z, i.e. 2 x_o in 2Z
    for (int o = 0; o < lay_.norb; ++o)
      if (!lay_.is_pair[o]) {
        std::vector<Int> row(lay_.norb, 0);
        row[o] = 2;
        xrows_.push_back(std::move(row));
      }
    solve();
  }

  const LogLayout& layout() const { return lay_; }

  void add_monomial(const std::vector<int>& m) {
    std::vector<Int> rrow, xrow;
    lay_.project(m, rrow, xrow);
    bool rz = true, xz = true;
    for (const Int& v : rrow) rz = rz && v == 0;
    for (const Int& v : xrow) xz = xz && v == 0;
    if (!rz) rrows_.push_back(std::move(rrow));
    if (!xz) xrows_.push_back(std::move(xrow));
    solved_ = false;
  }

  /// Add a condition directly in orbit coordinates: rrow . r = 0 and
  /// xrow . x in 2Z. Used when parsing table cells.
  void add_raw(std::vector<Int> rrow, std::vector<Int> xrow) {
    bool rz = true, xz = true;
    for (const Int& v : rrow) rz = rz && v == 0;
    for (const Int& v : xrow) xz = xz && v == 0;
    if (!rz) rrows_.push_back(std::move(rrow));
    if (!xz) xrows_.push_back(std::move(xrow));
    solved_ = false;
  }

  void add_constraints(const ConstraintSet& cs) {
    for (const auto& row : cs.rows) {
      std::vector<int> m(row.size());
      for (size_t i = 0; i < row.size(); ++i) m[i] = static_cast<int>(row[i]);
      add_monomial(m);
    }
  }

  void solve() {
    // moduli: rational solution space of rrows . r = 0
    RatMat req;
    for (const auto& row : rrows_) {
      std::vector<Rat> q(row.begin(), row.end());
      req.push_back(std::move(q));
    }
    rbasis_ = kernel_basis(req, lay_.norb);

    // phases: x with xrows . x in 2Z, solved through Smith normal form
    xbasis_.clear();
    xgens_.clear();
    if (xrows_.empty()) {
      for (int o = 0; o < lay_.norb; ++o) {
        std::vector<Rat> v(lay_.norb, Rat(0));
        v[o] = 1;
        xbasis_.push_back(std::move(v));
      }
    } else {
      SmithForm sf = smith(xrows_);
      const int cols = lay_.norb;
      const int nd = static_cast<int>(sf.diag.size());
      for (int i = 0; i < cols; ++i) {
        std::vector<Rat> col(cols);
        for (int r = 0; r < cols; ++r) col[r] = Rat(sf.v[r][i]);
        if (i < nd) {
          // x = v * y with diag(i) * y_i in 2Z
          Rat scale = Rat(2) / Rat(sf.diag[i]);
          for (Rat& c : col) c *= scale;
          xgens_.push_back(std::move(col));
        } else {
          xbasis_.push_back(std::move(col));
        }
      }
    }
    solved_ = true;
  }

  /// Does monomial(m) = 1 hold identically on the whole subgroup?
  bool satisfies(const std::vector<int>& m) const {
    require_solved();
    std::vector<Int> rrow, xrow;
    lay_.project(m, rrow, xrow);
    return satisfies_raw(rrow, xrow);
  }

  /// Same check with the condition given directly in orbit coordinates.
  bool satisfies_raw(const std::vector<Int>& rrow, const std::vector<Int>& xrow) const {
    require_solved();
    for (const auto& b : rbasis_)
      if (dot(rrow, b) != 0) return false;
    for (const auto& b : xbasis_)
      if (dot(xrow, b) != 0) return false;
    for (const auto& g : xgens_)
      if (!in_2z(dot(xrow, g))) return false;
    return true;
  }

  bool contains(const LogGroup& sub) const {
    require_solved();
    sub.require_solved();
    auto holds_on = [&](const std::vector<Int>& rrow, const std::vector<Int>& xrow) {
      for (const auto& b : sub.rbasis_)
        if (dot(rrow, b) != 0) return false;
      for (const auto& b : sub.xbasis_)
        if (dot(xrow, b) != 0) return false;
      for (const auto& g : sub.xgens_)
        if (!in_2z(dot(xrow, g))) return false;
      return true;
    };
    std::vector<Int> zero(lay_.norb, 0);
    for (const auto& r : rrows_)
      if (!holds_on(r, zero)) return false;
    for (const auto& x : xrows_)
      if (!holds_on(zero, x)) return false;
    return true;
  }

  bool same_group(const LogGroup& o) const { return contains(o) && o.contains(*this); }

  /// Canonical key of the defining constraints, for worklist deduplication.
  std::string key() const {
    RatMat req;
    for (const auto& row : rrows_) req.emplace_back(row.begin(), row.end());
    rref(req);
    IntMat xh = hermite(xrows_);
    std::ostringstream os;
    for (const auto& row : req) {
      for (const Rat& v : row) os << v << ',';
      os << ';';
    }
    os << '|';
    for (const auto& row : xh) {
      for (const Int& v : row) os << v << ',';
      os << ';';
    }
    return os.str();
  }

  int continuous_dim() const {
    require_solved();
    return static_cast<int>(rbasis_.size() + xbasis_.size());
  }

  const RatMat& moduli_basis() const { require_solved(); return rbasis_; }
  const RatMat& phase_basis() const { require_solved(); return xbasis_; }
  const RatMat& phase_gens() const { require_solved(); return xgens_; }
  const IntMat& moduli_rows() const { return rrows_; }
  const IntMat& phase_rows() const { return xrows_; }

  /// Is there an element of the subgroup violating every one of the given
  /// monomial conditions at once? With viol = the candidate conditions the
  /// subgroup does not satisfy identically, this decides whether the generic
  /// fixed-chunk pattern of the subgroup is realized by an actual element
  /// rather than only by elements of proper subgroups.
  bool element_violating_all(const std::vector<std::vector<int>>& viol) const {
    require_solved();
    std::vector<std::vector<Int>> need_r, need_x;  // handled discretely
    for (const auto& m : viol) {
      std::vector<Int> rrow, xrow;
      lay_.project(m, rrow, xrow);
      bool cont = false;
      for (const auto& b : rbasis_) cont = cont || dot(rrow, b) != 0;
      for (const auto& b : xbasis_) cont = cont || dot(xrow, b) != 0;
      // a continuous direction with nonzero pairing violates the condition for
      // generic coefficients, independently of the discrete phase choice
      if (cont) continue;
      need_x.push_back(xrow);
    }
    if (need_x.empty()) return true;
    const int ng = static_cast<int>(xgens_.size());
    // pairing table and per-generator effective order
    std::vector<std::vector<Rat>> pair_tab(need_x.size(), std::vector<Rat>(ng));
    std::vector<long long> ord(ng, 1);
    for (size_t i = 0; i < need_x.size(); ++i)
      for (int j = 0; j < ng; ++j) {
        pair_tab[i][j] = dot(need_x[i], xgens_[j]) / 2;  // condition: integer
        ord[j] = std::lcm(ord[j], rat_den(pair_tab[i][j]).convert_to<long long>());
      }
    long long total = 1;
    for (int j = 0; j < ng; ++j) {
      total *= ord[j];
      if (total > 2000000) throw std::length_error("element search space too large");
    }
    std::vector<long long> n(ng, 0);
    for (long long it = 0; it < total; ++it) {
      long long v = it;
      for (int j = 0; j < ng; ++j) {
        n[j] = v % ord[j];
        v /= ord[j];
      }
      bool ok = true;
      for (size_t i = 0; i < need_x.size() && ok; ++i) {
        Rat s(0);
        for (int j = 0; j < ng; ++j) s += Rat(Int(n[j])) * pair_tab[i][j];
        if (rat_den(s) == 1) ok = false;  // condition satisfied -> not violated
      }
      if (ok) return true;
    }
    return false;
  }

 private:
  void require_solved() const {
    if (!solved_) throw std::logic_error("LogGroup: call solve() after adding constraints");
  }

  LogLayout lay_;
  IntMat rrows_, xrows_;
  RatMat rbasis_, xbasis_, xgens_;
  bool solved_ = false;
};

} // namespace prolrig
