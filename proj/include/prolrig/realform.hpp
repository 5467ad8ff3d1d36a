#pragma once

#include "outer.hpp"

namespace prolrig {

/// Build the realized root system for a form specification.
inline RootSystem realize(const FormSpec& fs) {
  return fs.doubled ? RootSystem::doubled(fs.type) : RootSystem::simple(fs.type);
}

namespace detail {

inline FormSpec make_form(std::string tag, SimpleType t, bool doubled,
                          std::vector<int> iota, std::vector<bool> compact,
                          bool external) {
  FormSpec fs;
  fs.tag = std::move(tag);
  fs.type = t;
  fs.doubled = doubled;
  fs.node_iota = std::move(iota);
  fs.compact = std::move(compact);
  fs.external_domain = external;
  return fs;
}

inline std::vector<int> id_iota(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

inline std::vector<int> flip_iota(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - 1 - i;
  return v;
}

} // namespace detail

/// Complex form: the algebra viewed as a real algebra, realized as two
/// mirrored simple factors swapped by conjugation.
inline FormSpec complex_form(SimpleType t) {
  const int n = t.rank;
  std::vector<int> iota(2 * n);
  RootSystem rs = RootSystem::doubled(t);
  for (int i = 0; i < 2 * n; ++i) iota[i] = rs.mirror_node(i);
  std::string tag;
  switch (t.family) {
    case Family::A: tag = "sl(" + std::to_string(n + 1) + ",C)"; break;
    case Family::B: tag = "so(" + std::to_string(2 * n + 1) + ",C)"; break;
    case Family::C: tag = "sp(" + std::to_string(2 * n) + ",C)"; break;
    case Family::D: tag = "so(" + std::to_string(2 * n) + ",C)"; break;
    case Family::E: tag = "e" + std::to_string(n) + "(C)"; break;
    case Family::F: tag = "f4(C)"; break;
    case Family::G: tag = "g2(C)"; break;
  }
  return detail::make_form(tag, t, true, std::move(iota),
                           std::vector<bool>(2 * n, false), false);
}

inline FormSpec split_form(SimpleType t) {
  const int n = t.rank;
  std::string tag;
  switch (t.family) {
    case Family::A: tag = "sl(" + std::to_string(n + 1) + ",R)"; break;
    case Family::B: tag = "so(" + std::to_string(n) + "," + std::to_string(n + 1) + ")"; break;
    case Family::C: tag = "sp(" + std::to_string(2 * n) + ",R)"; break;
    case Family::D: tag = "so(" + std::to_string(n) + "," + std::to_string(n) + ")"; break;
    case Family::E: tag = "e" + std::to_string(n) + "(" + std::to_string(n) + ")"; break;
    case Family::F: tag = "f4(4)"; break;
    case Family::G: tag = "g2(2)"; break;
  }
  return detail::make_form(tag, t, false, detail::id_iota(n),
                           std::vector<bool>(n, false), false);
}

/// Real forms of one simple type, restricted to those admitting at least one
/// grading (at least one non-compact node). Eigenvalue-domain data for
/// non-quasi-split inner forms is imported, so those are flagged external.
inline std::vector<FormSpec> real_forms(SimpleType t) {
  using detail::make_form;
  const int n = t.rank;
  std::vector<FormSpec> out;
  out.push_back(split_form(t));
  out.push_back(complex_form(t));
  switch (t.family) {
    case Family::A: {
      // su(q, n+1-q): nodes a_1..a_q and mirrors non-compact, conjugation flips
      for (int q = 1; 2 * q <= n + 1; ++q) {
        std::vector<bool> comp(n, true);
        for (int i = 0; i < q; ++i) comp[i] = comp[n - 1 - i] = false;
        out.push_back(make_form("su(" + std::to_string(q) + "," + std::to_string(n + 1 - q) + ")",
                                t, false, detail::flip_iota(n), std::move(comp), false));
      }
      // sl(m,H): even-position nodes non-compact
      if (n % 2 == 1 && n >= 3) {
        std::vector<bool> comp(n, false);
        for (int i = 0; i < n; i += 2) comp[i] = true;
        out.push_back(make_form("sl(" + std::to_string((n + 1) / 2) + ",H)", t, false,
                                detail::id_iota(n), std::move(comp), true));
      }
      break;
    }
    case Family::B: {
      // so(q, 2n+1-q), q < n; split case q = n already added
      for (int q = 1; q < n; ++q) {
        std::vector<bool> comp(n, true);
        for (int i = 0; i < q; ++i) comp[i] = false;
        out.push_back(make_form("so(" + std::to_string(q) + "," + std::to_string(2 * n + 1 - q) + ")",
                                t, false, detail::id_iota(n), std::move(comp), true));
      }
      break;
    }
    case Family::C: {
      // sp(q, n-q)
      for (int q = 1; 2 * q <= n; ++q) {
        std::vector<bool> comp(n, true);
        for (int i = 1; i < n; i += 2)
          if ((i + 1) / 2 <= q) comp[i] = false;
        out.push_back(make_form("sp(" + std::to_string(q) + "," + std::to_string(n - q) + ")", t,
                                false, detail::id_iota(n), std::move(comp), true));
      }
      break;
    }
    case Family::D: {
      // so(q, 2n-q), q < n; quasi-split q = n-1 flips the fork nodes
      for (int q = 1; q < n; ++q) {
        std::vector<int> iota = detail::id_iota(n);
        std::vector<bool> comp(n, true);
        bool external = true;
        if (q == n - 1) {
          comp.assign(n, false);
          std::swap(iota[n - 1], iota[n - 2]);
          external = false;
        } else {
          for (int i = 0; i < q; ++i) comp[i] = false;
          if (q % 2 == 1) std::swap(iota[n - 1], iota[n - 2]);
        }
        out.push_back(make_form("so(" + std::to_string(q) + "," + std::to_string(2 * n - q) + ")",
                                t, false, std::move(iota), std::move(comp), external));
      }
      break;
    }
    default:
      break;
  }
  return out;
}

/// Crossed sets available in a form: subsets of non-compact nodes, stable
/// under the conjugation involution, non-empty on the first factor.
inline std::vector<std::vector<int>> allowed_sigmas(const RootSystem& rs, const FormSpec& fs) {
  std::vector<int> free_orbits;  // representative nodes of crossable iota-orbits
  const int n = rs.rank();
  for (int i = 0; i < n; ++i) {
    if (!fs.compact.empty() && fs.compact[i]) continue;
    if (fs.node_iota[i] < i) continue;
    free_orbits.push_back(i);
  }
  std::vector<std::vector<int>> out;
  const int m = static_cast<int>(free_orbits.size());
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> sig;
    for (int b = 0; b < m; ++b)
      if (mask & (1u << b)) {
        int i = free_orbits[b];
        sig.push_back(i);
        if (fs.node_iota[i] != i) sig.push_back(fs.node_iota[i]);
      }
    std::sort(sig.begin(), sig.end());
    out.push_back(std::move(sig));
  }
  return out;
}

} // namespace prolrig
