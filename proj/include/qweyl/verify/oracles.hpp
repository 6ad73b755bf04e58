#pragma once

// Reference computations the suites compare against. Each one is written
// independently of the code path it checks.

#include <cstdint>
#include <string>
#include <vector>

#include "qweyl/interp.hpp"
#include "qweyl/poisson.hpp"
#include "qweyl/spectra.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl::verify {

/// Every subset of M_n, as a marker set. M_n has 3n - 2 markers.
inline std::vector<MarkerSet> all_marker_subsets(std::size_t n) {
  std::vector<Marker> universe{{MarkerKind::z, 1}};
  for (std::size_t i = 2; i <= n; ++i)
    for (auto k : {MarkerKind::z, MarkerKind::y, MarkerKind::x}) universe.push_back({k, i});
  std::vector<MarkerSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe.size()); ++mask) {
    MarkerSet s(n);
    for (std::size_t b = 0; b < universe.size(); ++b)
      if (mask >> b & 1) s.insert(universe[b]);
    out.push_back(s);
  }
  return out;
}

inline std::size_t brute_force_admissible_count(std::size_t n) {
  std::size_t count = 0;
  for (const auto& s : all_marker_subsets(n)) count += is_admissible(s) ? 1 : 0;
  return count;
}

/// The weaker rule (y_i or x_i in T) => (z_i and z_{i-1} in T), without the converse.
inline std::size_t one_sided_admissible_count(std::size_t n) {
  std::size_t count = 0;
  for (const auto& s : all_marker_subsets(n)) {
    bool ok = true;
    for (std::size_t i = 2; i <= n; ++i)
      if ((s.has_y(i) || s.has_x(i)) && !(s.has_z(i) && s.has_z(i - 1))) ok = false;
    count += ok ? 1 : 0;
  }
  return count;
}

/// Solves the 3x3 system rows (q^2, q, 1), (1, 1, 1), (2, 1, 0) against
/// (eta, 1, mu) by Gaussian elimination.
inline QuadPoly build_e_by_elimination(const Rational& q, const Rational& eta, const Rational& mu) {
  std::vector<std::vector<Rational>> m{{q * q, q, 1, eta}, {1, 1, 1, 1}, {2, 1, 0, mu}};
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    for (std::size_t r = 0; r < 3; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return {m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

/// All u with |u_j| <= bound and sum_j u_j c_lj = 0 for every l.
inline std::vector<std::vector<std::int64_t>> box_center(const std::vector<std::vector<ExpVec>>& c,
                                                         std::int64_t bound) {
  const std::size_t s = c.size();
  std::vector<std::vector<std::int64_t>> out;
  if (s == 0) return out;
  const std::size_t r = c.front().front().rank();
  std::vector<std::int64_t> u(s, -bound);
  while (true) {
    bool central = true;
    for (std::size_t l = 0; l < s && central; ++l)
      for (std::size_t k = 0; k < r && central; ++k) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < s; ++j) acc += u[j] * c[l][j][k];
        central = acc == 0;
      }
    if (central) out.push_back(u);
    std::size_t i = 0;
    while (i < s && u[i] == bound) u[i++] = -bound;
    if (i == s) break;
    ++u[i];
  }
  return out;
}

struct Identity {
  std::string family;
  WeylElement lhs, rhs;
};

/// The commutation identities of y_i, x_i and z_i, written with explicit
/// scalars; eleven families.
inline std::vector<Identity> br1_identities(const FormalWeylAlgebra& a) {
  const std::size_t n = a.n();
  const auto& ring = a.ring();
  std::vector<Identity> out;
  auto q = [&](std::size_t i) { return ring.monomial(a.params().qexp(i)); };
  auto qinv = [&](std::size_t i) { return ring.monomial(-a.params().qexp(i)); };
  auto qm1 = [&](std::size_t i) { return q(i) - ring.one(); };
  out.push_back({"z0 = 1", a.z(0), a.one()});
  for (std::size_t i = 1; i <= n; ++i) {
    const auto xy = a.mul(a.x(i), a.y(i)), yx = a.mul(a.y(i), a.x(i));
    out.push_back({"x_i y_i - q_i y_i x_i = (q_i - 1) z_{i-1}", xy - yx.scaled(q(i)), a.z(i - 1).scaled(qm1(i))});
    out.push_back({"x_i y_i - y_i x_i = (q_i - 1) z_i", xy - yx, a.z(i).scaled(qm1(i))});
    out.push_back({"z_i - z_{i-1} = y_i x_i", a.z(i) - a.z(i - 1), yx});
    for (std::size_t j = 1; j <= n; ++j) {
      const auto zi = a.z(i);
      const auto yz = a.mul(a.y(j), zi), zy = a.mul(zi, a.y(j));
      const auto xz = a.mul(a.x(j), zi), zx = a.mul(zi, a.x(j));
      if (i < j) {
        out.push_back({"y_j z_i = z_i y_j (i < j)", yz, zy});
        out.push_back({"x_j z_i = z_i x_j (i < j)", xz, zx});
      } else {
        const char* tag = i == j ? " (i = j)" : " (i > j)";
        out.push_back({std::string("y_j z_i = q_j^-1 z_i y_j") + tag, yz, zy.scaled(qinv(j))});
        out.push_back({std::string("x_j z_i = q_j z_i x_j") + tag, xz, zx.scaled(q(j))});
      }
      out.push_back({"z_i z_j = z_j z_i", a.mul(zi, a.z(j)), a.mul(a.z(j), zi)});
    }
  }
  return out;
}

struct PoissonIdentity {
  std::string family;
  PoissonElement lhs, rhs;
};

/// The bracket identities of y_i, x_i and z_i in the limit algebra.
inline std::vector<PoissonIdentity> br2_identities(const PoissonAlgebra& pa) {
  const std::size_t n = pa.n();
  std::vector<PoissonIdentity> out;
  auto qp = [&](std::size_t i) { return pa.constant(MuPoly::linear(pa.params().qexp(i))); };
  for (std::size_t i = 1; i <= n; ++i) {
    const auto br = pa.bracket(pa.x(i), pa.y(i));
    const auto yx = pa.mul(pa.y(i), pa.x(i));
    out.push_back({"{x_i, y_i} - q_i' y_i x_i = q_i' z_{i-1}", br - pa.mul(qp(i), yx), pa.mul(qp(i), pa.z(i - 1))});
    out.push_back({"{x_i, y_i} = q_i' z_i", br, pa.mul(qp(i), pa.z(i))});
    for (std::size_t j = 1; j <= n; ++j) {
      const auto zi = pa.z(i);
      const auto byz = pa.bracket(pa.y(j), zi), bxz = pa.bracket(pa.x(j), zi);
      if (i < j) {
        out.push_back({"{y_j, z_i} = 0 (i < j)", byz, pa.zero()});
        out.push_back({"{x_j, z_i} = 0 (i < j)", bxz, pa.zero()});
      } else {
        out.push_back({"{y_j, z_i} = -q_j' y_j z_i", byz, -pa.mul(qp(j), pa.mul(pa.y(j), zi))});
        out.push_back({"{x_j, z_i} = q_j' x_j z_i", bxz, pa.mul(qp(j), pa.mul(pa.x(j), zi))});
      }
      out.push_back({"{z_i, z_j} = 0", pa.bracket(zi, pa.z(j)), pa.zero()});
    }
  }
  return out;
}

/// Closed form of {g, h} on generators in the limit algebra, from s_i and
/// L_ij alone. Coefficients read L_ji mu, (s_i + L_ij) mu and s_i mu.
inline PoissonElement generator_bracket_closed_form(Gen g, Gen h, const WeylParams& p) {
  const std::size_t n = p.n(), r = p.rank();
  auto mono = [&](Gen a, Gen b, const MuPoly& c) {
    Monomial m(n);
    m[a.position()] += 1;
    m[b.position()] += 1;
    PoissonElement e(n);
    e.add_term(m, c);
    return e;
  };
  auto lin = [&](const ExpVec& v) {
    MuPoly out(r);
    for (std::size_t k = 0; k < r; ++k)
      if (v[k] != 0) out += MuPoly::variable(r, k).scaled(Rational(static_cast<long>(v[k])));
    return out;
  };
  if (g == h) return PoissonElement(n);
  if (g.index == h.index) {
    // {x_i, y_i} = s_i mu (1 + sum_{k<=i} y_k x_k)
    const std::size_t i = g.index;
    const MuPoly c = lin(p.qexp(i));
    PoissonElement e(n);
    e.add_term(Monomial(n), c);
    for (std::size_t k = 1; k <= i; ++k) e += mono({GenKind::y, k}, {GenKind::x, k}, c);
    return g.kind == GenKind::x ? e : -e;
  }
  if (g.index < h.index) return -generator_bracket_closed_form(h, g, p);
  // g has the larger index j, h the smaller index i.
  const std::size_t j = g.index, i = h.index;
  const MuPoly sl = lin(p.qexp(i) + p.lexp(i, j));
  if (g.kind == GenKind::y && h.kind == GenKind::y) return mono(h, g, lin(p.lexp(j, i)));
  if (g.kind == GenKind::y) return mono(h, g, lin(p.lexp(i, j)));
  if (h.kind == GenKind::y) return mono(h, g, sl);
  return mono(h, g, MuPoly(r) - sl);
}

}  // namespace qweyl::verify
