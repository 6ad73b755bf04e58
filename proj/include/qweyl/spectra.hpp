#pragma once

// Stratification data for the spectra of A_q and A_1.
//
// An admissible set T is a subset of M_n = {z_1, z_2, y_2, x_2, ..., z_n, y_n, x_n}
// with (y_i in T or x_i in T) <=> (z_i in T and z_{i-1} in T) for 2 <= i <= n.
// Each T comes with the generator list Y_T of a quantum torus (and of its
// Poisson counterpart), the commutation exponents between those generators,
// and the lattice of exponents of central monomials.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/errors.hpp"
#include "qweyl/lattice.hpp"
#include "qweyl/poisson.hpp"
#include "qweyl/scalars.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl {

enum class MarkerKind : std::uint8_t { z, y, x };

struct Marker {
  MarkerKind kind;
  std::size_t index;

  std::string str() const {
    const char* tag = kind == MarkerKind::z ? "z" : kind == MarkerKind::y ? "y" : "x";
    return tag + std::to_string(index);
  }
  // By index, then z < y < x.
  friend auto operator<=>(const Marker& a, const Marker& b) {
    if (auto c = a.index <=> b.index; c != 0) return c;
    return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
  }
  friend bool operator==(const Marker&, const Marker&) = default;
};

/// Arbitrary candidate subset of {z_i, y_i, x_i : 1 <= i <= n}.
class MarkerSet {
 public:
  explicit MarkerSet(std::size_t n = 0) : n_(n), z_(n + 1), y_(n + 1), x_(n + 1) {}

  /// Comma list such as "z1,z2,y2"; "", "{}", "empty" and "∅" denote the empty set.
  static MarkerSet parse(std::string_view text, std::size_t n) {
    MarkerSet s(n);
    std::string t;
    for (char c : text)
      if (c != ' ' && c != '\t' && c != '{' && c != '}') t += c;
    if (t.empty() || t == "empty" || t == "∅") return s;
    std::size_t pos = 0;
    while (pos <= t.size()) {
      std::size_t end = t.find(',', pos);
      if (end == std::string::npos) end = t.size();
      std::string item = t.substr(pos, end - pos);
      if (item.size() < 2 || (item[0] != 'z' && item[0] != 'y' && item[0] != 'x'))
        throw InstanceError("bad marker '" + item + "' in set specification '" +
                            std::string(text) + "'");
      std::size_t idx = 0;
      for (std::size_t k = 1; k < item.size(); ++k) {
        if (item[k] < '0' || item[k] > '9')
          throw InstanceError("bad marker '" + item + "' in set specification");
        idx = idx * 10 + static_cast<std::size_t>(item[k] - '0');
      }
      if (idx < 1 || idx > n)
        throw InstanceError("marker index " + std::to_string(idx) + " out of range 1.." +
                            std::to_string(n));
      MarkerKind kind = item[0] == 'z' ? MarkerKind::z
                        : item[0] == 'y' ? MarkerKind::y
                                         : MarkerKind::x;
      s.insert({kind, idx});
      pos = end + 1;
    }
    return s;
  }

  std::size_t n() const noexcept { return n_; }
  bool contains(Marker m) const { return slot(m); }
  bool has_z(std::size_t i) const { return z_.at(i); }
  bool has_y(std::size_t i) const { return y_.at(i); }
  bool has_x(std::size_t i) const { return x_.at(i); }
  void insert(Marker m) { slot(m) = true; }
  void erase(Marker m) { slot(m) = false; }

  std::vector<Marker> members() const {
    std::vector<Marker> out;
    for (std::size_t i = 1; i <= n_; ++i) {
      if (z_[i]) out.push_back({MarkerKind::z, i});
      if (y_[i]) out.push_back({MarkerKind::y, i});
      if (x_[i]) out.push_back({MarkerKind::x, i});
    }
    return out;
  }

  std::string str() const {
    std::string s = "{";
    for (const auto& m : members()) s += (s.size() > 1 ? "," : "") + m.str();
    return s + "}";
  }

  friend bool operator==(const MarkerSet&, const MarkerSet&) = default;

 private:
  std::vector<bool>::reference slot(Marker m) {
    check(m);
    return m.kind == MarkerKind::z ? z_[m.index] : m.kind == MarkerKind::y ? y_[m.index] : x_[m.index];
  }
  bool slot(Marker m) const {
    check(m);
    return m.kind == MarkerKind::z ? z_[m.index] : m.kind == MarkerKind::y ? y_[m.index] : x_[m.index];
  }
  void check(Marker m) const {
    if (m.index < 1 || m.index > n_)
      throw InstanceError("marker " + m.str() + " out of range for n=" + std::to_string(n_));
  }

  std::size_t n_;
  std::vector<bool> z_, y_, x_;
};

/// True iff T is a subset of M_n satisfying the admissibility biconditional.
inline bool is_admissible(const MarkerSet& t) {
  if (t.n() >= 1 && (t.has_y(1) || t.has_x(1))) return false;
  for (std::size_t i = 2; i <= t.n(); ++i) {
    const bool left = t.has_y(i) || t.has_x(i);
    const bool right = t.has_z(i) && t.has_z(i - 1);
    if (left != right) return false;
  }
  return true;
}

class AdmissibleSet {
 public:
  explicit AdmissibleSet(MarkerSet set) : set_(std::move(set)) {
    if (!is_admissible(set_)) throw InstanceError("set " + set_.str() + " is not admissible");
  }
  const MarkerSet& markers() const noexcept { return set_; }
  std::size_t n() const noexcept { return set_.n(); }
  std::string str() const { return set_.str(); }
  friend bool operator==(const AdmissibleSet&, const AdmissibleSet&) = default;

 private:
  MarkerSet set_;
};

/// All admissible subsets of M_n, built index by index. At index i >= 2 a set
/// U of M_{i-1} extends by nothing or {z_i} when z_{i-1} is not in U, and by
/// nothing, {z_i,y_i}, {z_i,x_i} or {z_i,y_i,x_i} when it is.
inline std::vector<AdmissibleSet> enumerate_admissible(std::size_t n) {
  if (n < 1) throw InstanceError("admissible sets need n >= 1");
  std::vector<MarkerSet> level;
  MarkerSet empty(n);
  level.push_back(empty);
  MarkerSet z1(n);
  z1.insert({MarkerKind::z, 1});
  level.push_back(z1);
  for (std::size_t i = 2; i <= n; ++i) {
    std::vector<MarkerSet> next;
    for (const auto& u : level) {
      next.push_back(u);
      MarkerSet t = u;
      t.insert({MarkerKind::z, i});
      if (!u.has_z(i - 1)) {
        next.push_back(t);
        continue;
      }
      for (int mask : {1, 2, 3}) {
        MarkerSet v = t;
        if (mask & 1) v.insert({MarkerKind::y, i});
        if (mask & 2) v.insert({MarkerKind::x, i});
        next.push_back(v);
      }
    }
    level = std::move(next);
  }
  std::vector<AdmissibleSet> out;
  out.reserve(level.size());
  for (auto& s : level) out.emplace_back(std::move(s));
  return out;
}

/// Y_T, ordered by index and then z < y < x.
inline std::vector<Marker> y_set(const AdmissibleSet& t) {
  const auto& m = t.markers();
  std::vector<Marker> out;
  for (std::size_t i = 1; i <= m.n(); ++i) {
    if (!m.has_z(i)) {
      out.push_back({MarkerKind::z, i});
      out.push_back({MarkerKind::y, i});
    } else if (!m.has_y(i)) {
      out.push_back({MarkerKind::y, i});
    } else if (!m.has_x(i)) {
      out.push_back({MarkerKind::x, i});
    }
  }
  return out;
}

/// The exponent c with a b = e^c b a, for generators that can share a torus.
inline ExpVec commutation_exponent(Marker a, Marker b, const WeylParams& params) {
  const std::size_t r = params.rank();
  if (a == b) return ExpVec(r);
  if (a.index == b.index && a.kind != MarkerKind::z && b.kind != MarkerKind::z)
    throw InstanceError("y" + std::to_string(a.index) + " and x" + std::to_string(a.index) +
                        " do not q-commute");
  // Put the pair in the order of the closed table and flip the sign otherwise.
  auto table = [&](Marker u, Marker v) -> std::optional<ExpVec> {
    if (u.kind == MarkerKind::z && v.kind == MarkerKind::z) return ExpVec(r);
    if (u.kind == MarkerKind::z) {
      // z_a y_b = q_b y_b z_a and z_a x_b = q_b^-1 x_b z_a for b <= a; commute otherwise.
      if (v.index > u.index) return ExpVec(r);
      const ExpVec& sb = params.qexp(v.index);
      return v.kind == MarkerKind::y ? sb : -sb;
    }
    if (v.kind == MarkerKind::z || u.index <= v.index) return std::nullopt;
    // u has the larger index b, v the smaller index a.
    const std::size_t bi = u.index, ai = v.index;
    const ExpVec& sa = params.qexp(ai);
    const ExpVec& lab = params.lexp(ai, bi);
    if (u.kind == MarkerKind::y && v.kind == MarkerKind::y) return params.lexp(bi, ai);
    if (u.kind == MarkerKind::y && v.kind == MarkerKind::x) return lab;
    if (u.kind == MarkerKind::x && v.kind == MarkerKind::y) return sa + lab;
    return -(sa + lab);
  };
  if (auto c = table(a, b)) return *c;
  if (auto c = table(b, a)) return -*c;
  throw InvariantViolation("no commutation rule for " + a.str() + ", " + b.str());
}

struct TorusData {
  std::vector<Marker> generators;
  std::vector<std::vector<ExpVec>> qmatrix;
  std::vector<std::vector<MuPoly>> pmatrix;
};

/// Commutation exponents c_ij of w_i w_j = eta^{c_ij} w_j w_i over Y_T.
inline std::vector<std::vector<ExpVec>> torus_matrix_q(const AdmissibleSet& t,
                                                       const WeylParams& params) {
  if (t.n() != params.n()) throw InstanceError("admissible set and instance disagree on n");
  const auto gens = y_set(t);
  std::vector<std::vector<ExpVec>> c(gens.size(), std::vector<ExpVec>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      c[i][j] = commutation_exponent(gens[i], gens[j], params);
  return c;
}

inline PoissonElement marker_element(Marker m, const PoissonAlgebra& pa) {
  switch (m.kind) {
    case MarkerKind::z: return pa.z(m.index);
    case MarkerKind::y: return pa.y(m.index);
    default: return pa.x(m.index);
  }
}

template <class Ring>
typename WeylAlgebra<Ring>::Element marker_element(Marker m, const WeylAlgebra<Ring>& alg) {
  switch (m.kind) {
    case MarkerKind::z: return alg.z(m.index);
    case MarkerKind::y: return alg.y(m.index);
    default: return alg.x(m.index);
  }
}

/// Coefficients d_ij of {w_i, w_j} = d_ij w_i w_j, obtained by running the
/// bracket on the generators of Y_T and dividing exactly by w_i w_j.
inline std::vector<std::vector<MuPoly>> torus_matrix_p(const AdmissibleSet& t,
                                                       const PoissonAlgebra& pa) {
  if (t.n() != pa.n()) throw InstanceError("admissible set and instance disagree on n");
  const auto gens = y_set(t);
  std::vector<PoissonElement> w;
  for (const auto& g : gens) w.push_back(marker_element(g, pa));
  std::vector<std::vector<MuPoly>> d(gens.size(), std::vector<MuPoly>(gens.size(), MuPoly(pa.rank())));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const PoissonElement br = pa.bracket(w[i], w[j]);
      auto q = pa.divide_exact(br, pa.mul(w[i], w[j]));
      if (!q || q->size() > 1 || (q->size() == 1 && !q->terms().begin()->first.is_one()))
        throw InvariantViolation("{" + gens[i].str() + "," + gens[j].str() +
                                 "} is not a scalar multiple of their product");
      d[i][j] = q->is_zero() ? MuPoly(pa.rank()) : q->terms().begin()->second;
    }
  return d;
}

inline TorusData torus_data(const AdmissibleSet& t, const PoissonAlgebra& pa) {
  return {y_set(t), torus_matrix_q(t, pa.params()), torus_matrix_p(t, pa)};
}

struct CenterLattice {
  IntMatrix basis;  // Hermite normal form rows
  std::size_t rank() const noexcept { return basis.size(); }
  bool trivial() const noexcept { return basis.empty(); }
  friend bool operator==(const CenterLattice&, const CenterLattice&) = default;
};

/// {u in Z^s : sum_j u_j c_lj = 0 in Z^r for every l}.
inline CenterLattice center_lattice(const std::vector<std::vector<ExpVec>>& c) {
  const std::size_t s = c.size();
  if (s == 0) return {};
  const std::size_t r = c.front().front().rank();
  IntMatrix m;
  for (std::size_t l = 0; l < s; ++l) {
    if (c[l].size() != s) throw InstanceError("commutation matrix is not square");
    if (!c[l][l].is_zero()) throw InstanceError("commutation matrix has nonzero diagonal");
    for (std::size_t j = 0; j < s; ++j)
      if (c[l][j] != -c[j][l]) throw InstanceError("commutation matrix is not antisymmetric");
    for (std::size_t i = 0; i < r; ++i) {
      IntVector row(s);
      for (std::size_t j = 0; j < s; ++j) row[j] = Integer(static_cast<long>(c[l][j][i]));
      m.push_back(std::move(row));
    }
  }
  return {integer_kernel(m, s)};
}

/// {u in Z^s : sum_j u_j d_lj = 0 in Q[mu] for every l}.
inline CenterLattice poisson_center_lattice(const std::vector<std::vector<MuPoly>>& d) {
  const std::size_t s = d.size();
  if (s == 0) return {};
  IntMatrix m;
  for (std::size_t l = 0; l < s; ++l) {
    std::map<MuPoly::Degree, std::vector<Rational>> rows;
    for (std::size_t j = 0; j < s; ++j)
      for (const auto& [deg, coef] : d[l][j].terms()) {
        auto& row = rows.try_emplace(deg, std::vector<Rational>(s, 0)).first->second;
        row[j] = coef;
      }
    for (const auto& [deg, row] : rows) {
      Integer den = 1;
      for (const auto& q : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
      IntVector irow(s);
      for (std::size_t j = 0; j < s; ++j) {
        Rational scaled = row[j] * den;
        irow[j] = scaled.get_num();
      }
      m.push_back(std::move(irow));
    }
  }
  return {integer_kernel(m, s)};
}

/// Laurent combination sum alpha_u w^u, u in Z^s.
using LaurentCombination = std::map<std::vector<std::int64_t>, Rational>;

struct ClearedCombination {
  std::vector<std::int64_t> shift;  // v with w^v f polynomial
  LaurentCombination polynomial;
};

/// Multiplies by the smallest monomial w^v (v_j = max(0, -min_u u_j)) making
/// all exponents nonnegative. Valid verbatim on the quantum and Poisson sides
/// because f is central.
inline ClearedCombination clear_denominators(const LaurentCombination& f) {
  if (f.empty()) return {{}, {}};
  const std::size_t s = f.begin()->first.size();
  std::vector<std::int64_t> v(s, 0);
  for (const auto& [u, a] : f) {
    if (u.size() != s) throw InstanceError("Laurent exponents of different lengths");
    for (std::size_t j = 0; j < s; ++j) v[j] = std::max(v[j], -u[j]);
  }
  ClearedCombination out{v, {}};
  for (const auto& [u, a] : f) {
    if (a == 0) continue;
    auto shifted = u;
    for (std::size_t j = 0; j < s; ++j) shifted[j] += v[j];
    out.polynomial[shifted] += a;
  }
  return out;
}

struct StratumReport {
  AdmissibleSet set;
  TorusData torus;
  CenterLattice center;
  CenterLattice poisson_center;
  bool derivative_link = false;  // pmatrix == qmatrix . mu entrywise
  bool center_trivial() const noexcept { return center.trivial(); }
};

inline bool derivative_link_holds(const TorusData& data) {
  for (std::size_t i = 0; i < data.generators.size(); ++i)
    for (std::size_t j = 0; j < data.generators.size(); ++j)
      if (!(data.pmatrix[i][j] == MuPoly::linear(data.qmatrix[i][j]))) return false;
  return true;
}

inline StratumReport stratum_report(const AdmissibleSet& t, const PoissonAlgebra& pa) {
  TorusData data = torus_data(t, pa);
  CenterLattice c = center_lattice(data.qmatrix);
  CenterLattice pc = poisson_center_lattice(data.pmatrix);
  bool link = derivative_link_holds(data);
  return {t, std::move(data), std::move(c), std::move(pc), link};
}

// One-sided ideal membership ----------------------------------------------

/// Leading term of a nonzero element under DegRevPosLess.
template <class Scalar>
std::pair<Monomial, Scalar> leading_term(const Polynomial<Scalar>& f) {
  if (f.is_zero()) throw DomainError("leading term of zero");
  DegRevPosLess less;
  auto best = f.terms().begin();
  for (auto it = f.terms().begin(); it != f.terms().end(); ++it)
    if (less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

/// Reduces f by right multiples g * w of the given generators; returns the
/// remainder. A zero remainder certifies f lies in the right ideal they
/// generate (no completion is attempted, so a nonzero remainder is only
/// inconclusive).
inline WeylElement reduce_modulo_right_ideal(WeylElement f, const std::vector<WeylElement>& gens,
                                                 const FormalWeylAlgebra& alg) {
  std::vector<std::pair<Monomial, QTScalar>> leads;
  for (const auto& g : gens) {
    auto lt = leading_term(g);
    if (!lt.second.is_monomial())
      throw DomainError("ideal generator needs a unit leading coefficient");
    leads.push_back(std::move(lt));
  }
  WeylElement remainder(alg.n());
  while (!f.is_zero()) {
    auto [lm, lc] = leading_term(f);
    bool reduced = false;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (!leads[k].first.divides(lm)) continue;
      WeylElement h = alg.mul(gens[k], alg.monomial(lm.minus(leads[k].first), alg.ring().one()));
      auto [hm, hc] = leading_term(h);
      if (hm != lm || !hc.is_monomial())
        throw InvariantViolation("leading word of a product is not the sum of leading words");
      f -= h.scaled(lc * hc.inverse_monomial());
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lm, lc);
      f -= alg.monomial(lm, lc);
    }
  }
  return remainder;
}

/// The elements of T in A.
inline std::vector<WeylElement> ideal_generators(const AdmissibleSet& t,
                                                 const FormalWeylAlgebra& alg) {
  std::vector<WeylElement> out;
  for (const auto& m : t.markers().members()) out.push_back(marker_element(m, alg));
  return out;
}

/// w_i w_j - eta^{c_ij} w_j w_i reduced modulo the right ideal generated by T.
inline WeylElement torus_relation_residual(const AdmissibleSet& t, std::size_t i, std::size_t j,
                                           const FormalWeylAlgebra& alg) {
  const auto gens = y_set(t);
  const auto wi = marker_element(gens.at(i), alg), wj = marker_element(gens.at(j), alg);
  const ExpVec c = commutation_exponent(gens[i], gens[j], alg.params());
  WeylElement diff = alg.mul(wi, wj) - alg.mul(wj, wi).scaled(alg.ring().monomial(c));
  return reduce_modulo_right_ideal(std::move(diff), ideal_generators(t, alg), alg);
}

}  // namespace qweyl
