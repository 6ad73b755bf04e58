#pragma once

// The Poisson Weyl algebra A_1 = Q[mu][y_1, x_1, ..., y_n, x_n]: commutative
// polynomials whose coefficients are polynomials in the formal symbols mu_i,
// with the bracket determined on generators by (i < j)
//
//   {y_j, y_i} = (L_ji . mu) y_i y_j
//   {y_j, x_i} = (L_ij . mu) x_i y_j
//   {x_j, y_i} = ((s_i + L_ij) . mu) y_i x_j
//   {x_j, x_i} = -((s_i + L_ij) . mu) x_i x_j
//   {x_i, y_i} = (s_i . mu) (1 + sum_{k<=i} y_k x_k)
//
// and extended as a Q[mu]-bilinear biderivation.

#include <optional>
#include <utility>
#include <vector>

#include "qweyl/errors.hpp"
#include "qweyl/scalars.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl {

using PoissonElement = Polynomial<MuPoly>;

class PoissonAlgebra {
 public:
  explicit PoissonAlgebra(WeylParams params) : params_(std::move(params)) { build_table(); }

  const WeylParams& params() const noexcept { return params_; }
  std::size_t n() const noexcept { return params_.n(); }
  std::size_t rank() const noexcept { return params_.rank(); }

  PoissonElement zero() const { return PoissonElement(n()); }
  PoissonElement constant(const MuPoly& c) const {
    PoissonElement e(n());
    e.add_term(Monomial(n()), c);
    return e;
  }
  PoissonElement constant(const Rational& c) const { return constant(MuPoly::constant(rank(), c)); }
  PoissonElement one() const { return constant(Rational(1)); }
  PoissonElement monomial(const Monomial& m, const MuPoly& c) const {
    PoissonElement e(n());
    e.add_term(m, c);
    return e;
  }
  PoissonElement monomial(const Monomial& m) const {
    return monomial(m, MuPoly::constant(rank(), 1));
  }
  PoissonElement gen(Gen g) const {
    if (g.index < 1 || g.index > n())
      throw InstanceError("generator index " + std::to_string(g.index) + " out of range");
    return monomial(Monomial::generator(n(), g));
  }
  PoissonElement y(std::size_t k) const { return gen({GenKind::y, k}); }
  PoissonElement x(std::size_t k) const { return gen({GenKind::x, k}); }
  PoissonElement z(std::size_t i) const {
    if (i > n()) throw InstanceError("z index " + std::to_string(i) + " out of range");
    PoissonElement e = one();
    for (std::size_t k = 1; k <= i; ++k) {
      Monomial m(n());
      m[2 * (k - 1)] = m[2 * (k - 1) + 1] = 1;
      e.add_term(m, MuPoly::constant(rank(), 1));
    }
    return e;
  }
  /// The derivative q~_i'(1) = s_i . mu.
  MuPoly qprime(std::size_t i) const { return MuPoly::linear(params_.qexp(i)); }
  /// The derivative l~_ij'(1) = L_ij . mu.
  MuPoly lprime(std::size_t i, std::size_t j) const { return MuPoly::linear(params_.lexp(i, j)); }

  PoissonElement mul(const PoissonElement& a, const PoissonElement& b) const {
    check(a);
    check(b);
    PoissonElement out(n());
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms()) out.add_term(ma + mb, ca * cb);
    return out;
  }
  PoissonElement pow(const PoissonElement& a, std::uint32_t k) const {
    PoissonElement out = one();
    for (std::uint32_t i = 0; i < k; ++i) out = mul(out, a);
    return out;
  }

  /// {g_p, g_q} for generator positions p, q.
  const PoissonElement& generator_bracket(std::size_t p, std::size_t q) const {
    return table_.at(p).at(q);
  }

  /// {a, b}, expanding both sides into monomials and applying the Leibniz
  /// rule factor by factor: {m, m'} = sum_{p,q} m_p m'_q (m/g_p)(m'/g_q){g_p, g_q}.
  PoissonElement bracket(const PoissonElement& a, const PoissonElement& b) const {
    check(a);
    check(b);
    PoissonElement out(n());
    for (const auto& [ma, ca] : a.terms()) {
      for (const auto& [mb, cb] : b.terms()) {
        const MuPoly c = ca * cb;
        if (c.is_zero()) continue;
        for (std::size_t p = 0; p < ma.size(); ++p) {
          if (ma[p] == 0) continue;
          Monomial ra = ma;
          ra[p] -= 1;
          for (std::size_t q = 0; q < mb.size(); ++q) {
            if (mb[q] == 0) continue;
            const auto& gb = table_[p][q];
            if (gb.is_zero()) continue;
            Monomial rest = ra + mb;
            rest[q] -= 1;
            const MuPoly k = c.scaled(Rational(static_cast<long>(ma[p] * mb[q])));
            for (const auto& [mg, cg] : gb.terms()) out.add_term(mg + rest, k * cg);
          }
        }
      }
    }
    return out;
  }

  /// {a,{b,c}} + {b,{c,a}} + {c,{a,b}}.
  PoissonElement jacobiator(const PoissonElement& a, const PoissonElement& b,
                            const PoissonElement& c) const {
    return bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
  }

  /// a / b when b divides a exactly; b's leading coefficient must be a
  /// rational constant. A single divisor in an integral domain divides iff the
  /// division algorithm leaves no remainder.
  std::optional<PoissonElement> divide_exact(PoissonElement a, const PoissonElement& b) const {
    check(a);
    check(b);
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    const auto& [lb, cb] = *b.terms().rbegin();
    if (!cb.is_constant())
      throw DomainError("divisor leading coefficient must be a rational constant");
    const Rational inv = 1 / cb.constant_term();
    PoissonElement quotient(n());
    while (!a.is_zero()) {
      const auto& [la, ca] = *a.terms().rbegin();
      if (!lb.divides(la)) return std::nullopt;
      PoissonElement step = monomial(la.minus(lb), ca.scaled(inv));
      a -= mul(step, b);
      quotient += step;
    }
    return quotient;
  }

 private:
  void check(const PoissonElement& e) const {
    if (e.n() != n())
      throw InstanceError("Poisson element over n=" + std::to_string(e.n()) +
                          " used in algebra with n=" + std::to_string(n()));
  }

  void build_table() {
    const std::size_t size = 2 * n();
    table_.assign(size, std::vector<PoissonElement>(size, zero()));
    auto mono2 = [&](Gen a, Gen b) {
      Monomial m(n());
      m[a.position()] += 1;
      m[b.position()] += 1;
      return m;
    };
    auto set = [&](Gen a, Gen b, PoissonElement v) {
      table_[b.position()][a.position()] = -v;
      table_[a.position()][b.position()] = std::move(v);
    };
    for (std::size_t i = 1; i <= n(); ++i) {
      const Gen yi{GenKind::y, i}, xi{GenKind::x, i};
      for (std::size_t j = i + 1; j <= n(); ++j) {
        const Gen yj{GenKind::y, j}, xj{GenKind::x, j};
        const MuPoly sl = qprime(i) + lprime(i, j);
        set(yj, yi, monomial(mono2(yi, yj), lprime(j, i)));
        set(yj, xi, monomial(mono2(xi, yj), lprime(i, j)));
        set(xj, yi, monomial(mono2(yi, xj), sl));
        set(xj, xi, monomial(mono2(xi, xj), -sl));
      }
      PoissonElement zi = z(i);
      PoissonElement v(n());
      for (const auto& [m, c] : zi.terms()) v.add_term(m, c * qprime(i));
      set(xi, yi, std::move(v));
    }
  }

  WeylParams params_;
  std::vector<std::vector<PoissonElement>> table_;
};

/// Reduction mod (t - 1): PBW words read as commutative monomials,
/// coefficients evaluated at t = 1.
inline PoissonElement gamma1(const WeylElement& a, std::size_t rank) {
  return a.map_coefficients<MuPoly>(
      [rank](const QTScalar& c) { return MuPoly::constant(rank, c.eval_one()); });
}

/// gamma_1((t - 1)^{-1} (ab - ba)). The commutator of any two elements is
/// divisible by (t - 1) because A_1 is commutative; a failure here means the
/// arithmetic core is broken and is reported as InvariantViolation.
inline PoissonElement semiclassical_bracket(const WeylElement& a, const WeylElement& b,
                                            const FormalWeylAlgebra& alg) {
  const WeylElement c = alg.commutator(a, b);
  if (!divisible_by_t_minus_1(c))
    throw InvariantViolation("commutator not divisible by (t-1): " + to_string(c));
  return c.map_coefficients<MuPoly>([](const QTScalar& s) { return s.limit_div(); });
}

}  // namespace qweyl
