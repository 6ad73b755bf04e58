#pragma once

// Rational realizations of the interpolating quadratics e_i and the
// specialization maps t -> lambda onto concrete algebras A_lambda.

#include <string>
#include <utility>
#include <vector>

#include "qweyl/errors.hpp"
#include "qweyl/scalars.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl {

/// a t^2 + b t + c.
struct QuadPoly {
  Rational a, b, c;

  Rational operator()(const Rational& t) const { return (a * t + b) * t + c; }
  Rational derivative(const Rational& t) const { return 2 * a * t + b; }

  std::string str() const {
    std::string out;
    auto term = [&](const Rational& k, const std::string& var) {
      if (k == 0) return;
      bool neg = k < 0;
      Rational mag = abs(k);
      std::string body = var.empty() ? to_string(mag) : (mag == 1 ? var : to_string(mag) + "*" + var);
      if (out.empty())
        out = (neg ? "-" : "") + body;
      else
        out += (neg ? " - " : " + ") + body;
    };
    term(a, "t^2");
    term(b, "t");
    term(c, "");
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const QuadPoly&, const QuadPoly&) = default;
};

/// The quadratic with e(q) = eta, e(1) = 1, e'(1) = mu.
///
/// Written in the Taylor basis at 1, e = 1 + mu (t-1) + k (t-1)^2 meets the
/// last two conditions for every k, and e(q) = eta fixes
/// k = (eta - 1 - mu (q-1)) / (q-1)^2.
inline QuadPoly build_e(const Rational& q, const Rational& eta, const Rational& mu) {
  if (q == 0 || q == 1) throw DomainError("interpolation node q must avoid 0 and 1, got " + to_string(q));
  if (eta == 0) throw DomainError("eta must be nonzero");
  const Rational h = q - 1;
  const Rational k = (eta - 1 - mu * h) / (h * h);
  // 1 + mu (t - 1) + k (t - 1)^2 = k t^2 + (mu - 2k) t + (1 - mu + k)
  return {k, mu - 2 * k, 1 - mu + k};
}

/// Values e_i(lambda), rejecting lambda in {0, 1} and roots of any e_i.
inline std::vector<Rational> evaluate_at(const std::vector<QuadPoly>& e, const Rational& lambda) {
  if (lambda == 0 || lambda == 1)
    throw DomainError("lambda outside parameter domain: " + to_string(lambda) + " is 0 or 1");
  std::vector<Rational> values;
  for (std::size_t i = 0; i < e.size(); ++i) {
    Rational v = e[i](lambda);
    if (v == 0)
      throw DomainError("lambda outside parameter domain: e_" + std::to_string(i + 1) + "(" +
                        to_string(lambda) + ") = 0");
    values.push_back(std::move(v));
  }
  return values;
}

/// The concrete algebra A_lambda: same straightening engine, coefficients in Q.
inline WeylAlgebra<ConcreteRing> concrete_algebra(const WeylParams& params,
                                                  const std::vector<QuadPoly>& e,
                                                  const Rational& lambda) {
  if (e.size() != params.rank())
    throw InstanceError("need " + std::to_string(params.rank()) + " interpolating polynomials, got " +
                        std::to_string(e.size()));
  return WeylAlgebra<ConcreteRing>(params, ConcreteRing(evaluate_at(e, lambda)));
}

inline Rational specialize_scalar(const QTScalar& s, const std::vector<Rational>& values) {
  if (s.rank() != values.size()) throw InstanceError("scalar rank does not match value count");
  Rational out = 0;
  for (const auto& [v, c] : s.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < values.size(); ++i) term *= rational_pow(values[i], v[i]);
    out += term;
  }
  return out;
}

/// gamma_lambda: evaluates each coefficient at t = lambda, PBW words unchanged.
inline Polynomial<Rational> specialize(const WeylElement& a, const Rational& lambda,
                                       const std::vector<QuadPoly>& e) {
  const auto values = evaluate_at(e, lambda);
  return a.map_coefficients<Rational>(
      [&](const QTScalar& c) { return specialize_scalar(c, values); });
}

/// True iff no relation prod v_i^{u_i} = 1 with 0 < max|u_i| <= bound exists.
/// Exhaustive over the box, using a table of powers.
inline bool independence_check(const std::vector<Rational>& values, std::int64_t bound) {
  if (bound < 1) throw DomainError("bound must be positive");
  for (const auto& v : values)
    if (v == 0) throw DomainError("values must be nonzero");
  const std::size_t r = values.size();
  if (r == 0) return true;
  const std::size_t width = static_cast<std::size_t>(2 * bound + 1);
  std::vector<std::vector<Rational>> powers(r, std::vector<Rational>(width));
  for (std::size_t i = 0; i < r; ++i)
    for (std::int64_t e = -bound; e <= bound; ++e)
      powers[i][static_cast<std::size_t>(e + bound)] = rational_pow(values[i], e);
  std::vector<std::int64_t> u(r, -bound);
  while (true) {
    bool nonzero = false;
    Rational prod = 1;
    for (std::size_t i = 0; i < r; ++i) {
      nonzero = nonzero || u[i] != 0;
      prod *= powers[i][static_cast<std::size_t>(u[i] + bound)];
    }
    if (nonzero && prod == 1) return false;
    std::size_t i = 0;
    while (i < r && u[i] == bound) u[i++] = -bound;
    if (i == r) break;
    ++u[i];
  }
  return true;
}

}  // namespace qweyl
