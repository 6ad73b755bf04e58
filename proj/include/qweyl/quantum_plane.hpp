#pragma once

// The quantum plane over F = Q[e_1^{+-1}] (rank 1): generated by x, y with
// x y = e_1 y x, in the basis x^a y^b. Since y x = e_1^{-1} x y,
//
//   x^a y^b * x^c y^d = e_1^{-bc} x^{a+c} y^{b+d}.
//
// With e_1 = t this is the affine quantum plane; reduction mod (t - 1) gives
// Q[x, y] with {x, y} = mu_1 x y, and mu_1 = e_1'(1) = 1 for e_1 = t.

#include <map>
#include <string>
#include <utility>

#include "qweyl/errors.hpp"
#include "qweyl/scalars.hpp"

namespace qweyl {

class QuantumPlane {
 public:
  using Word = std::pair<std::uint32_t, std::uint32_t>;  // (a, b) for x^a y^b

  template <class Scalar>
  class Element {
   public:
    std::map<Word, Scalar> terms;

    void add(const Word& w, const Scalar& c) {
      if (scalar_zero(c)) return;
      auto [it, inserted] = terms.try_emplace(w, c);
      if (!inserted) {
        it->second += c;
        if (scalar_zero(it->second)) terms.erase(it);
      }
    }
    Element& operator-=(const Element& o) {
      for (const auto& [w, c] : o.terms) add(w, -c);
      return *this;
    }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const Element&, const Element&) = default;

   private:
    static bool scalar_zero(const QTScalar& s) { return s.is_zero(); }
    static bool scalar_zero(const MuPoly& s) { return s.is_zero(); }
  };

  using QElement = Element<QTScalar>;
  using PElement = Element<MuPoly>;

  QTScalar e1() const { return QTScalar::monomial(ExpVec{1}); }
  QTScalar one() const { return QTScalar::constant(1, 1); }

  QElement word(std::uint32_t a, std::uint32_t b, const QTScalar& c) const {
    QElement e;
    e.add({a, b}, c);
    return e;
  }
  QElement x() const { return word(1, 0, one()); }
  QElement y() const { return word(0, 1, one()); }

  QElement mul(const QElement& u, const QElement& v) const {
    QElement out;
    for (const auto& [wu, cu] : u.terms)
      for (const auto& [wv, cv] : v.terms) {
        const auto swap = -static_cast<std::int64_t>(wu.second) * static_cast<std::int64_t>(wv.first);
        out.add({wu.first + wv.first, wu.second + wv.second},
                (cu * cv).shifted(ExpVec{swap}));
      }
    return out;
  }
  QElement scaled(const QElement& u, const QTScalar& s) const {
    QElement out;
    for (const auto& [w, c] : u.terms) out.add(w, s * c);
    return out;
  }
  QElement commutator(const QElement& u, const QElement& v) const { return mul(u, v) - mul(v, u); }

  /// gamma_1((t-1)^{-1}(uv - vu)) with mu_1 formal.
  PElement semiclassical_bracket(const QElement& u, const QElement& v) const {
    PElement out;
    const QElement comm = commutator(u, v);
    for (const auto& [w, c] : comm.terms) {
      if (c.eval_one() != 0)
        throw InvariantViolation("quantum-plane commutator not divisible by (t-1)");
      out.add(w, c.limit_div());
    }
    return out;
  }

  /// Commutative monomial in the demo's juxtaposed style: "xy", "x^2y".
  static std::string word_str(const Word& w) {
    std::string s;
    auto put = [&](const char* v, std::uint32_t e) {
      if (e == 0) return;
      s += v;
      if (e > 1) s += "^" + std::to_string(e);
    };
    put("x", w.first);
    put("y", w.second);
    return s.empty() ? "1" : s;
  }
};

}  // namespace qweyl
