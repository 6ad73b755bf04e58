#pragma once

// Exact coefficient arithmetic.
//
// The coefficient ring is modelled on its Q-span of Laurent monomials
// e_1^{v_1} ... e_r^{v_r}: a QTScalar is a finite map v -> c meaning
// sum_v c_v prod_i e_i(t)^{v_i}. Because every e_i satisfies e_i(1) = 1 and
// e_i'(1) = mu_i, evaluation and differentiation at t = 1 are group-ring
// functionals and never need t itself.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qweyl/errors.hpp"

namespace qweyl {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Result is canonicalized; q = 0 throws.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& v) {
    auto b = v.find_first_not_of(" \t\n\r");
    auto e = v.find_last_not_of(" \t\n\r");
    v = b == std::string::npos ? std::string{} : v.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw InstanceError("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    bool ok = (ch >= '0' && ch <= '9') || ch == '/' || (ch == '-' && i == 0);
    if (!ok) throw InstanceError("malformed rational literal '" + std::string(text) + "'");
  }
  auto slash = s.find('/');
  if (slash != std::string::npos && (slash == 0 || slash + 1 == s.size() ||
                                     s.find('/', slash + 1) != std::string::npos ||
                                     s[slash + 1] == '-'))
    throw InstanceError("malformed rational literal '" + std::string(text) + "'");
  Rational r;
  try {
    r = Rational(s, 10);
  } catch (const std::invalid_argument&) {
    throw InstanceError("malformed rational literal '" + std::string(text) + "'");
  }
  if (r.get_den() == 0) throw InstanceError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    Rational inv = 1 / base;
    return rational_pow(inv, -exponent);
  }
  Rational out = 1;
  Rational b = base;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e) {
    if (e & 1U) out *= b;
    b *= b;
    e >>= 1U;
  }
  return out;
}

/// Exponent vector of a Laurent monomial in e_1..e_r.
class ExpVec {
 public:
  ExpVec() = default;
  explicit ExpVec(std::size_t rank) : entries_(rank, 0) {}
  explicit ExpVec(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}
  ExpVec(std::initializer_list<std::int64_t> entries) : entries_(entries) {}

  static ExpVec unit(std::size_t rank, std::size_t i) {
    ExpVec v(rank);
    v.entries_.at(i) = 1;
    return v;
  }

  std::size_t rank() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::int64_t& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

  bool is_zero() const {
    for (auto e : entries_)
      if (e != 0) return false;
    return true;
  }

  ExpVec& operator+=(const ExpVec& o) {
    check(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  ExpVec& operator-=(const ExpVec& o) {
    check(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  ExpVec operator-() const {
    ExpVec v = *this;
    for (auto& e : v.entries_) e = -e;
    return v;
  }
  ExpVec scaled(std::int64_t k) const {
    ExpVec v = *this;
    for (auto& e : v.entries_) e *= k;
    return v;
  }
  friend ExpVec operator+(ExpVec a, const ExpVec& b) { return a += b; }
  friend ExpVec operator-(ExpVec a, const ExpVec& b) { return a -= b; }

  friend auto operator<=>(const ExpVec&, const ExpVec&) = default;
  friend bool operator==(const ExpVec&, const ExpVec&) = default;

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(entries_[i]);
    }
    return s + "]";
  }

 private:
  void check(const ExpVec& o) const {
    if (o.entries_.size() != entries_.size())
      throw InstanceError("exponent vector rank mismatch: " + std::to_string(entries_.size()) +
                          " vs " + std::to_string(o.entries_.size()));
  }

  std::vector<std::int64_t> entries_;
};

/// Polynomial in the formal symbols mu_1..mu_r with rational coefficients.
class MuPoly {
 public:
  using Degree = std::vector<std::uint32_t>;
  using Terms = std::map<Degree, Rational>;

  explicit MuPoly(std::size_t rank = 0) : rank_(rank) {}

  static MuPoly constant(std::size_t rank, const Rational& c) {
    MuPoly p(rank);
    if (c != 0) p.terms_.emplace(Degree(rank, 0), c);
    return p;
  }
  static MuPoly variable(std::size_t rank, std::size_t i) {
    MuPoly p(rank);
    Degree d(rank, 0);
    d.at(i) = 1;
    p.terms_.emplace(std::move(d), Rational(1));
    return p;
  }
  /// The linear form v_1 mu_1 + ... + v_r mu_r.
  static MuPoly linear(const ExpVec& v) {
    MuPoly p(v.rank());
    for (std::size_t i = 0; i < v.rank(); ++i) {
      if (v[i] == 0) continue;
      Degree d(v.rank(), 0);
      d[i] = 1;
      p.terms_.emplace(std::move(d), Rational(static_cast<long>(v[i])));
    }
    return p;
  }

  std::size_t rank() const noexcept { return rank_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }
  Rational constant_term() const {
    auto it = terms_.find(Degree(rank_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }
  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, total_degree(k));
    return d;
  }

  MuPoly& operator+=(const MuPoly& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) accumulate(k, c);
    return *this;
  }
  MuPoly& operator-=(const MuPoly& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) accumulate(k, -c);
    return *this;
  }
  MuPoly operator-() const {
    MuPoly p = *this;
    for (auto& [k, c] : p.terms_) c = -c;
    return p;
  }
  MuPoly scaled(const Rational& s) const {
    MuPoly p(rank_);
    if (s == 0) return p;
    for (const auto& [k, c] : terms_) p.terms_.emplace(k, c * s);
    return p;
  }
  friend MuPoly operator+(MuPoly a, const MuPoly& b) { return a += b; }
  friend MuPoly operator-(MuPoly a, const MuPoly& b) { return a -= b; }
  friend MuPoly operator*(const MuPoly& a, const MuPoly& b) {
    a.check(b);
    MuPoly p(a.rank_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        Degree k = ka;
        for (std::size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
        p.accumulate(k, ca * cb);
      }
    return p;
  }
  MuPoly& operator*=(const MuPoly& o) { return *this = *this * o; }

  friend bool operator==(const MuPoly& a, const MuPoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  /// Human-readable form, highest term first: "2*μ1 - μ2 + 3".
  std::string str(std::string_view symbol = "μ") const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [k, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += std::string(symbol) + std::to_string(i + 1);
        if (k[i] > 1) mono += "^" + std::to_string(k[i]);
      }
      Rational mag = abs(c);
      bool neg = c < 0;
      if (first)
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (mono.empty())
        out += to_string(mag);
      else if (mag == 1)
        out += mono;
      else
        out += to_string(mag) + "*" + mono;
      first = false;
    }
    return out;
  }

 private:
  static std::uint32_t total_degree(const Degree& d) {
    std::uint32_t s = 0;
    for (auto e : d) s += e;
    return s;
  }
  void check(const MuPoly& o) const {
    if (o.rank_ != rank_)
      throw InstanceError("mu-polynomial rank mismatch: " + std::to_string(rank_) + " vs " +
                          std::to_string(o.rank_));
  }
  void accumulate(const Degree& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::size_t rank_;
  Terms terms_;
};

/// Element of the e-monomial subring of the coefficient ring.
class QTScalar {
 public:
  using Terms = std::map<ExpVec, Rational>;

  explicit QTScalar(std::size_t rank = 0) : rank_(rank) {}

  static QTScalar constant(std::size_t rank, const Rational& c) {
    QTScalar s(rank);
    if (c != 0) s.terms_.emplace(ExpVec(rank), c);
    return s;
  }
  static QTScalar monomial(const ExpVec& v, const Rational& c = 1) {
    QTScalar s(v.rank());
    if (c != 0) s.terms_.emplace(v, c);
    return s;
  }

  std::size_t rank() const noexcept { return rank_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Single term c * e^v; such scalars are units of the group ring.
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
  }

  QTScalar& operator+=(const QTScalar& o) {
    check(o);
    for (const auto& [v, c] : o.terms_) accumulate(v, c);
    return *this;
  }
  QTScalar& operator-=(const QTScalar& o) {
    check(o);
    for (const auto& [v, c] : o.terms_) accumulate(v, -c);
    return *this;
  }
  QTScalar operator-() const {
    QTScalar s = *this;
    for (auto& [v, c] : s.terms_) c = -c;
    return s;
  }
  QTScalar scaled(const Rational& k) const {
    QTScalar s(rank_);
    if (k == 0) return s;
    for (const auto& [v, c] : terms_) s.terms_.emplace(v, c * k);
    return s;
  }
  /// Multiplies by the unit e^shift.
  QTScalar shifted(const ExpVec& shift) const {
    if (shift.rank() != rank_) throw InstanceError("exponent vector rank mismatch in shift");
    QTScalar s(rank_);
    for (const auto& [v, c] : terms_) s.terms_.emplace(v + shift, c);
    return s;
  }
  friend QTScalar operator+(QTScalar a, const QTScalar& b) { return a += b; }
  friend QTScalar operator-(QTScalar a, const QTScalar& b) { return a -= b; }
  friend QTScalar operator*(const QTScalar& a, const QTScalar& b) {
    a.check(b);
    QTScalar s(a.rank_);
    for (const auto& [va, ca] : a.terms_)
      for (const auto& [vb, cb] : b.terms_) s.accumulate(va + vb, ca * cb);
    return s;
  }
  QTScalar& operator*=(const QTScalar& o) { return *this = *this * o; }

  QTScalar pow(std::uint32_t k) const {
    QTScalar out = constant(rank_, 1);
    QTScalar base = *this;
    while (k) {
      if (k & 1U) out *= base;
      base *= base;
      k >>= 1U;
    }
    return out;
  }

  /// Inverse of a unit c * e^v.
  QTScalar inverse_monomial() const {
    if (!is_monomial())
      throw DomainError("only single-term scalars are invertible in the group ring, got " + str());
    const auto& [v, c] = *terms_.begin();
    return monomial(-v, 1 / c);
  }

  friend bool operator==(const QTScalar& a, const QTScalar& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  /// Value at t = 1: every e-monomial evaluates to 1.
  Rational eval_one() const {
    Rational s = 0;
    for (const auto& [v, c] : terms_) s += c;
    return s;
  }

  /// Derivative at t = 1. By the product rule with e_i(1) = 1,
  /// d/dt prod e_i^{v_i} |_{t=1} = v . mu.
  MuPoly deriv_one() const {
    MuPoly p(rank_);
    for (const auto& [v, c] : terms_) p += MuPoly::linear(v).scaled(c);
    return p;
  }

  /// (a / (t - 1)) at t = 1, defined when a(1) = 0. Since
  /// a(t) = a'(1)(t - 1) + O((t - 1)^2) this is exactly a'(1).
  MuPoly limit_div() const {
    if (eval_one() != 0)
      throw DivisibilityError("scalar " + str() + " is not divisible by (t-1): value at 1 is " +
                              to_string(eval_one()));
    return deriv_one();
  }

  /// Exact quotient by (e^s - 1), or nullopt when it does not divide.
  ///
  /// The group ring is free over Q[X, X^-1] (X = e^s) with a basis of coset
  /// representatives of Z*s, so divisibility is decided coset by coset: the
  /// one-variable Laurent polynomial of each coset must vanish at X = 1.
  std::optional<QTScalar> divide_by_monomial_minus_one(const ExpVec& s) const {
    if (s.rank() != rank_) throw InstanceError("exponent vector rank mismatch in division");
    if (s.is_zero()) throw DomainError("division by e^0 - 1 = 0");
    // Coset key: the representative of v + Z*dir whose pivot coordinate lies in [0, step).
    std::size_t pivot = 0;
    while (s[pivot] == 0) ++pivot;
    const std::int64_t step = s[pivot] < 0 ? -s[pivot] : s[pivot];
    const ExpVec dir = s[pivot] < 0 ? -s : s;
    auto floor_div = [](std::int64_t a, std::int64_t b) {
      std::int64_t q = a / b;
      return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
    };
    std::map<ExpVec, std::map<std::int64_t, Rational>> cosets;
    for (const auto& [v, c] : terms_) {
      std::int64_t k = floor_div(v[pivot], step);
      ExpVec base = v - dir.scaled(k);
      cosets[base][k] += c;
    }
    QTScalar quotient(rank_);
    for (auto& [base, poly] : cosets) {
      // poly(X) = sum c_k X^k, dir-direction. Divide by (X - 1) descending.
      Rational total = 0;
      for (const auto& [k, c] : poly) total += c;
      if (total != 0) return std::nullopt;
      // Synthetic division from the top: q_{k-1} = c_k + q_k.
      Rational carry = 0;
      for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        auto next = std::next(it);
        carry += it->second;
        std::int64_t lo = next == poly.rend() ? it->first : next->first;
        for (std::int64_t k = it->first - 1; k >= lo; --k)
          if (carry != 0) quotient.accumulate(base + dir.scaled(k), carry);
      }
    }
    // Quotient is by (e^dir - 1); flip sign if s = -dir since e^{-d} - 1 = -e^{-d}(e^d - 1).
    if (s[pivot] < 0) quotient = (-quotient).shifted(dir);
    return quotient;
  }

  /// Highest term first: "eta^[1,0] - 1".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [v, c] = *it;
      Rational mag = abs(c);
      bool neg = c < 0;
      if (first)
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (v.is_zero())
        out += to_string(mag);
      else if (mag == 1)
        out += "eta^" + v.str();
      else
        out += to_string(mag) + "*eta^" + v.str();
      first = false;
    }
    return out;
  }

 private:
  void check(const QTScalar& o) const {
    if (o.rank_ != rank_)
      throw InstanceError("scalar rank mismatch: " + std::to_string(rank_) + " vs " +
                          std::to_string(o.rank_));
  }
  void accumulate(const ExpVec& v, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(v, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::size_t rank_;
  Terms terms_;
};

}  // namespace qweyl
