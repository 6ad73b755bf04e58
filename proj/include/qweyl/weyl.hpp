#pragma once

// The quantized Weyl algebra A over the coefficient ring, in its PBW basis
// y_1^{r_1} x_1^{s_1} ... y_n^{r_n} x_n^{s_n}, with multiplication by
// straightening against the defining relations (i < j):
//
//   y_j y_i = l~_ji y_i y_j          y_j x_i = l~_ij x_i y_j
//   x_j y_i = q~_i l~_ij y_i x_j     x_j x_i = q~_i^-1 l~_ij^-1 x_i x_j
//   x_i y_i - q~_i y_i x_i = (q~_i - 1) z_{i-1},   z_i = 1 + sum_{k<=i} y_k x_k
//
// with q~_i = e^{s_i} and l~_ij = e^{L_ij}. The engine is generic over the
// coefficient ring so the same code multiplies in A and in its rational
// specializations.

#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/errors.hpp"
#include "qweyl/scalars.hpp"

namespace qweyl {

/// Structure constants of an instance, stored as exponent vectors.
class WeylParams {
 public:
  WeylParams() = default;

  /// qexp[i] = s_{i+1}, lexp[i][j] = L_{i+1,j+1}. Throws InstanceError on
  /// broken invariants (rank, antisymmetry, zero diagonal, s_i != 0).
  WeylParams(std::size_t rank, std::vector<ExpVec> qexp, std::vector<std::vector<ExpVec>> lexp)
      : n_(qexp.size()), r_(rank), qexp_(std::move(qexp)), lexp_(std::move(lexp)) {
    validate();
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t rank() const noexcept { return r_; }

  /// s_i, 1-based.
  const ExpVec& qexp(std::size_t i) const { return qexp_.at(i - 1); }
  /// L_ij, 1-based.
  const ExpVec& lexp(std::size_t i, std::size_t j) const { return lexp_.at(i - 1).at(j - 1); }

  friend bool operator==(const WeylParams&, const WeylParams&) = default;

 private:
  void validate() const {
    if (lexp_.size() != n_)
      throw InstanceError("lambda exponent table has " + std::to_string(lexp_.size()) +
                          " rows, expected " + std::to_string(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      if (qexp_[i].rank() != r_)
        throw InstanceError("q exponent row " + std::to_string(i + 1) + " has length " +
                            std::to_string(qexp_[i].rank()) + ", expected rank " +
                            std::to_string(r_));
      if (qexp_[i].is_zero())
        throw InstanceError("q_" + std::to_string(i + 1) + " = 1 (zero exponent vector)");
      if (lexp_[i].size() != n_)
        throw InstanceError("lambda exponent row " + std::to_string(i + 1) + " has wrong length");
      for (std::size_t j = 0; j < n_; ++j)
        if (lexp_[i][j].rank() != r_)
          throw InstanceError("lambda exponent (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ") has wrong rank");
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (!lexp_[i][i].is_zero())
        throw InstanceError("lambda_" + std::to_string(i + 1) + std::to_string(i + 1) +
                            " != 1 (nonzero diagonal exponent)");
      for (std::size_t j = i + 1; j < n_; ++j)
        if (lexp_[i][j] != -lexp_[j][i])
          throw InstanceError("lambda exponents not antisymmetric at (" + std::to_string(i + 1) +
                              "," + std::to_string(j + 1) + ")");
    }
  }

  std::size_t n_ = 0;
  std::size_t r_ = 0;
  std::vector<ExpVec> qexp_;
  std::vector<std::vector<ExpVec>> lexp_;
};

enum class GenKind : std::uint8_t { y, x };

/// A generator y_k or x_k (k is 1-based).
struct Gen {
  GenKind kind;
  std::size_t index;

  std::size_t position() const { return 2 * (index - 1) + (kind == GenKind::x ? 1 : 0); }
  std::string str() const { return (kind == GenKind::y ? "y" : "x") + std::to_string(index); }

  friend auto operator<=>(const Gen& a, const Gen& b) { return a.position() <=> b.position(); }
  friend bool operator==(const Gen& a, const Gen& b) {
    return a.kind == b.kind && a.index == b.index;
  }
};

/// Exponent tuple (r_1, s_1, ..., r_n, s_n). Read as the PBW word
/// y_1^{r_1} x_1^{s_1} ... in A and as a commutative monomial in A_1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(2 * n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial generator(std::size_t n, Gen g) {
    Monomial m(n);
    m.exps_.at(g.position()) = 1;
    return m;
  }

  std::size_t n() const noexcept { return exps_.size() / 2; }
  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t pos) const { return exps_[pos]; }
  std::uint32_t& operator[](std::size_t pos) { return exps_[pos]; }
  std::uint32_t y(std::size_t k) const { return exps_[2 * (k - 1)]; }
  std::uint32_t x(std::size_t k) const { return exps_[2 * (k - 1) + 1]; }
  const std::vector<std::uint32_t>& exps() const noexcept { return exps_; }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }
  bool is_one() const { return degree() == 0; }

  /// Componentwise sum. The product of commutative monomials; in A it is the
  /// leading word of a product.
  friend Monomial operator+(Monomial a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps_.size(); ++i) a.exps_[i] += b.exps_[i];
    return a;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }
  Monomial minus(const Monomial& o) const {
    Monomial m = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] -= o.exps_[i];
    return m;
  }

  /// "y1^2*x1*y3"; "1" for the empty word.
  std::string str() const {
    std::string s;
    for (std::size_t p = 0; p < exps_.size(); ++p) {
      if (exps_[p] == 0) continue;
      if (!s.empty()) s += "*";
      s += (p % 2 == 0 ? "y" : "x") + std::to_string(p / 2 + 1);
      if (exps_[p] > 1) s += "^" + std::to_string(exps_[p]);
    }
    return s.empty() ? "1" : s;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

using PbwMonomial = Monomial;

/// Total degree first, then lexicographic on the exponent tuple.
struct DegLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a < b;
  }
};

/// Total degree first, then the exponent tuple compared from its last entry.
/// Under this order the leading word of a product in A is the sum of the
/// leading words: every correction term of the straightening rule trades
/// x_k y_k for factors of index < k.
struct DegRevPosLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t p = a.size(); p-- > 0;)
      if (a[p] != b[p]) return a[p] < b[p];
    return false;
  }
};

inline bool scalar_is_zero(const QTScalar& s) { return s.is_zero(); }
inline bool scalar_is_zero(const Rational& s) { return s == 0; }
inline bool scalar_is_zero(const MuPoly& s) { return s.is_zero(); }

/// Finite map monomial -> coefficient with no zero coefficients.
template <class Scalar>
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, DegLexLess>;

  Polynomial() = default;
  explicit Polynomial(std::size_t n) : n_(n) {}

  std::size_t n() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  void add_term(const Monomial& m, const Scalar& c) {
    if (scalar_is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (scalar_is_zero(it->second)) terms_.erase(it);
  }

  /// Coefficient of m, or nullptr when absent.
  const Scalar* coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  /// Multiplication by a central scalar.
  Polynomial scaled(const Scalar& s) const {
    Polynomial p(n_);
    for (const auto& [m, c] : terms_) p.add_term(m, s * c);
    return p;
  }

  /// Applies f to every coefficient, dropping zeros.
  template <class Out, class F>
  Polynomial<Out> map_coefficients(F&& f) const {
    Polynomial<Out> p(n_);
    for (const auto& [m, c] : terms_) p.add_term(m, f(c));
    return p;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void check(const Polynomial& o) const {
    if (o.n_ != n_)
      throw InstanceError("elements over different generator counts: n=" + std::to_string(n_) +
                          " vs n=" + std::to_string(o.n_));
  }

  std::size_t n_ = 0;
  Terms terms_;
};

using WeylElement = Polynomial<QTScalar>;

/// Coefficients in the e-monomial subring of F.
class FormalRing {
 public:
  using Scalar = QTScalar;

  explicit FormalRing(std::size_t rank) : rank_(rank) {}

  std::size_t rank() const noexcept { return rank_; }
  Scalar zero() const { return QTScalar(rank_); }
  Scalar one() const { return QTScalar::constant(rank_, 1); }
  Scalar constant(const Rational& c) const { return QTScalar::constant(rank_, c); }
  Scalar monomial(const ExpVec& v) const {
    if (v.rank() != rank_) throw InstanceError("exponent vector rank mismatch");
    return QTScalar::monomial(v);
  }

 private:
  std::size_t rank_;
};

/// Rational coefficients with each e_i replaced by a fixed nonzero value.
class ConcreteRing {
 public:
  using Scalar = Rational;

  explicit ConcreteRing(std::vector<Rational> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (values_[i] == 0)
        throw DomainError("e_" + std::to_string(i + 1) + " evaluates to 0");
  }

  std::size_t rank() const noexcept { return values_.size(); }
  const std::vector<Rational>& values() const noexcept { return values_; }
  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar constant(const Rational& c) const { return c; }
  Scalar monomial(const ExpVec& v) const {
    if (v.rank() != values_.size()) throw InstanceError("exponent vector rank mismatch");
    Rational out = 1;
    for (std::size_t i = 0; i < values_.size(); ++i) out *= rational_pow(values_[i], v[i]);
    return out;
  }

 private:
  std::vector<Rational> values_;
};

template <class Ring>
class WeylAlgebra {
 public:
  using Scalar = typename Ring::Scalar;
  using Element = Polynomial<Scalar>;

  WeylAlgebra(WeylParams params, Ring ring) : params_(std::move(params)), ring_(std::move(ring)) {
    if (ring_.rank() != params_.rank())
      throw InstanceError("coefficient ring rank " + std::to_string(ring_.rank()) +
                          " does not match instance rank " + std::to_string(params_.rank()));
  }

  const WeylParams& params() const noexcept { return params_; }
  const Ring& ring() const noexcept { return ring_; }
  std::size_t n() const noexcept { return params_.n(); }

  Element zero() const { return Element(n()); }
  Element constant(const Scalar& c) const {
    Element e(n());
    e.add_term(Monomial(n()), c);
    return e;
  }
  Element one() const { return constant(ring_.one()); }
  Element monomial(const Monomial& m, const Scalar& c) const {
    Element e(n());
    e.add_term(m, c);
    return e;
  }
  Element gen(Gen g) const {
    check_index(g.index, 1);
    return monomial(Monomial::generator(n(), g), ring_.one());
  }
  Element y(std::size_t k) const { return gen({GenKind::y, k}); }
  Element x(std::size_t k) const { return gen({GenKind::x, k}); }

  /// z_0 = 1, z_i = 1 + sum_{k<=i} y_k x_k.
  Element z(std::size_t i) const {
    check_index(i, 0);
    Element e = one();
    for (std::size_t k = 1; k <= i; ++k) {
      Monomial m(n());
      m[2 * (k - 1)] = 1;
      m[2 * (k - 1) + 1] = 1;
      e.add_term(m, ring_.one());
    }
    return e;
  }

  /// q~_i as a coefficient.
  Scalar q(std::size_t i) const { return ring_.monomial(params_.qexp(i)); }
  /// l~_ij as a coefficient.
  Scalar lambda(std::size_t i, std::size_t j) const { return ring_.monomial(params_.lexp(i, j)); }

  Element mul(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element out(n());
    for (const auto& [ma, ca] : a.terms()) {
      for (const auto& [mb, cb] : b.terms()) {
        Scalar c = ca * cb;
        if (scalar_is_zero(c)) continue;
        out += mul_monomials(ma, mb, 0).scaled(c);
      }
    }
    return out;
  }

  Element pow(const Element& a, std::uint32_t k) const {
    Element out = one();
    for (std::uint32_t i = 0; i < k; ++i) out = mul(out, a);
    return out;
  }

  Element commutator(const Element& a, const Element& b) const { return mul(a, b) - mul(b, a); }

  /// Normal form of the product of two PBW words.
  Element mul_monomials(const Monomial& left, const Monomial& right) const {
    return mul_monomials(left, right, 0);
  }

 private:
  void check_index(std::size_t i, std::size_t lowest) const {
    if (i < lowest || i > n())
      throw InstanceError("generator index " + std::to_string(i) + " out of range " +
                          std::to_string(lowest) + ".." + std::to_string(n()));
  }
  void check(const Element& e) const {
    if (e.n() != n())
      throw InstanceError("element over n=" + std::to_string(e.n()) + " used in algebra with n=" +
                          std::to_string(n()));
  }

  // Multiplies the word `left` by the generators of `right` one at a time.
  Element mul_monomials(const Monomial& left, const Monomial& right, std::size_t depth) const {
    Element acc = monomial(left, ring_.one());
    for (std::size_t p = 0; p < right.size(); ++p) {
      Gen g{p % 2 == 0 ? GenKind::y : GenKind::x, p / 2 + 1};
      for (std::uint32_t e = 0; e < right[p]; ++e) {
        Element next(n());
        for (const auto& [m, c] : acc.terms()) next += append(m, g, depth).scaled(c);
        acc = std::move(next);
      }
    }
    return acc;
  }

  // Normal form of (word m) * g.
  //
  // Write m = P * x_k^s * S where S holds the factors of index > k. Moving g
  // left through S only meets relations with monomial coefficients, so
  // S * g = e^w * g * S. If g = x_k, or g = y_k with s = 0, that is the whole
  // story. Otherwise (the x_k y_k rule applied s times, z_{k-1} commuting with
  // every generator of index >= k)
  //
  //   x_k^s y_k = q~_k^s y_k x_k^s + (q~_k^s - 1) z_{k-1} x_k^{s-1},
  //
  // and the correction term needs P' * z_{k-1} with P' the part of m of index
  // < k. That product only involves generators of index < k, so the recursion
  // strictly descends in the largest index and stops after at most k levels;
  // its result concatenates with the untouched factors of index >= k.
  Element append(const Monomial& m, Gen g, std::size_t depth) const {
#if !defined(NDEBUG) || defined(QWEYL_DEBUG_GUARDS)
    if (depth > n() + 1)
      throw InvariantViolation("straightening recursion exceeded depth " + std::to_string(n() + 1));
#endif
    const std::size_t k = g.index;
    const ExpVec& sk = params_.qexp(k);
    ExpVec w(params_.rank());
    for (std::size_t j = k + 1; j <= n(); ++j) {
      const auto rj = static_cast<std::int64_t>(m.y(j));
      const auto tj = static_cast<std::int64_t>(m.x(j));
      if (rj == 0 && tj == 0) continue;
      const ExpVec skj = sk + params_.lexp(k, j);
      if (g.kind == GenKind::y)
        w += params_.lexp(j, k).scaled(rj) + skj.scaled(tj);
      else
        w += params_.lexp(k, j).scaled(rj) - skj.scaled(tj);
    }

    Monomial bumped = m;
    bumped[g.position()] += 1;
    const std::uint32_t s = m.x(k);
    if (g.kind == GenKind::x || s == 0) return monomial(bumped, ring_.monomial(w));

    Element out =
        monomial(bumped, ring_.monomial(w + sk.scaled(static_cast<std::int64_t>(s))));
    Scalar corr = ring_.monomial(w) *
                  (ring_.monomial(sk.scaled(static_cast<std::int64_t>(s))) - ring_.one());
    if (scalar_is_zero(corr)) return out;

    Monomial low(n()), tail = m;
    for (std::size_t p = 0; p < 2 * (k - 1); ++p) {
      low[p] = m[p];
      tail[p] = 0;
    }
    tail[2 * (k - 1) + 1] -= 1;

    const Element zk = z(k - 1);
    Element low_times_z = low.is_one() ? zk : zero();
    if (!low.is_one()) {
      for (const auto& [mz, cz] : zk.terms())
        low_times_z += mul_monomials(low, mz, depth + 1).scaled(cz);
    }
    for (const auto& [ml, cl] : low_times_z.terms()) out.add_term(ml + tail, corr * cl);
    return out;
  }

  WeylParams params_;
  Ring ring_;
};

using FormalWeylAlgebra = WeylAlgebra<FormalRing>;

inline FormalWeylAlgebra make_formal_algebra(const WeylParams& params) {
  return FormalWeylAlgebra(params, FormalRing(params.rank()));
}

/// True iff every coefficient vanishes at t = 1.
inline bool divisible_by_t_minus_1(const WeylElement& a) {
  for (const auto& [m, c] : a.terms())
    if (c.eval_one() != 0) return false;
  return true;
}

// Formatting ---------------------------------------------------------------

inline std::string scalar_str(const QTScalar& c) { return c.str(); }
inline std::string scalar_str(const Rational& c) { return to_string(c); }
inline std::string scalar_str(const MuPoly& c) { return c.str(); }

namespace detail {

// Sign and magnitude string for a coefficient when it is a single signed term.
inline std::pair<bool, std::string> split_sign(const QTScalar& c) {
  if (!c.is_monomial()) return {false, "(" + c.str() + ")"};
  const auto& [v, q] = *c.terms().begin();
  QTScalar mag = QTScalar::monomial(v, abs(q));
  return {q < 0, mag.str()};
}
inline std::pair<bool, std::string> split_sign(const Rational& c) {
  return {c < 0, to_string(abs(c))};
}
inline std::pair<bool, std::string> split_sign(const MuPoly& c) {
  if (c.terms().size() != 1) return {false, "(" + c.str() + ")"};
  const auto& [d, q] = *c.terms().begin();
  MuPoly mag = (c.scaled(q < 0 ? Rational(-1) : Rational(1)));
  return {q < 0, mag.str()};
}

}  // namespace detail

/// Sum of "coefficient*word" terms in ascending degree order, parseable back.
template <class Scalar>
std::string to_string(const Polynomial<Scalar>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    auto [neg, mag] = detail::split_sign(c);
    std::string term;
    if (m.is_one())
      term = mag;
    else if (mag == "1")
      term = m.str();
    else
      term = mag + "*" + m.str();
    if (first)
      out += neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

// Maltsiniotis presentation ------------------------------------------------

/// Word in the free algebra on y_1, x_1, ..., y_n, x_n.
using Word = std::vector<Gen>;

/// Linear combination of free words with coefficients in F; the presentation
/// used for elements of R_n^{Q,Lambda} with q_i, lambda_ij read as q~_i, l~_ij.
class FreeElement {
 public:
  explicit FreeElement(std::size_t n = 0, std::size_t rank = 0) : n_(n), rank_(rank) {}

  static FreeElement word(std::size_t n, const QTScalar& c, Word w) {
    FreeElement f(n, c.rank());
    f.add(w, c);
    return f;
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::map<Word, QTScalar>& terms() const noexcept { return terms_; }

  void add(const Word& w, const QTScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FreeElement& operator+=(const FreeElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  FreeElement& operator-=(const FreeElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend bool operator==(const FreeElement& a, const FreeElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  FreeElement operator-() const {
    FreeElement f(n_, rank_);
    for (const auto& [w, c] : terms_) f.terms_.emplace(w, -c);
    return f;
  }
  FreeElement scaled(const QTScalar& s) const {
    FreeElement f(n_, rank_);
    for (const auto& [w, c] : terms_) f.add(w, s * c);
    return f;
  }
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b) {
    FreeElement f(a.n_, a.rank_);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        f.add(w, ca * cb);
      }
    return f;
  }

 private:
  std::size_t n_;
  std::size_t rank_;
  std::map<Word, QTScalar> terms_;
};

namespace detail {

inline std::string describe_word(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& g : w) s += (s.empty() ? "" : "*") + g.str();
  return s;
}

}  // namespace detail

/// Image under x_i -> x_i, y_i -> (q~_i - 1)^{-1} y_i, normalized in A.
///
/// (q~_i - 1)^{-1} is not in the coefficient ring, so the image is formed over
/// the common denominator prod_i (q~_i - 1)^{d_i} (d_i = the largest number of
/// y_i in any word) and divided out exactly. Throws LocalizationError naming
/// the first term whose coefficient keeps a denominator.
inline WeylElement from_maltsiniotis(const FreeElement& a, const FormalWeylAlgebra& alg) {
  const auto& params = alg.params();
  const std::size_t n = params.n();
  if (a.n() != n) throw InstanceError("element and algebra have different generator counts");
  if (!a.terms().empty() && a.rank() != params.rank())
    throw InstanceError("element and algebra have different ranks");
  std::vector<std::uint32_t> depth(n + 1, 0);
  for (const auto& [w, c] : a.terms()) {
    std::vector<std::uint32_t> count(n + 1, 0);
    for (const auto& g : w)
      if (g.kind == GenKind::y) ++count.at(g.index);
    for (std::size_t i = 1; i <= n; ++i) depth[i] = std::max(depth[i], count[i]);
  }
  const QTScalar one = QTScalar::constant(params.rank(), 1);
  WeylElement numerator(n);
  for (const auto& [w, c] : a.terms()) {
    std::vector<std::uint32_t> count(n + 1, 0);
    WeylElement word = alg.one();
    for (const auto& g : w) {
      if (g.kind == GenKind::y) ++count[g.index];
      word = alg.mul(word, alg.gen(g));
    }
    QTScalar factor = c;
    for (std::size_t i = 1; i <= n; ++i)
      factor *= (alg.q(i) - one).pow(depth[i] - count[i]);
    numerator += word.scaled(factor);
  }
  WeylElement out(n);
  for (const auto& [m, c] : numerator.terms()) {
    QTScalar v = c;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::uint32_t d = 0; d < depth[i]; ++d) {
        auto q = v.divide_by_monomial_minus_one(params.qexp(i));
        if (!q)
          throw LocalizationError("image requires localization at (q~_" + std::to_string(i) +
                                  " - 1): term " + m.str() + " has coefficient " + c.str() +
                                  " over (q~_" + std::to_string(i) + " - 1)^" +
                                  std::to_string(depth[i]));
        v = std::move(*q);
      }
    }
    out.add_term(m, v);
  }
  return out;
}

/// Defining relations of R_n^{Q,Lambda} as "left side minus right side",
/// in the order they are listed for i < j and then the n diagonal relations.
struct NamedRelation {
  std::string name;
  FreeElement relation;
};

inline std::vector<NamedRelation> maltsiniotis_relations(const WeylParams& params) {
  const std::size_t n = params.n(), r = params.rank();
  auto mono = [&](const ExpVec& v) { return QTScalar::monomial(v); };
  const QTScalar one = QTScalar::constant(r, 1);
  auto w = [&](const QTScalar& c, Word word) { return FreeElement::word(n, c, std::move(word)); };
  auto Y = [](std::size_t i) { return Gen{GenKind::y, i}; };
  auto X = [](std::size_t i) { return Gen{GenKind::x, i}; };
  std::vector<NamedRelation> out;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      const QTScalar lji = mono(params.lexp(j, i)), lij = mono(params.lexp(i, j));
      const QTScalar qi = mono(params.qexp(i));
      const std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      out.push_back({"y_j y_i = l_ji y_i y_j " + tag, w(one, {Y(j), Y(i)}) - w(lji, {Y(i), Y(j)})});
      out.push_back({"y_j x_i = l_ij x_i y_j " + tag, w(one, {Y(j), X(i)}) - w(lij, {X(i), Y(j)})});
      out.push_back(
          {"x_j y_i = q_i l_ij y_i x_j " + tag, w(one, {X(j), Y(i)}) - w(qi * lij, {Y(i), X(j)})});
      out.push_back({"x_j x_i = q_i^-1 l_ij^-1 x_i x_j " + tag,
                     w(one, {X(j), X(i)}) - w((qi * lij).inverse_monomial(), {X(i), X(j)})});
    }
  for (std::size_t i = 1; i <= n; ++i) {
    const QTScalar qi = mono(params.qexp(i));
    FreeElement rel = w(one, {X(i), Y(i)}) - w(qi, {Y(i), X(i)}) - w(one, {});
    for (std::size_t k = 1; k < i; ++k)
      rel -= w(mono(params.qexp(k)) - one, {Y(k), X(k)});
    out.push_back({"x_i y_i - q_i y_i x_i = 1 + sum (q_k-1) y_k x_k (i=" + std::to_string(i) + ")",
                   std::move(rel)});
  }
  return out;
}

}  // namespace qweyl
