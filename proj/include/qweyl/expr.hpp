#pragma once

// Expression language for algebra elements.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | power
//   power  := atom ('^' INT)*
//   atom   := INT ['/' INT] | 'eta' '^' '[' INT (',' INT)* ']'
//           | 'y'K | 'x'K | 'z'K | ('mu' | 'μ')K | '(' expr ')'
//
// Whitespace is insignificant. Inside eta^[...] entries may be negative.
// zK is shorthand for 1 + y1*x1 + ... + yK*xK. mu symbols are only meaningful
// for Poisson elements.

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qweyl/errors.hpp"
#include "qweyl/poisson.hpp"
#include "qweyl/scalars.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { number, eta, mu, gen, z, add, sub, mul, neg, pow };

  Kind kind;
  std::size_t line = 1, column = 1;
  Rational number;
  ExpVec eta;
  std::size_t index = 0;
  GenKind gen = GenKind::y;
  std::uint32_t exponent = 0;
  std::vector<ExprPtr> args;
};

struct ParseContext {
  std::size_t n = 0;
  std::size_t rank = 0;
};

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, ParseContext ctx) : text_(text), ctx_(ctx) {}

  ExprPtr parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    ExprPtr e = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  ExprPtr expr() {
    ExprPtr lhs = term();
    while (true) {
      skip_ws();
      if (peek('+') || peek('-')) {
        auto [l, c] = here();
        Expr::Kind k = text_[pos_] == '+' ? Expr::Kind::add : Expr::Kind::sub;
        ++pos_;
        ExprPtr rhs = term();
        lhs = node(k, l, c, {lhs, rhs});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (true) {
      skip_ws();
      if (!peek('*')) return lhs;
      auto [l, c] = here();
      ++pos_;
      ExprPtr rhs = factor();
      lhs = node(Expr::Kind::mul, l, c, {lhs, rhs});
    }
  }

  ExprPtr factor() {
    skip_ws();
    if (peek('-')) {
      auto [l, c] = here();
      ++pos_;
      ExprPtr arg = factor();
      return node(Expr::Kind::neg, l, c, {arg});
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    while (true) {
      skip_ws();
      if (!peek('^')) return base;
      auto [l, c] = here();
      ++pos_;
      skip_ws();
      if (peek('-')) fail("exponents must be nonnegative integers");
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::pow;
      e->line = l;
      e->column = c;
      e->exponent = static_cast<std::uint32_t>(small_integer("exponent"));
      e->args = {base};
      base = e;
    }
  }

  ExprPtr atom() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    auto [l, c] = here();
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      ExprPtr inner = expr();
      skip_ws();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string digits = integer_text();
      skip_ws();
      if (peek('/')) {
        ++pos_;
        skip_ws();
        std::string den = integer_text();
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
        digits += "/" + den;
      }
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::number;
      e->line = l;
      e->column = c;
      e->number = Rational(digits, 10);
      e->number.canonicalize();
      return e;
    }
    if (text_.substr(pos_, 3) == "eta") {
      pos_ += 3;
      skip_ws();
      expect('^');
      skip_ws();
      expect('[');
      std::vector<std::int64_t> v;
      while (true) {
        skip_ws();
        bool neg = false;
        if (peek('-')) {
          neg = true;
          ++pos_;
          skip_ws();
        }
        std::int64_t k = small_integer("eta exponent");
        v.push_back(neg ? -k : k);
        skip_ws();
        if (peek(',')) {
          ++pos_;
          continue;
        }
        expect(']');
        break;
      }
      if (v.size() != ctx_.rank)
        fail_at(l, c, "eta exponent vector has length " + std::to_string(v.size()) +
                          ", instance rank is " + std::to_string(ctx_.rank));
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::eta;
      e->line = l;
      e->column = c;
      e->eta = ExpVec(std::move(v));
      return e;
    }
    std::size_t skip = 0;
    Expr::Kind kind{};
    GenKind g = GenKind::y;
    if (text_.substr(pos_, 2) == "mu") {
      skip = 2;
      kind = Expr::Kind::mu;
    } else if (text_.substr(pos_, 2) == "\xCE\xBC") {
      skip = 2;
      kind = Expr::Kind::mu;
    } else if (ch == 'y' || ch == 'x') {
      skip = 1;
      kind = Expr::Kind::gen;
      g = ch == 'y' ? GenKind::y : GenKind::x;
    } else if (ch == 'z') {
      skip = 1;
      kind = Expr::Kind::z;
    } else {
      fail("unexpected '" + std::string(1, ch) + "'");
    }
    pos_ += skip;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail_at(l, c, "symbol needs an index");
    std::size_t idx = static_cast<std::size_t>(small_integer("index"));
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    const std::size_t lo = kind == Expr::Kind::z ? 0 : 1;
    const std::size_t hi = kind == Expr::Kind::mu ? ctx_.rank : ctx_.n;
    if (idx < lo || idx > hi)
      fail_at(l, c, "unknown generator index " + std::to_string(idx) + " (valid " +
                        std::to_string(lo) + ".." + std::to_string(hi) + ")");
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->line = l;
    e->column = c;
    e->index = idx;
    e->gen = g;
    return e;
  }

  static ExprPtr node(Expr::Kind k, std::size_t l, std::size_t c, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->line = l;
    e->column = c;
    e->args = std::move(args);
    return e;
  }

  std::string integer_text() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer");
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t small_integer(const char* what) {
    auto [l, c] = here();
    std::string digits = integer_text();
    if (digits.size() > 9) fail_at(l, c, std::string(what) + " too large");
    return std::stoll(digits);
  }

  void expect(char ch) {
    if (!peek(ch)) {
      if (at_end()) fail(std::string("expected '") + ch + "' before end of input");
      fail(std::string("expected '") + ch + "', found '" + text_[pos_] + "'");
    }
    ++pos_;
  }

  bool peek(char ch) const { return !at_end() && text_[pos_] == ch; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::pair<std::size_t, std::size_t> here() const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(const std::string& msg) const {
    auto [l, c] = here();
    throw ParseError(msg, l, c);
  }
  [[noreturn]] static void fail_at(std::size_t l, std::size_t c, const std::string& msg) {
    throw ParseError(msg, l, c);
  }

  std::string_view text_;
  ParseContext ctx_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse tree, or ParseError with line and column.
inline ExprPtr parse_expr(std::string_view text, ParseContext ctx) {
  return detail::ExprParser(text, ctx).parse();
}

/// Folds a parse tree into any target providing number/eta/mu/gen/z leaves
/// and add/sub/mul/neg.
template <class Target>
auto evaluate(const ExprPtr& e, const Target& target) -> decltype(target.number(*e)) {
  using Kind = Expr::Kind;
  switch (e->kind) {
    case Kind::number: return target.number(*e);
    case Kind::eta: return target.eta(*e);
    case Kind::mu: return target.mu(*e);
    case Kind::gen: return target.gen(*e);
    case Kind::z: return target.z(*e);
    case Kind::add: return target.add(evaluate(e->args[0], target), evaluate(e->args[1], target));
    case Kind::sub: return target.sub(evaluate(e->args[0], target), evaluate(e->args[1], target));
    case Kind::mul: return target.mul(evaluate(e->args[0], target), evaluate(e->args[1], target));
    case Kind::neg: return target.neg(evaluate(e->args[0], target));
    case Kind::pow: {
      auto base = evaluate(e->args[0], target);
      auto out = target.unit();
      for (std::uint32_t i = 0; i < e->exponent; ++i) out = target.mul(out, base);
      return out;
    }
  }
  throw InvariantViolation("unhandled expression node");
}

/// Evaluates into A (PBW normal form).
class WeylTarget {
 public:
  explicit WeylTarget(const FormalWeylAlgebra& alg) : alg_(alg) {}
  using Value = WeylElement;

  Value number(const Expr& e) const { return alg_.constant(alg_.ring().constant(e.number)); }
  Value eta(const Expr& e) const { return alg_.constant(alg_.ring().monomial(e.eta)); }
  Value mu(const Expr& e) const {
    throw ParseError("mu symbols are not elements of the quantized algebra", e.line, e.column);
  }
  Value gen(const Expr& e) const { return alg_.gen({e.gen, e.index}); }
  Value z(const Expr& e) const { return alg_.z(e.index); }
  Value unit() const { return alg_.one(); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return alg_.mul(a, b); }
  Value neg(const Value& a) const { return -a; }

 private:
  const FormalWeylAlgebra& alg_;
};

/// Evaluates into the commutative algebra A_1; eta monomials become 1.
class PoissonTarget {
 public:
  explicit PoissonTarget(const PoissonAlgebra& pa) : pa_(pa) {}
  using Value = PoissonElement;

  Value number(const Expr& e) const { return pa_.constant(e.number); }
  Value eta(const Expr&) const { return pa_.one(); }
  Value mu(const Expr& e) const { return pa_.constant(MuPoly::variable(pa_.rank(), e.index - 1)); }
  Value gen(const Expr& e) const { return pa_.gen({e.gen, e.index}); }
  Value z(const Expr& e) const { return pa_.z(e.index); }
  Value unit() const { return pa_.one(); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return pa_.mul(a, b); }
  Value neg(const Value& a) const { return -a; }

 private:
  const PoissonAlgebra& pa_;
};

/// Evaluates into free words, i.e. elements written in the Maltsiniotis
/// presentation. zK there means 1 + sum_{k<=K} (q_k - 1) y_k x_k.
class FreeTarget {
 public:
  explicit FreeTarget(const WeylParams& params) : params_(params) {}
  using Value = FreeElement;

  Value number(const Expr& e) const {
    return FreeElement::word(params_.n(), QTScalar::constant(params_.rank(), e.number), {});
  }
  Value eta(const Expr& e) const { return FreeElement::word(params_.n(), QTScalar::monomial(e.eta), {}); }
  Value mu(const Expr& e) const {
    throw ParseError("mu symbols are not elements of the quantized algebra", e.line, e.column);
  }
  Value gen(const Expr& e) const { return FreeElement::word(params_.n(), one(), {Gen{e.gen, e.index}}); }
  Value z(const Expr& e) const {
    FreeElement out = unit();
    for (std::size_t k = 1; k <= e.index; ++k)
      out += FreeElement::word(params_.n(), QTScalar::monomial(params_.qexp(k)) - one(),
                               {Gen{GenKind::y, k}, Gen{GenKind::x, k}});
    return out;
  }
  Value unit() const { return FreeElement::word(params_.n(), one(), {}); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }

 private:
  QTScalar one() const { return QTScalar::constant(params_.rank(), 1); }
  const WeylParams& params_;
};

inline WeylElement parse_weyl(std::string_view text, const FormalWeylAlgebra& alg) {
  return evaluate(parse_expr(text, {alg.n(), alg.params().rank()}), WeylTarget(alg));
}

inline PoissonElement parse_poisson(std::string_view text, const PoissonAlgebra& pa) {
  return evaluate(parse_expr(text, {pa.n(), pa.rank()}), PoissonTarget(pa));
}

inline FreeElement parse_free(std::string_view text, const WeylParams& params) {
  return evaluate(parse_expr(text, {params.n(), params.rank()}), FreeTarget(params));
}

}  // namespace qweyl
