#include <gtest/gtest.h>

#include "qweyl/errors.hpp"
#include "qweyl/interp.hpp"
#include "qweyl/scalars.hpp"
#include "qweyl/verify/random.hpp"

using namespace qweyl;

namespace {

QTScalar m(ExpVec v, Rational c = 1) { return QTScalar::monomial(std::move(v), c); }
QTScalar k(std::size_t r, Rational c) { return QTScalar::constant(r, c); }
MuPoly mu(std::size_t r, std::size_t i) { return MuPoly::variable(r, i); }

QTScalar random_scalar(verify::Sampler& rng, std::size_t r) {
  QTScalar s(r);
  for (int t = 0, terms = static_cast<int>(rng.uniform(1, 3)); t < terms; ++t)
    s += m(rng.exp_vec(r, 2), rng.nonzero_rational());
  return s;
}

}  // namespace

TEST(Rational, ParsesFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational(" -4 "), Rational(-4));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_THROW(parse_rational("1/0"), std::exception);
  EXPECT_THROW(parse_rational("abc"), std::exception);
}

TEST(Rational, PowersHandleNegativeExponents) {
  EXPECT_EQ(rational_pow(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(rational_pow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(rational_pow(Rational(5), 0), Rational(1));
}

TEST(Rational, StaysExactBeyondMachineWords) {
  const Rational big = rational_pow(Rational(3), 80);
  EXPECT_EQ(big / rational_pow(Rational(3), 79), Rational(3));
}

TEST(QTScalar, ProductAddsExponents) {
  EXPECT_EQ(m({1, 0}) * m({-1, 1}), m({0, 1}));
  EXPECT_EQ((m({1}) - k(1, 1)) * (m({1}) + k(1, 1)), m({2}) - k(1, 1));
  // q1 * l12 with s1 = (1,0), L12 = (1,0)
  EXPECT_EQ(m({1, 0}) * m({1, 0}), m({2, 0}));
}

TEST(QTScalar, SumsCancelToCanonicalZero) {
  const QTScalar a = m({1, 0}) + k(2, 3);
  EXPECT_EQ(a + QTScalar(2), a);
  EXPECT_TRUE((m({1, 0}) + m({1, 0}, -1)).is_zero());
  EXPECT_EQ((m({1, 0}) - k(2, 1)) + k(2, 1), m({1, 0}));
  const QTScalar b = a - a + m({0, 1});
  for (const auto& [v, c] : b.terms()) EXPECT_NE(c, 0);
}

TEST(QTScalar, RankMismatchIsAnInstanceError) {
  EXPECT_THROW(m({1, 0}) * m({1}), InstanceError);
  EXPECT_THROW(m({1, 0}) + m({1}), InstanceError);
}

TEST(QTScalar, EvaluationAtOneSumsCoefficients) {
  EXPECT_EQ((m({1, 0}) - k(2, 1)).eval_one(), 0);
  EXPECT_EQ(k(2, 5).eval_one(), 5);
  EXPECT_EQ((m({2, -1}, 3) + k(2, -3)).eval_one(), 0);
}

TEST(QTScalar, DerivativeAtOneIsLinearInMu) {
  EXPECT_EQ(m({1, 0}).deriv_one(), mu(2, 0));
  EXPECT_TRUE(k(2, 7).deriv_one().is_zero());
  EXPECT_EQ(m({2, -1}).deriv_one(), mu(2, 0).scaled(2) - mu(2, 1));
}

TEST(QTScalar, DerivativeMatchesExplicitQuadratics) {
  // e1 = t^2 - t + 1 (mu1 = 1), e2 = 7/2 t^2 - 13/2 t + 4 (mu2 = 1/2).
  const QuadPoly e1 = build_e(2, 3, 1), e2 = build_e(2, 5, Rational(1, 2));
  // d/dt (e1^2 e2^-1) at t = 1, by the quotient rule on explicit values.
  const Rational d = 2 * e1(1) * e1.derivative(1) / e2(1) - e1(1) * e1(1) * e2.derivative(1) / (e2(1) * e2(1));
  const MuPoly got = m({2, -1}).deriv_one();
  Rational value = 0;
  for (const auto& [deg, c] : got.terms()) value += c * (deg[0] ? Rational(1) : Rational(1, 2));
  EXPECT_EQ(value, d);
}

TEST(QTScalar, LimitDivisionRequiresAZeroAtOne) {
  EXPECT_EQ((m({1, 0}) - k(2, 1)).limit_div(), mu(2, 0));
  EXPECT_TRUE(QTScalar(2).limit_div().is_zero());
  // l12 - l21 with L12 = (1,0)
  EXPECT_EQ((m({1, 0}) - m({-1, 0})).limit_div(), mu(2, 0).scaled(2));
  EXPECT_THROW(m({1, 0}).limit_div(), DivisibilityError);
}

TEST(QTScalar, DivisionByMonomialMinusOne) {
  const ExpVec s{1, 1};
  const QTScalar d = m(s) - k(2, 1);
  verify::Sampler rng(11);
  for (int t = 0; t < 50; ++t) {
    const QTScalar a = random_scalar(rng, 2);
    auto q = (a * d).divide_by_monomial_minus_one(s);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, a);
  }
  EXPECT_FALSE(m({1, 0}).divide_by_monomial_minus_one(s).has_value());
}

TEST(QTScalar, RingAxiomsOnRandomInputs) {
  verify::Sampler rng(3);
  for (int t = 0; t < 100; ++t) {
    const QTScalar a = random_scalar(rng, 2), b = random_scalar(rng, 2), c = random_scalar(rng, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(QTScalar, EvaluationAndDerivativeAreCompatibleWithProducts) {
  verify::Sampler rng(4);
  for (int t = 0; t < 100; ++t) {
    const QTScalar a = random_scalar(rng, 2), b = random_scalar(rng, 2);
    EXPECT_EQ((a * b).eval_one(), a.eval_one() * b.eval_one());
    EXPECT_EQ((a * b).deriv_one(), b.deriv_one().scaled(a.eval_one()) + a.deriv_one().scaled(b.eval_one()));
    const QTScalar z = a - k(2, a.eval_one());
    EXPECT_EQ((z * b).limit_div(), z.limit_div().scaled(b.eval_one()));
  }
}

TEST(QTScalar, PrintsHighestTermFirst) {
  EXPECT_EQ((m({1, 0}) - k(2, 1)).str(), "eta^[1,0] - 1");
  EXPECT_EQ(QTScalar(2).str(), "0");
}

TEST(MuPoly, ArithmeticAndPrinting) {
  const MuPoly a = mu(2, 0).scaled(2) - mu(2, 1) + MuPoly::constant(2, 3);
  EXPECT_EQ(a.str(), "2*μ1 - μ2 + 3");
  EXPECT_EQ(MuPoly::linear(ExpVec{1, -1}), mu(2, 0) - mu(2, 1));
  EXPECT_EQ((mu(2, 0) * mu(2, 0)).degree(), 2u);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_TRUE(MuPoly::constant(2, 5).is_constant());
}
