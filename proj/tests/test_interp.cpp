#include <gtest/gtest.h>

#include "qweyl/interp.hpp"
#include "qweyl/verify/oracles.hpp"
#include "qweyl/verify/random.hpp"

using namespace qweyl;

TEST(BuildE, Examples) {
  const QuadPoly one = build_e(2, 1, 0);
  EXPECT_EQ(one, (QuadPoly{0, 0, 1}));
  const QuadPoly e = build_e(2, 3, 1);
  EXPECT_EQ(e, (QuadPoly{1, -1, 1}));
  EXPECT_EQ(e.str(), "t^2 - t + 1");
}

TEST(BuildE, MeetsInterpolationConditions) {
  verify::Sampler rng(41);
  for (int k = 0; k < 50; ++k) {
    Rational q = rng.nonzero_rational(9, 5);
    if (q == 1) continue;
    const Rational eta = rng.nonzero_rational(9, 5), mu = rng.nonzero_rational(9, 5);
    const QuadPoly e = build_e(q, eta, mu);
    EXPECT_EQ(e(q), eta);
    EXPECT_EQ(e(1), 1);
    EXPECT_EQ(e.derivative(1), mu);
    EXPECT_EQ(e, verify::build_e_by_elimination(q, eta, mu));
  }
}

TEST(BuildE, RejectsDegenerateInputs) {
  EXPECT_THROW(build_e(0, 3, 1), DomainError);
  EXPECT_THROW(build_e(1, 3, 1), DomainError);
  EXPECT_THROW(build_e(2, 0, 1), DomainError);
}

TEST(Specialize, Examples) {
  const WeylParams p(1, {ExpVec{1}}, {{ExpVec{0}}});
  const auto a = make_formal_algebra(p);
  const std::vector<QuadPoly> e{build_e(2, 3, 1)};
  const WeylElement f = a.y(1).scaled(a.ring().monomial(ExpVec{1}) - a.ring().one());
  const auto g = specialize(f, 2, e);
  const auto c = concrete_algebra(p, e, 2);
  EXPECT_EQ(g, c.y(1).scaled(Rational(2)));
  EXPECT_EQ(specialize(a.one(), 2, e), c.one());
}

TEST(Specialize, DomainErrors) {
  const WeylParams p(1, {ExpVec{1}}, {{ExpVec{0}}});
  const auto a = make_formal_algebra(p);
  EXPECT_THROW(specialize(a.one(), 0, {build_e(2, 3, 1)}), DomainError);
  EXPECT_THROW(specialize(a.one(), 1, {build_e(2, 3, 1)}), DomainError);
  const std::vector<QuadPoly> linear{QuadPoly{0, -1, 2}};  // 2 - t, root at 2
  EXPECT_THROW(specialize(a.one(), 2, linear), DomainError);
}

TEST(Specialize, IsAHomomorphism) {
  verify::Sampler rng(42);
  for (int k = 0; k < 20; ++k) {
    const WeylParams p = rng.instance(3, 2);
    const auto a = make_formal_algebra(p);
    const auto e = rng.e_polys(p.rank());
    const Rational lambda = rng.lambda(e);
    const auto c = concrete_algebra(p, e, lambda);
    const auto u = rng.weyl_element(p, 2), v = rng.weyl_element(p, 2);
    EXPECT_EQ(specialize(a.mul(u, v), lambda, e), c.mul(specialize(u, lambda, e), specialize(v, lambda, e)));
    EXPECT_EQ(specialize(u + v, lambda, e), specialize(u, lambda, e) + specialize(v, lambda, e));
  }
}

TEST(Independence, Examples) {
  EXPECT_TRUE(independence_check({2, 3}, 5));
  EXPECT_FALSE(independence_check({2, 4}, 2));
  EXPECT_TRUE(independence_check({5}, 10));
  EXPECT_FALSE(independence_check({-1}, 2));
  EXPECT_THROW(independence_check({0}, 2), DomainError);
  EXPECT_THROW(independence_check({2}, 0), DomainError);
}
