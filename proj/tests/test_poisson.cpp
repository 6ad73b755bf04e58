#include <gtest/gtest.h>

#include "qweyl/poisson.hpp"
#include "qweyl/verify/oracles.hpp"
#include "qweyl/verify/random.hpp"

using namespace qweyl;

namespace {

// s1 = (1,0), s2 = (0,1), L12 = (1,0).
WeylParams sample() {
  return WeylParams(2, {ExpVec{1, 0}, ExpVec{0, 1}},
                    {{ExpVec{0, 0}, ExpVec{1, 0}}, {ExpVec{-1, 0}, ExpVec{0, 0}}});
}

MuPoly mu(std::size_t i) { return MuPoly::variable(2, i - 1); }

PoissonElement times(const PoissonAlgebra& pa, const MuPoly& c, const PoissonElement& e) {
  return pa.mul(pa.constant(c), e);
}

}  // namespace

TEST(PoissonBracket, GeneratorExamples) {
  const PoissonAlgebra pa(sample());
  EXPECT_EQ(pa.bracket(pa.x(1), pa.y(1)), times(pa, mu(1), pa.z(1)));
  const auto e = pa.mul(pa.x(1), pa.y(2)) + pa.y(1);
  EXPECT_TRUE(pa.bracket(e, e).is_zero());
  EXPECT_EQ(pa.bracket(pa.x(2), pa.x(1)), times(pa, mu(1).scaled(-2), pa.mul(pa.x(1), pa.x(2))));
}

TEST(PoissonBracket, AntisymmetryAndLeibniz) {
  verify::Sampler rng(21);
  for (int t = 0; t < 60; ++t) {
    const PoissonAlgebra pa(rng.instance(3, 2));
    const auto a = rng.poisson_element(pa), b = rng.poisson_element(pa), c = rng.poisson_element(pa);
    EXPECT_EQ(pa.bracket(a, b), -pa.bracket(b, a));
    EXPECT_EQ(pa.bracket(pa.mul(a, b), c), pa.mul(a, pa.bracket(b, c)) + pa.mul(pa.bracket(a, c), b));
  }
}

TEST(PoissonBracket, JacobiExamples) {
  const PoissonAlgebra pa(sample());
  EXPECT_TRUE(pa.jacobiator(pa.y(1), pa.x(1), pa.y(1)).is_zero());
  EXPECT_TRUE(pa.jacobiator(pa.x(1), pa.y(1), pa.x(2)).is_zero());
  verify::Sampler rng(22);
  for (int t = 0; t < 40; ++t) {
    const PoissonAlgebra q(rng.instance(3, 2));
    EXPECT_TRUE(q.jacobiator(rng.poisson_element(q), rng.poisson_element(q), rng.poisson_element(q)).is_zero());
  }
}

TEST(PoissonBracket, ParameterIntegrity) {
  verify::Sampler rng(23);
  for (int t = 0; t < 20; ++t) {
    const PoissonAlgebra pa(rng.instance(4, 2));
    for (std::size_t i = 1; i <= pa.n(); ++i) {
      EXPECT_FALSE(pa.qprime(i).is_zero());
      for (std::size_t j = 1; j <= pa.n(); ++j) EXPECT_EQ(pa.lprime(i, j), MuPoly(pa.rank()) - pa.lprime(j, i));
    }
  }
}

TEST(PoissonBracket, ZIsNormal) {
  verify::Sampler rng(24);
  for (int t = 0; t < 10; ++t) {
    const PoissonAlgebra pa(rng.instance(4, 2));
    for (std::size_t i = 1; i <= pa.n(); ++i)
      for (std::size_t k = 1; k <= pa.n(); ++k)
        for (const auto& g : {pa.y(k), pa.x(k)}) {
          const auto q = pa.divide_exact(pa.bracket(g, pa.z(i)), pa.z(i));
          EXPECT_TRUE(q.has_value());
        }
  }
}

TEST(PoissonBracket, DivideExactDetectsRemainders) {
  const PoissonAlgebra pa(sample());
  const auto p = pa.mul(pa.z(2), pa.x(1) + pa.y(2));
  ASSERT_TRUE(pa.divide_exact(p, pa.z(2)).has_value());
  EXPECT_EQ(*pa.divide_exact(p, pa.z(2)), pa.x(1) + pa.y(2));
  EXPECT_FALSE(pa.divide_exact(p + pa.one(), pa.z(2)).has_value());
}

TEST(Gamma1, Examples) {
  const WeylParams p = sample();
  const auto a = make_formal_algebra(p);
  const PoissonAlgebra pa(p);
  // (q1 - 1) z0 vanishes at t = 1.
  EXPECT_EQ(gamma1(a.mul(a.x(1), a.y(1)), 2), pa.mul(pa.y(1), pa.x(1)));
  EXPECT_EQ(gamma1(a.monomial(Monomial::generator(2, {GenKind::y, 1}) + Monomial::generator(2, {GenKind::x, 1}), a.q(1)) +
                       a.constant(a.q(1) - a.ring().one()),
                   2),
            pa.mul(pa.y(1), pa.x(1)));
  EXPECT_EQ(gamma1(a.one(), 2), pa.one());
  for (std::size_t i = 0; i <= 2; ++i) EXPECT_EQ(gamma1(a.z(i), 2), pa.z(i));
}

TEST(SemiclassicalBracket, Examples) {
  const WeylParams p = sample();
  const auto a = make_formal_algebra(p);
  const PoissonAlgebra pa(p);
  EXPECT_EQ(semiclassical_bracket(a.x(1), a.y(1), a), times(pa, mu(1), pa.z(1)));
  EXPECT_TRUE(semiclassical_bracket(a.z(2), a.z(2), a).is_zero());
  // (s1 + L12) mu = 2 mu1
  EXPECT_EQ(semiclassical_bracket(a.x(2), a.y(1), a), times(pa, mu(1).scaled(2), pa.mul(pa.y(1), pa.x(2))));
}

TEST(SemiclassicalBracket, MatchesPoissonBracketOfLimits) {
  verify::Sampler rng(25);
  for (int t = 0; t < 60; ++t) {
    const WeylParams p = rng.instance(3, 2);
    const auto a = make_formal_algebra(p);
    const PoissonAlgebra pa(p);
    const auto u = rng.weyl_element(p), v = rng.weyl_element(p);
    EXPECT_EQ(semiclassical_bracket(u, v, a), pa.bracket(gamma1(u, p.rank()), gamma1(v, p.rank())));
  }
}

TEST(SemiclassicalBracket, GeneratorTableMatchesClosedForms) {
  verify::Sampler rng(26);
  for (std::size_t n = 1; n <= 4; ++n) {
    const WeylParams p = rng.instance_of(n, 2);
    const auto a = make_formal_algebra(p);
    for (std::size_t u = 0; u < 2 * n; ++u)
      for (std::size_t v = 0; v < 2 * n; ++v) {
        const Gen g{u % 2 ? GenKind::x : GenKind::y, u / 2 + 1}, h{v % 2 ? GenKind::x : GenKind::y, v / 2 + 1};
        EXPECT_EQ(semiclassical_bracket(a.gen(g), a.gen(h), a), verify::generator_bracket_closed_form(g, h, p));
      }
  }
}

TEST(SemiclassicalBracket, BracketIdentitiesOfZ) {
  verify::Sampler rng(27);
  for (std::size_t n = 1; n <= 4; ++n) {
    const PoissonAlgebra pa(rng.instance_of(n, 2));
    for (const auto& id : verify::br2_identities(pa)) EXPECT_EQ(id.lhs, id.rhs) << id.family;
  }
}
