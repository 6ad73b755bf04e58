#include <gtest/gtest.h>

#include "qweyl/expr.hpp"
#include "qweyl/verify/random.hpp"

using namespace qweyl;

namespace {

WeylParams two_pairs() {
  return WeylParams(2, {ExpVec{1, 0}, ExpVec{0, 1}}, {{ExpVec{0, 0}, ExpVec{1, -1}}, {ExpVec{-1, 1}, ExpVec{0, 0}}});
}

ParseError parse_failure(std::string_view text, const FormalWeylAlgebra& a) {
  try {
    (void)parse_weyl(text, a);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for \"" << text << "\"";
  return ParseError("none", 0, 0);
}

}  // namespace

TEST(Parse, Examples) {
  const auto a = make_formal_algebra(two_pairs());
  EXPECT_EQ(parse_weyl("y1", a), a.y(1));
  EXPECT_EQ(parse_weyl("x1 * y1", a), a.mul(a.x(1), a.y(1)));
  EXPECT_EQ(parse_weyl("y2^3", a), a.mul(a.y(2), a.mul(a.y(2), a.y(2))));
  EXPECT_EQ(parse_weyl("z0", a), a.one());
  EXPECT_EQ(parse_weyl("z2", a), a.z(2));
  EXPECT_EQ(parse_weyl("3/6*eta^[1,-1]*x2", a), a.x(2).scaled(QTScalar::monomial(ExpVec{1, -1}, Rational(1, 2))));
  EXPECT_EQ(parse_weyl("-(y1 - y1)", a), a.zero());
  EXPECT_EQ(parse_weyl("2^2", a), a.constant(a.ring().constant(4)));
}

TEST(Parse, FirstRelationVanishes) {
  const auto a = make_formal_algebra(two_pairs());
  EXPECT_TRUE(parse_weyl("x1*y1 - eta^[1,0]*y1*x1 - (eta^[1,0] - 1)*z0", a).is_zero());
  EXPECT_TRUE(parse_weyl("x2*y2 - y2*x2 - (eta^[0,1] - 1)*z2", a).is_zero());
}

TEST(Parse, ErrorsCarryPosition) {
  const auto a = make_formal_algebra(two_pairs());
  auto e = parse_failure("y1 + y3", a);
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 6u);
  EXPECT_NE(std::string(e.what()).find("unknown generator index 3 (valid 1..2)"), std::string::npos);
  e = parse_failure("y1 *\n  )", a);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 3u);
  e = parse_failure("eta^[1]", a);
  EXPECT_EQ(e.column(), 1u);
  e = parse_failure("y1^-2", a);
  EXPECT_EQ(e.column(), 4u);
  EXPECT_THROW(parse_weyl("mu1*y1", a), ParseError);
  EXPECT_THROW(parse_weyl("", a), ParseError);
  EXPECT_THROW(parse_weyl("y", a), ParseError);
  EXPECT_THROW(parse_weyl("1/0", a), ParseError);
  EXPECT_THROW(parse_weyl("w1", a), ParseError);
}

TEST(Parse, PoissonTargetTreatsEtaAsOne) {
  const PoissonAlgebra pa(two_pairs());
  EXPECT_EQ(parse_poisson("eta^[3,1]*y1", pa), pa.y(1));
  EXPECT_EQ(parse_poisson("mu2*x1", pa), pa.x(1).scaled(MuPoly::variable(2, 1)));
  EXPECT_EQ(parse_poisson("μ1", pa), pa.constant(MuPoly::variable(2, 0)));
  EXPECT_EQ(parse_poisson("x1*y1", pa), parse_poisson("y1*x1", pa));
}

TEST(Parse, FreeTargetExpandsZ) {
  const WeylParams p = two_pairs();
  EXPECT_EQ(parse_free("z1", p), parse_free("1 + (eta^[1,0] - 1)*y1*x1", p));
  EXPECT_EQ(parse_free("z0", p), parse_free("1", p));
  EXPECT_NE(parse_free("x1*y1", p), parse_free("y1*x1", p));
}

TEST(Parse, PrintedWeylElementsRoundTrip) {
  verify::Sampler rng(51);
  for (int k = 0; k < 100; ++k) {
    const WeylParams p = rng.instance(3, 2);
    const auto a = make_formal_algebra(p);
    const auto u = rng.weyl_element(p, 3);
    EXPECT_EQ(parse_weyl(to_string(u), a), u) << to_string(u);
  }
}

TEST(Parse, PrintedPoissonElementsRoundTrip) {
  verify::Sampler rng(52);
  for (int k = 0; k < 100; ++k) {
    const PoissonAlgebra pa(rng.instance(3, 2));
    const auto u = rng.poisson_element(pa, 2);
    EXPECT_EQ(parse_poisson(to_string(u), pa), u) << to_string(u);
  }
}
