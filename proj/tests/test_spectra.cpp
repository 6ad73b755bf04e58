#include <gtest/gtest.h>

#include <set>

#include "qweyl/spectra.hpp"
#include "qweyl/verify/oracles.hpp"
#include "qweyl/verify/random.hpp"

using namespace qweyl;

namespace {

MarkerSet set_of(const char* spec, std::size_t n) { return MarkerSet::parse(spec, n); }
AdmissibleSet adm(const char* spec, std::size_t n) { return AdmissibleSet(set_of(spec, n)); }

std::vector<std::string> names(const std::vector<Marker>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.str());
  return out;
}

WeylParams one_pair() { return WeylParams(2, {ExpVec{1, 0}}, {{ExpVec{0, 0}}}); }

// s1 = (1,0), s2 = (0,1), s3 = (1,1), L12 = (1,0), L13 = (0,1), L23 = (1,-1).
WeylParams three_pairs() {
  const ExpVec o{0, 0};
  return WeylParams(2, {ExpVec{1, 0}, ExpVec{0, 1}, ExpVec{1, 1}},
                    {{o, ExpVec{1, 0}, ExpVec{0, 1}}, {ExpVec{-1, 0}, o, ExpVec{1, -1}}, {ExpVec{0, -1}, ExpVec{-1, 1}, o}});
}

}  // namespace

TEST(MarkerSet, ParsesSpecifications) {
  EXPECT_EQ(set_of("z1, z2 ,y2", 2).str(), "{z1,z2,y2}");
  EXPECT_EQ(set_of("", 2), MarkerSet(2));
  EXPECT_EQ(set_of("{}", 2), MarkerSet(2));
  EXPECT_EQ(set_of("∅", 2), MarkerSet(2));
  EXPECT_THROW(set_of("z3", 2), InstanceError);
  EXPECT_THROW(set_of("w1", 2), InstanceError);
}

TEST(Admissible, Examples) {
  EXPECT_TRUE(is_admissible(MarkerSet(2)));
  // Neither side of the biconditional holds for {z2}.
  EXPECT_TRUE(is_admissible(set_of("z2", 2)));
  EXPECT_FALSE(is_admissible(set_of("z2,y2", 2)));
  EXPECT_FALSE(is_admissible(set_of("z1,z2", 2)));
  EXPECT_TRUE(is_admissible(set_of("z1,z2,x2", 2)));
  EXPECT_THROW(adm("z2,y2", 2), InstanceError);
}

TEST(Admissible, EnumerationOfM1) {
  const auto sets = enumerate_admissible(1);
  ASSERT_EQ(sets.size(), 2u);
  EXPECT_EQ(sets[0].str(), "{}");
  EXPECT_EQ(sets[1].str(), "{z1}");
}

TEST(Admissible, EnumerationAgreesWithBruteForce) {
  const std::size_t expected[] = {2, 6, 20, 68};
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto sets = enumerate_admissible(n);
    std::set<std::string> seen;
    for (const auto& s : sets) {
      EXPECT_TRUE(is_admissible(s.markers()));
      seen.insert(s.str());
    }
    EXPECT_EQ(seen.size(), sets.size());
    EXPECT_EQ(sets.size(), verify::brute_force_admissible_count(n));
    EXPECT_EQ(sets.size(), expected[n - 1]);
  }
}

TEST(Admissible, OneSidedRuleGivesLargerCounts) {
  // Dropping the converse admits {z1,z2}-type sets: 7 and 29 for n = 2, 3.
  EXPECT_EQ(verify::one_sided_admissible_count(1), 2u);
  EXPECT_EQ(verify::one_sided_admissible_count(2), 7u);
  EXPECT_EQ(verify::one_sided_admissible_count(3), 29u);
}

TEST(YSet, Cases) {
  EXPECT_EQ(names(y_set(adm("", 1))), (std::vector<std::string>{"z1", "y1"}));
  EXPECT_EQ(names(y_set(adm("z1", 1))), (std::vector<std::string>{"y1"}));
  EXPECT_EQ(names(y_set(adm("z1,z2,y2", 2))), (std::vector<std::string>{"y1", "x2"}));
  EXPECT_TRUE(y_set(adm("z1,z2,y2,x2", 2)).size() == 1);
}

TEST(YSet, NeverHoldsBothGeneratorsOfAPair) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_admissible(n)) {
      std::set<std::size_t> ys, xs;
      for (const auto& m : y_set(t)) {
        if (m.kind == MarkerKind::y) ys.insert(m.index);
        if (m.kind == MarkerKind::x) xs.insert(m.index);
      }
      for (auto i : ys) EXPECT_FALSE(xs.count(i)) << t.str();
    }
}

TEST(TorusMatrix, Examples) {
  const auto c = torus_matrix_q(adm("", 1), WeylParams(2, {ExpVec{1, 0}}, {{ExpVec{0, 0}}}));
  EXPECT_EQ(c[0][1], (ExpVec{1, 0}));
  EXPECT_TRUE(c[0][0].is_zero() && c[1][1].is_zero());
  // y_k against z_n, y_n gives (-s_k, L_kn).
  const WeylParams p = three_pairs();
  const auto t = adm("z1,z2,y2", 3);
  ASSERT_EQ(names(y_set(t)), (std::vector<std::string>{"y1", "x2", "z3", "y3"}));
  const auto q = torus_matrix_q(t, p);
  EXPECT_EQ(q[0][2], -p.qexp(1));
  EXPECT_EQ(q[0][3], p.lexp(1, 3));
  EXPECT_EQ(q[1][2], p.qexp(2));
  const PoissonAlgebra pa(p);
  const auto d = torus_matrix_p(t, pa);
  EXPECT_EQ(d[0][2], MuPoly::linear(-p.qexp(1)));
  EXPECT_EQ(d[0][3], MuPoly::linear(p.lexp(1, 3)));
}

TEST(TorusMatrix, PoissonSideOfTheFirstStratum) {
  const PoissonAlgebra pa(one_pair());
  const auto d = torus_matrix_p(adm("", 1), pa);
  EXPECT_EQ(d[0][1], MuPoly::variable(2, 0));
  EXPECT_TRUE(d[0][0].is_zero());
}

TEST(TorusMatrix, RelationsHoldInTheAlgebra) {
  const auto a = make_formal_algebra(three_pairs());
  for (const auto& t : enumerate_admissible(3)) {
    const auto gens = y_set(t);
    const auto c = torus_matrix_q(t, a.params());
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const auto wi = marker_element(gens[i], a), wj = marker_element(gens[j], a);
        EXPECT_EQ(a.mul(wi, wj), a.mul(wj, wi).scaled(a.ring().monomial(c[i][j])));
      }
  }
}

TEST(TorusMatrix, DerivativeLinkAndAntisymmetry) {
  verify::Sampler rng(31);
  for (std::size_t n = 1; n <= 4; ++n) {
    const PoissonAlgebra pa(rng.instance_of(n, 2));
    for (const auto& t : enumerate_admissible(n)) {
      const TorusData d = torus_data(t, pa);
      EXPECT_TRUE(derivative_link_holds(d)) << t.str();
      for (std::size_t i = 0; i < d.generators.size(); ++i)
        for (std::size_t j = 0; j < d.generators.size(); ++j) {
          EXPECT_EQ(d.qmatrix[i][j], -d.qmatrix[j][i]);
          EXPECT_EQ(d.pmatrix[i][j], MuPoly(2) - d.pmatrix[j][i]);
        }
    }
  }
}

TEST(CenterLattice, Examples) {
  const ExpVec o{0, 0};
  EXPECT_EQ(center_lattice({{o, o}, {o, o}}).rank(), 2u);
  EXPECT_TRUE(center_lattice({{o, ExpVec{1, 0}}, {ExpVec{-1, 0}, o}}).trivial());
  const auto c = center_lattice({{o, ExpVec{1, 0}, ExpVec{1, 0}}, {ExpVec{-1, 0}, o, o}, {ExpVec{-1, 0}, o, o}});
  EXPECT_TRUE(lattice_contains(c.basis, IntVector{0, 1, -1}));
  EXPECT_EQ(c.rank(), 1u);
  EXPECT_THROW(center_lattice({{o, ExpVec{1, 0}}, {ExpVec{1, 0}, o}}), InstanceError);
}

TEST(CenterLattice, QuantumAndPoissonSidesAgree) {
  verify::Sampler rng(32);
  for (std::size_t n = 1; n <= 3; ++n)
    for (int k = 0; k < 3; ++k) {
      const PoissonAlgebra pa(rng.instance_of(n, static_cast<std::size_t>(rng.uniform(1, 2))));
      for (const auto& t : enumerate_admissible(n)) {
        const auto rep = stratum_report(t, pa);
        EXPECT_EQ(rep.center, rep.poisson_center) << t.str();
        for (const auto& u : verify::box_center(rep.torus.qmatrix, 2))
          EXPECT_TRUE(lattice_contains(rep.center.basis, IntVector(u.begin(), u.end())));
      }
    }
}

TEST(ClearDenominators, Examples) {
  const auto a = clear_denominators({{{-1, 1}, 1}, {{0, 0}, 1}});
  EXPECT_EQ(a.shift, (std::vector<std::int64_t>{1, 0}));
  EXPECT_EQ(a.polynomial, (LaurentCombination{{{0, 1}, 1}, {{1, 0}, 1}}));
  const LaurentCombination poly{{{2, 0}, 3}, {{0, 1}, -1}};
  EXPECT_EQ(clear_denominators(poly).polynomial, poly);
  EXPECT_EQ(clear_denominators(poly).shift, (std::vector<std::int64_t>{0, 0}));
  const auto b = clear_denominators({{{-2, -1}, 1}, {{1, 0}, -1}});
  EXPECT_EQ(b.shift, (std::vector<std::int64_t>{2, 1}));
  EXPECT_EQ(b.polynomial, (LaurentCombination{{{0, 0}, 1}, {{3, 1}, -1}}));
}

TEST(StratumReport, Examples) {
  const PoissonAlgebra pa(one_pair());
  const auto empty = stratum_report(adm("", 1), pa);
  EXPECT_EQ(names(empty.torus.generators), (std::vector<std::string>{"z1", "y1"}));
  EXPECT_TRUE(empty.center_trivial());
  const auto z1 = stratum_report(adm("z1", 1), pa);
  ASSERT_EQ(z1.torus.qmatrix.size(), 1u);
  EXPECT_TRUE(z1.torus.qmatrix[0][0].is_zero());
  EXPECT_EQ(z1.center.basis, (IntMatrix{{1}}));
  const PoissonAlgebra pb(three_pairs());
  const auto r = stratum_report(adm("z1", 3), pb);
  EXPECT_TRUE(r.derivative_link);
  EXPECT_EQ(r.center, r.poisson_center);
  EXPECT_EQ(names(r.torus.generators), (std::vector<std::string>{"y1", "z2", "y2", "z3", "y3"}));
}

TEST(RightIdeal, TorusRelationsReduceToZero) {
  const auto a = make_formal_algebra(three_pairs());
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& t : enumerate_admissible(3)) {
      const std::size_t s = y_set(t).size();
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) EXPECT_TRUE(torus_relation_residual(t, i, j, a).is_zero());
    }
  }
}

TEST(RightIdeal, ReducesGenuineMembers) {
  const auto a = make_formal_algebra(three_pairs());
  verify::Sampler rng(33);
  for (const auto& t : enumerate_admissible(3)) {
    const auto gens = ideal_generators(t, a);
    if (gens.empty()) continue;
    WeylElement f = a.zero();
    for (const auto& g : gens) f += a.mul(g, rng.weyl_element(a.params(), 2));
    EXPECT_TRUE(reduce_modulo_right_ideal(f, gens, a).is_zero()) << t.str();
  }
}

TEST(RightIdeal, LeavesNonMembers) {
  const auto a = make_formal_algebra(three_pairs());
  const auto t = adm("z1", 3);
  const auto rem = reduce_modulo_right_ideal(a.y(1), ideal_generators(t, a), a);
  EXPECT_EQ(rem, a.y(1));
  EXPECT_FALSE(reduce_modulo_right_ideal(a.one(), ideal_generators(t, a), a).is_zero());
}
