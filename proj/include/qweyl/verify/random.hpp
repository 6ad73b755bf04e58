#pragma once

// Seeded generators of instances and elements for the randomized suites.

#include <cstdint>
#include <random>
#include <vector>

#include "qweyl/interp.hpp"
#include "qweyl/poisson.hpp"
#include "qweyl/scalars.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl::verify {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  /// Nonzero rational p/q with |p| <= pmax, 1 <= q <= qmax.
  Rational nonzero_rational(std::int64_t pmax = 5, std::int64_t qmax = 4) {
    std::int64_t p = 0;
    while (p == 0) p = uniform(-pmax, pmax);
    Rational r(static_cast<long>(p), static_cast<unsigned long>(uniform(1, qmax)));
    r.canonicalize();
    return r;
  }

  ExpVec exp_vec(std::size_t rank, std::int64_t bound) {
    ExpVec v(rank);
    for (std::size_t k = 0; k < rank; ++k) v[k] = uniform(-bound, bound);
    return v;
  }

  /// n <= n_max, r <= r_max; s_i nonzero and L antisymmetric with entries in [-2, 2].
  WeylParams instance(std::size_t n_max = 3, std::size_t r_max = 2) {
    const auto n = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(n_max)));
    return instance_of(n, static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(r_max))));
  }

  WeylParams instance_of(std::size_t n, std::size_t r) {
    std::vector<ExpVec> q;
    for (std::size_t i = 0; i < n; ++i) {
      ExpVec s(r);
      while (s.is_zero()) s = exp_vec(r, 2);
      q.push_back(s);
    }
    std::vector<std::vector<ExpVec>> l(n, std::vector<ExpVec>(n, ExpVec(r)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        l[i][j] = exp_vec(r, 2);
        l[j][i] = -l[i][j];
      }
    return WeylParams(r, std::move(q), std::move(l));
  }

  /// A PBW word of total degree <= max_degree.
  Monomial word(std::size_t n, std::uint32_t max_degree) {
    Monomial m(n);
    const auto d = static_cast<std::uint32_t>(uniform(0, max_degree));
    for (std::uint32_t k = 0; k < d; ++k) m[static_cast<std::size_t>(uniform(0, 2 * n - 1))] += 1;
    return m;
  }

  /// 1-3 terms, each a PBW word times c * eta^v with |v_k| <= 1.
  WeylElement weyl_element(const WeylParams& p, std::uint32_t max_degree = 3) {
    WeylElement e(p.n());
    const auto terms = uniform(1, 3);
    for (std::int64_t t = 0; t < terms; ++t)
      e.add_term(word(p.n(), max_degree), QTScalar::monomial(exp_vec(p.rank(), 1), nonzero_rational(3, 2)));
    return e;
  }

  MuPoly mu_poly(std::size_t rank) {
    MuPoly c = MuPoly::constant(rank, nonzero_rational(3, 2));
    if (uniform(0, 1)) c += MuPoly::variable(rank, static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(rank) - 1))).scaled(nonzero_rational(3, 2));
    return c;
  }

  PoissonElement poisson_element(const PoissonAlgebra& pa, std::uint32_t max_degree = 2) {
    PoissonElement e(pa.n());
    const auto terms = uniform(1, 3);
    for (std::int64_t t = 0; t < terms; ++t) e.add_term(word(pa.n(), max_degree), mu_poly(pa.rank()));
    return e;
  }

  /// Interpolating quadratics from random (q, eta, mu) with q not in {0, 1}.
  std::vector<QuadPoly> e_polys(std::size_t rank) {
    Rational q = 0;
    while (q == 0 || q == 1) q = nonzero_rational(5, 3);
    std::vector<QuadPoly> out;
    for (std::size_t k = 0; k < rank; ++k) out.push_back(build_e(q, nonzero_rational(6, 3), nonzero_rational(4, 3)));
    return out;
  }

  /// lambda outside {0, 1} and away from the roots of every e_i.
  Rational lambda(const std::vector<QuadPoly>& e) {
    while (true) {
      Rational l = nonzero_rational(7, 4);
      if (l == 1) continue;
      bool ok = true;
      for (const auto& p : e) ok = ok && p(l) != 0;
      if (ok) return l;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qweyl::verify
