#pragma once

// The acceptance suites. Each suite is deterministic in its seed and reports
// how many cases it ran and the first failing case, if any.

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qweyl/interp.hpp"
#include "qweyl/poisson.hpp"
#include "qweyl/quantum_plane.hpp"
#include "qweyl/spectra.hpp"
#include "qweyl/verify/oracles.hpp"
#include "qweyl/verify/random.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl::verify {

struct SuiteResult {
  int id = 0;
  std::string name;
  std::string title;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string detail;  // first failure, or a summary when all cases pass

  bool passed() const noexcept { return failures == 0 && cases > 0; }
  std::string line() const {
    std::ostringstream out;
    out << (passed() ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << cases << " cases";
    if (failures) out << ", " << failures << " failed";
    out << ")";
    if (!detail.empty()) out << ": " << detail;
    return out.str();
  }
};

namespace detail {

class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& describe) {
    ++cases_;
    if (ok) return;
    if (failures_++ == 0) first_ = describe();
  }
  SuiteResult result(int id, std::string name, std::string title, std::string summary = {}) const {
    return {id, std::move(name), std::move(title), cases_, failures_, failures_ ? first_ : std::move(summary)};
  }

 private:
  std::size_t cases_ = 0, failures_ = 0;
  std::string first_;
};

inline std::string params_str(const WeylParams& p) {
  std::ostringstream out;
  out << "n=" << p.n() << " r=" << p.rank() << " s=";
  for (std::size_t i = 1; i <= p.n(); ++i) out << p.qexp(i).str();
  out << " L=";
  for (std::size_t i = 1; i <= p.n(); ++i)
    for (std::size_t j = i + 1; j <= p.n(); ++j) out << p.lexp(i, j).str();
  return out.str();
}

}  // namespace detail

inline SuiteResult suite_pbw(std::uint64_t seed) {
  Sampler rng(seed);
  detail::Tally t;
  for (int k = 0; k < 200; ++k) {
    const WeylParams p = rng.instance(3, 2);
    const auto alg = make_formal_algebra(p);
    const auto a = rng.weyl_element(p), b = rng.weyl_element(p), c = rng.weyl_element(p);
    const auto left = alg.mul(alg.mul(a, b), c), right = alg.mul(a, alg.mul(b, c));
    t.check(left == right, [&] {
      return detail::params_str(p) + " a=" + to_string(a) + " b=" + to_string(b) + " c=" + to_string(c);
    });
  }
  return t.result(1, "pbw", "PBW associativity on random triples");
}

inline SuiteResult suite_br1(std::uint64_t seed) {
  Sampler rng(seed);
  detail::Tally t;
  std::vector<WeylParams> instances;
  for (std::size_t n = 1; n <= 4; ++n)
    for (int k = 0; k < 3; ++k) instances.push_back(rng.instance_of(n, static_cast<std::size_t>(rng.uniform(1, 2))));
  std::size_t families = 0;
  for (const auto& p : instances) {
    const auto alg = make_formal_algebra(p);
    std::vector<std::string> seen;
    for (const auto& id : br1_identities(alg)) {
      if (std::find(seen.begin(), seen.end(), id.family) == seen.end()) seen.push_back(id.family);
      t.check(id.lhs == id.rhs, [&] { return detail::params_str(p) + ": " + id.family; });
    }
    families = std::max(families, seen.size());
  }
  return t.result(2, "br1", "commutation identities of y_i, x_i, z_i in A, n = 1..4",
                  std::to_string(families) + " families");
}

inline SuiteResult suite_scl(std::uint64_t seed) {
  Sampler rng(seed);
  detail::Tally t;
  for (int k = 0; k < 200; ++k) {
    const WeylParams p = rng.instance(3, 2);
    const auto alg = make_formal_algebra(p);
    const PoissonAlgebra pa(p);
    const auto a = rng.weyl_element(p), b = rng.weyl_element(p);
    const auto lhs = pa.bracket(gamma1(a, p.rank()), gamma1(b, p.rank()));
    const auto rhs = semiclassical_bracket(a, b, alg);
    t.check(lhs == rhs, [&] { return detail::params_str(p) + " a=" + to_string(a) + " b=" + to_string(b); });
  }
  return t.result(3, "scl", "Poisson bracket of limits equals semiclassical bracket");
}

inline SuiteResult suite_wh(std::uint64_t seed) {
  Sampler rng(seed);
  detail::Tally t;
  for (std::size_t n = 1; n <= 4; ++n)
    for (int k = 0; k < 3; ++k) {
      const WeylParams p = rng.instance_of(n, static_cast<std::size_t>(rng.uniform(1, 2)));
      const auto alg = make_formal_algebra(p);
      for (std::size_t a = 0; a < 2 * n; ++a)
        for (std::size_t b = 0; b < 2 * n; ++b) {
          const Gen g{a % 2 ? GenKind::x : GenKind::y, a / 2 + 1}, h{b % 2 ? GenKind::x : GenKind::y, b / 2 + 1};
          const auto got = semiclassical_bracket(alg.gen(g), alg.gen(h), alg);
          t.check(got == generator_bracket_closed_form(g, h, p),
                  [&] { return detail::params_str(p) + ": {" + g.str() + "," + h.str() + "} = " + to_string(got); });
        }
    }
  return t.result(4, "wh", "generator brackets match closed forms, n = 1..4");
}

inline SuiteResult suite_jacobi(std::uint64_t seed) {
  Sampler rng(seed);
  detail::Tally t;
  for (int k = 0; k < 100; ++k) {
    const PoissonAlgebra pa(rng.instance(3, 2));
    const auto a = rng.poisson_element(pa), b = rng.poisson_element(pa), c = rng.poisson_element(pa);
    const auto j = pa.jacobiator(a, b, c);
    t.check(j.is_zero(), [&] { return detail::params_str(pa.params()) + " jacobiator " + to_string(j); });
  }
  return t.result(5, "jacobi", "Jacobi identity on random triples");
}

inline SuiteResult suite_br2(std::uint64_t seed) {
  Sampler rng(seed);
  detail::Tally t;
  for (std::size_t n = 1; n <= 4; ++n)
    for (int k = 0; k < 3; ++k) {
      const PoissonAlgebra pa(rng.instance_of(n, static_cast<std::size_t>(rng.uniform(1, 2))));
      for (const auto& id : br2_identities(pa))
        t.check(id.lhs == id.rhs, [&] { return detail::params_str(pa.params()) + ": " + id.family; });
    }
  return t.result(6, "br2", "bracket identities of y_i, x_i, z_i in A_1, n = 1..4");
}

inline SuiteResult suite_torus(std::uint64_t seed) {
  Sampler rng(seed);
  detail::Tally t;
  std::string counts;
  for (std::size_t n = 1; n <= 4; ++n) {
    const PoissonAlgebra pa(rng.instance_of(n, static_cast<std::size_t>(rng.uniform(1, 2))));
    const auto sets = enumerate_admissible(n);
    t.check(sets.size() == brute_force_admissible_count(n),
            [&] { return "n=" + std::to_string(n) + ": enumerator and brute force disagree"; });
    for (const auto& s : sets) {
      const TorusData d = torus_data(s, pa);
      t.check(derivative_link_holds(d), [&] { return detail::params_str(pa.params()) + " T=" + s.str(); });
    }
    counts += (counts.empty() ? "" : " + ") + std::to_string(sets.size());
  }
  return t.result(7, "torus", "pmatrix = qmatrix . mu for every admissible T, n = 1..4",
                  counts + " strata");
}

inline SuiteResult suite_center(std::uint64_t seed) {
  Sampler rng(seed);
  detail::Tally t;
  for (std::size_t n = 1; n <= 3; ++n) {
    const PoissonAlgebra pa(rng.instance_of(n, static_cast<std::size_t>(rng.uniform(1, 2))));
    for (const auto& s : enumerate_admissible(n)) {
      const StratumReport rep = stratum_report(s, pa);
      t.check(rep.center == rep.poisson_center,
              [&] { return detail::params_str(pa.params()) + " T=" + s.str() + ": lattices differ"; });
      // Box oracle: central vectors in the box are exactly the lattice points in the box.
      const auto box = box_center(rep.torus.qmatrix, 3);
      std::size_t inside = 0;
      const std::size_t width = rep.torus.generators.size();
      std::vector<std::int64_t> u(width, -3);
      bool all_agree = true;
      while (width > 0) {
        IntVector v(u.begin(), u.end());
        if (lattice_contains(rep.center.basis, v)) ++inside;
        std::size_t i = 0;
        while (i < width && u[i] == 3) u[i++] = -3;
        if (i == width) break;
        ++u[i];
      }
      for (const auto& b : box)
        all_agree = all_agree && lattice_contains(rep.center.basis, IntVector(b.begin(), b.end()));
      t.check(all_agree && inside == box.size(),
              [&] { return detail::params_str(pa.params()) + " T=" + s.str() + ": box oracle disagrees"; });
    }
  }
  return t.result(8, "center", "quantum and Poisson center lattices agree, n = 1..3");
}

inline SuiteResult suite_admissible(std::uint64_t) {
  detail::Tally t;
  const std::size_t expected[] = {2, 6, 20};
  std::string counts;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto sets = enumerate_admissible(n);
    const std::size_t brute = brute_force_admissible_count(n);
    std::size_t valid = 0;
    for (const auto& s : sets) valid += is_admissible(s.markers()) ? 1 : 0;
    bool distinct = true;
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = i + 1; j < sets.size(); ++j) distinct = distinct && !(sets[i] == sets[j]);
    t.check(sets.size() == brute && valid == sets.size() && distinct && brute == expected[n - 1], [&] {
      return "n=" + std::to_string(n) + ": enumerated " + std::to_string(sets.size()) + ", brute force " +
             std::to_string(brute) + ", expected " + std::to_string(expected[n - 1]);
    });
    counts += (counts.empty() ? "" : ", ") + ("n=" + std::to_string(n) + " -> " + std::to_string(sets.size()));
  }
  return t.result(9, "admissible", "admissible counts agree with brute force", counts);
}

inline SuiteResult suite_interp(std::uint64_t seed) {
  Sampler rng(seed);
  detail::Tally t;
  for (int k = 0; k < 50; ++k) {
    Rational q = 0;
    while (q == 0 || q == 1) q = rng.nonzero_rational(9, 5);
    const Rational eta = rng.nonzero_rational(9, 5);
    Rational mu(static_cast<long>(rng.uniform(-9, 9)), static_cast<unsigned long>(rng.uniform(1, 5)));
    mu.canonicalize();
    const QuadPoly e = build_e(q, eta, mu);
    t.check(e(q) == eta && e(1) == 1 && e.derivative(1) == mu && e == build_e_by_elimination(q, eta, mu),
            [&] { return "q=" + to_string(q) + " eta=" + to_string(eta) + " mu=" + to_string(mu); });
  }
  const QuadPoly sample = build_e(2, 3, 1);
  t.check(sample == QuadPoly{1, -1, 1} && build_e_by_elimination(2, 3, 1) == sample,
          [&] { return "(2,3,1) gave " + sample.str(); });
  return t.result(10, "interp", "interpolating quadratics have zero residual", "(2,3,1) -> " + sample.str());
}

inline SuiteResult suite_specialize(std::uint64_t seed) {
  Sampler rng(seed);
  detail::Tally t;
  for (int inst = 0; inst < 20; ++inst) {
    const WeylParams p = rng.instance(3, 2);
    const auto alg = make_formal_algebra(p);
    const auto e = rng.e_polys(p.rank());
    std::vector<std::pair<WeylElement, WeylElement>> pairs;
    for (int k = 0; k < 5; ++k) pairs.emplace_back(rng.weyl_element(p), rng.weyl_element(p));
    for (int l = 0; l < 5; ++l) {
      const Rational lambda = rng.lambda(e);
      const auto conc = concrete_algebra(p, e, lambda);
      for (const auto& [a, b] : pairs) {
        const auto lhs = specialize(alg.mul(a, b), lambda, e);
        const auto rhs = conc.mul(specialize(a, lambda, e), specialize(b, lambda, e));
        t.check(lhs == rhs, [&] {
          return detail::params_str(p) + " lambda=" + to_string(lambda) + " a=" + to_string(a) + " b=" + to_string(b);
        });
      }
    }
  }
  return t.result(11, "specialize", "specialization is multiplicative");
}

inline SuiteResult suite_maltsiniotis(std::uint64_t seed) {
  Sampler rng(seed);
  detail::Tally t;
  for (std::size_t n = 1; n <= 3; ++n)
    for (int k = 0; k < 3; ++k) {
      const WeylParams p = rng.instance_of(n, static_cast<std::size_t>(rng.uniform(1, 2)));
      const auto alg = make_formal_algebra(p);
      for (const auto& rel : maltsiniotis_relations(p)) {
        const auto image = from_maltsiniotis(rel.relation, alg);
        t.check(image.is_zero(), [&] { return detail::params_str(p) + ": " + rel.name + " -> " + to_string(image); });
      }
    }
  return t.result(12, "maltsiniotis", "rescaled defining relations vanish in A, n = 1..3");
}

inline SuiteResult suite_quantum_plane(std::uint64_t) {
  detail::Tally t;
  const QuantumPlane qp;
  const auto xy = qp.mul(qp.x(), qp.y()), yx = qp.mul(qp.y(), qp.x());
  t.check(xy == qp.scaled(yx, qp.e1()), [] { return std::string("xy != e1 yx"); });
  const auto br = qp.semiclassical_bracket(qp.x(), qp.y());
  QuantumPlane::PElement expected;
  expected.add({1, 1}, MuPoly::variable(1, 0));
  t.check(br == expected, [] { return std::string("{x,y} != mu1 xy"); });
  // Associativity on the words x^a y^b, a, b <= 2.
  std::vector<QuantumPlane::QElement> words;
  for (std::uint32_t a = 0; a <= 2; ++a)
    for (std::uint32_t b = 0; b <= 2; ++b) words.push_back(qp.word(a, b, qp.one()));
  bool assoc = true;
  for (const auto& u : words)
    for (const auto& v : words)
      for (const auto& w : words) assoc = assoc && qp.mul(qp.mul(u, v), w) == qp.mul(u, qp.mul(v, w));
  t.check(assoc, [] { return std::string("quantum-plane product is not associative"); });
  return t.result(13, "quantum-plane", "quantum plane relation and limit bracket", "xy=tyx, {x,y}=xy");
}

inline SuiteResult suite_ideal(std::uint64_t seed) {
  Sampler rng(seed);
  detail::Tally t;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto alg = make_formal_algebra(rng.instance_of(n, static_cast<std::size_t>(rng.uniform(1, 2))));
    for (const auto& s : enumerate_admissible(n)) {
      const std::size_t size = y_set(s).size();
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
          const auto res = torus_relation_residual(s, i, j, alg);
          t.check(res.is_zero(), [&] {
            return detail::params_str(alg.params()) + " T=" + s.str() + " (" + std::to_string(i) + "," +
                   std::to_string(j) + ") leaves " + to_string(res);
          });
        }
    }
  }
  return t.result(14, "ideal", "torus relations lie in the right ideal of T, n = 1..3");
}

struct SuiteInfo {
  int id;
  const char* name;
  SuiteResult (*run)(std::uint64_t);
};

inline const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> all{
      {1, "pbw", suite_pbw},          {2, "br1", suite_br1},
      {3, "scl", suite_scl},          {4, "wh", suite_wh},
      {5, "jacobi", suite_jacobi},    {6, "br2", suite_br2},
      {7, "torus", suite_torus},      {8, "center", suite_center},
      {9, "admissible", suite_admissible}, {10, "interp", suite_interp},
      {11, "specialize", suite_specialize}, {12, "maltsiniotis", suite_maltsiniotis},
      {13, "quantum-plane", suite_quantum_plane}, {14, "ideal", suite_ideal},
  };
  return all;
}

inline constexpr std::uint64_t default_seed = 20240601;

/// Runs every suite, or the one whose name or number is `only`. An unknown
/// name throws InstanceError. Each suite gets its own seed derived from
/// `seed` so running one alone reproduces its full-run result.
inline std::vector<SuiteResult> run_suites(std::uint64_t seed, const std::optional<std::string>& only = {}) {
  std::vector<SuiteResult> out;
  for (const auto& s : suites()) {
    if (only && *only != s.name && *only != std::to_string(s.id)) continue;
    try {
      out.push_back(s.run(seed * 1000003u + static_cast<std::uint64_t>(s.id)));
    } catch (const std::exception& e) {
      out.push_back({s.id, s.name, s.name, 1, 1, std::string("exception: ") + e.what()});
    }
  }
  if (only && out.empty()) throw InstanceError("unknown suite \"" + *only + "\"");
  return out;
}

}  // namespace qweyl::verify
