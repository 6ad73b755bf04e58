#pragma once

// Command dispatch for the qweyl tool. Each command returns an exit status,
// human-readable text and a machine-readable record.
//
// Exit status: 0 success, 1 a verification failed, 2 bad usage or bad input.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qweyl/config.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/expr.hpp"
#include "qweyl/interp.hpp"
#include "qweyl/poisson.hpp"
#include "qweyl/quantum_plane.hpp"
#include "qweyl/spectra.hpp"
#include "qweyl/verify.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

struct CommandOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> suite;
};

struct CommandOutput {
  int status = ok;
  std::string text;
  nlohmann::json record;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate", "nf",     "comm",   "bracket",
                                              "limit",    "scl",    "admissible", "stratum",
                                              "center",   "verify", "example", "maltsiniotis"};
  return names;
}

namespace detail {

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

class Session {
 public:
  Session(std::string command, const InstanceConfig& cfg) : command_(std::move(command)), cfg_(cfg) {}

  void line(const std::string& s) { text_ << s << "\n"; }
  void check(std::string name, bool passed, std::string detail = {}) {
    checks_.push_back({std::move(name), passed, std::move(detail)});
  }
  nlohmann::json& result() { return result_; }

  CommandOutput finish(int status = ok) const {
    nlohmann::json checks = nlohmann::json::array();
    bool all = true;
    for (const auto& c : checks_) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      all = all && c.passed;
    }
    if (!all && status == ok) status = verification_failed;
    nlohmann::json record{{"command", command_},
                          {"instance", config_to_json(cfg_)},
                          {"result", result_},
                          {"checks", checks},
                          {"status", status}};
    return {status, text_.str(), std::move(record)};
  }

 private:
  std::string command_;
  const InstanceConfig& cfg_;
  std::ostringstream text_;
  nlohmann::json result_ = nlohmann::json::object();
  std::vector<Check> checks_;
};

inline void need_args(const std::string& command, const std::vector<std::string>& args, std::size_t count,
                      const char* usage) {
  if (args.size() != count)
    throw InstanceError(command + " expects " + std::to_string(count) + " argument" +
                        (count == 1 ? "" : "s") + ": " + usage);
}

/// "c*(m1 + m2)" when every coefficient equals c and there are several terms.
inline std::string factored(const PoissonElement& p) {
  if (p.size() < 2) return to_string(p);
  const MuPoly& c = p.terms().begin()->second;
  for (const auto& [m, k] : p.terms())
    if (!(k == c)) return to_string(p);
  if (c.is_constant()) return to_string(p);
  Polynomial<Rational> words(p.n());
  for (const auto& [m, k] : p.terms()) words.add_term(m, Rational(1));
  const std::string cs = c.str();
  const bool compound = c.terms().size() > 1;
  return (compound ? "(" + cs + ")" : cs) + "*(" + to_string(words) + ")";
}

inline nlohmann::json lattice_json(const CenterLattice& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : c.basis) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(e.get_str());
    rows.push_back(r);
  }
  return rows;
}

inline std::string lattice_str(const CenterLattice& c) {
  if (c.trivial()) return "0 (trivial)";
  std::string s;
  for (const auto& row : c.basis) {
    s += s.empty() ? "[" : " [";
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? "," : "") + row[j].get_str();
    s += "]";
  }
  return s;
}

inline std::string markers_str(const std::vector<Marker>& gens) {
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].str();
  return s + ")";
}

inline AdmissibleSet parse_tspec(const std::string& spec, std::size_t n) {
  return AdmissibleSet(MarkerSet::parse(spec, n));
}

inline CommandOutput cmd_validate(Session& s, const InstanceConfig& cfg) {
  const auto& p = cfg.params;
  s.line("instance: n=" + std::to_string(p.n()) + ", r=" + std::to_string(p.rank()));
  for (std::size_t i = 1; i <= p.n(); ++i) s.line("  s" + std::to_string(i) + " = " + p.qexp(i).str());
  for (std::size_t i = 1; i <= p.n(); ++i)
    for (std::size_t j = i + 1; j <= p.n(); ++j)
      s.line("  L" + std::to_string(i) + std::to_string(j) + " = " + p.lexp(i, j).str());
  s.check("antisymmetric lambda exponents with zero diagonal", true);
  s.check("every s_i nonzero", true);
  if (cfg.concrete) {
    const auto e = cfg.concrete->polynomials();
    bool residual_zero = true;
    for (std::size_t k = 0; k < e.size(); ++k) {
      const auto& c = *cfg.concrete;
      residual_zero = residual_zero && e[k](c.q) == c.eta[k] && e[k](1) == 1 && e[k].derivative(1) == c.mu[k];
      s.line("  e" + std::to_string(k + 1) + " = " + e[k].str());
      s.result()["e"].push_back(e[k].str());
    }
    s.check("interpolation residuals are zero", residual_zero);
    const bool independent = independence_check(cfg.concrete->eta, 10);
    s.check("eta values multiplicatively independent up to exponent 10", independent);
    if (!independent) s.line("  warning: eta values satisfy a multiplicative relation");
  }
  s.result()["valid"] = true;
  s.line("valid");
  return s.finish();
}

inline CommandOutput cmd_scl(Session& s, const InstanceConfig& cfg, const std::vector<std::string>& args) {
  need_args("scl", args, 2, "scl EXPR EXPR");
  const auto alg = make_formal_algebra(cfg.params);
  const PoissonAlgebra pa(cfg.params);
  const auto a = parse_weyl(args[0], alg), b = parse_weyl(args[1], alg);
  const auto scl = semiclassical_bracket(a, b, alg);
  const auto direct = pa.bracket(gamma1(a, cfg.params.rank()), gamma1(b, cfg.params.rank()));
  const bool consistent = scl == direct;
  s.check("semiclassical bracket equals the Poisson bracket of the limits", consistent,
          consistent ? "" : "Poisson bracket of limits: " + to_string(direct));
  s.result() = {{"bracket", to_string(scl)}, {"consistent", consistent}};
  s.line(factored(scl) + (consistent ? "; CONSISTENT" : "; INCONSISTENT"));
  return s.finish();
}

inline CommandOutput cmd_admissible(Session& s, const std::vector<std::string>& args) {
  need_args("admissible", args, 1, "admissible N");
  std::size_t used = 0;
  long n = 0;
  try {
    n = std::stol(args[0], &used);
  } catch (const std::exception&) {
  }
  if (used != args[0].size() || n < 1 || n > 12) throw InstanceError("admissible N needs 1 <= N <= 12");
  const auto sets = enumerate_admissible(static_cast<std::size_t>(n));
  nlohmann::json list = nlohmann::json::array();
  for (const auto& t : sets) {
    s.line(t.str());
    list.push_back(t.str());
  }
  s.line(std::to_string(sets.size()) + " admissible sets for n=" + std::to_string(n));
  s.result() = {{"n", n}, {"count", sets.size()}, {"sets", list}};
  return s.finish();
}

inline CommandOutput cmd_stratum(Session& s, const InstanceConfig& cfg, const std::vector<std::string>& args) {
  need_args("stratum", args, 1, "stratum TSPEC");
  const PoissonAlgebra pa(cfg.params);
  const StratumReport rep = stratum_report(parse_tspec(args[0], cfg.params.n()), pa);
  const auto& gens = rep.torus.generators;
  s.line("T = " + rep.set.str());
  s.line("Y_T = " + markers_str(gens));
  s.line("commutation exponents c_ij (w_i w_j = eta^c_ij w_j w_i):");
  nlohmann::json q = nlohmann::json::array(), pm = nlohmann::json::array();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::string row = " ";
    nlohmann::json qr = nlohmann::json::array(), pr = nlohmann::json::array();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      row += " " + rep.torus.qmatrix[i][j].str();
      qr.push_back(rep.torus.qmatrix[i][j].entries());
      pr.push_back(rep.torus.pmatrix[i][j].str());
    }
    s.line(row);
    q.push_back(qr);
    pm.push_back(pr);
  }
  s.line("bracket coefficients d_ij ({w_i, w_j} = d_ij w_i w_j):");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::string row = " ";
    for (std::size_t j = 0; j < gens.size(); ++j) row += " " + rep.torus.pmatrix[i][j].str();
    s.line(row);
  }
  s.line("center lattice: " + lattice_str(rep.center));
  s.line("Poisson center lattice: " + lattice_str(rep.poisson_center));
  s.check("d_ij = c_ij . mu", rep.derivative_link);
  s.check("quantum and Poisson center lattices coincide", rep.center == rep.poisson_center);
  nlohmann::json names = nlohmann::json::array();
  for (const auto& g : gens) names.push_back(g.str());
  s.result() = {{"set", rep.set.str()},
                {"generators", names},
                {"qmatrix", q},
                {"pmatrix", pm},
                {"center", lattice_json(rep.center)},
                {"poisson_center", lattice_json(rep.poisson_center)},
                {"center_trivial", rep.center_trivial()},
                {"derivative_link", rep.derivative_link}};
  return s.finish();
}

inline CommandOutput cmd_center(Session& s, const InstanceConfig& cfg, const std::vector<std::string>& args) {
  need_args("center", args, 1, "center TSPEC");
  const auto t = parse_tspec(args[0], cfg.params.n());
  const auto gens = y_set(t);
  const CenterLattice c = center_lattice(torus_matrix_q(t, cfg.params));
  s.line("Y_T = " + markers_str(gens));
  s.line("center lattice (rank " + std::to_string(c.rank()) + "): " + lattice_str(c));
  s.result() = {{"set", t.str()}, {"rank", c.rank()}, {"basis", lattice_json(c)}};
  return s.finish();
}

inline CommandOutput cmd_verify(Session& s, const InstanceConfig& cfg, const CommandOptions& opt) {
  const std::uint64_t seed = opt.seed ? *opt.seed : cfg.seed ? *cfg.seed : verify::default_seed;
  const auto results = verify::run_suites(seed, opt.suite);
  std::size_t passed = 0;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : results) {
    s.line(r.line());
    s.check(std::to_string(r.id) + " " + r.name, r.passed(), r.detail);
    passed += r.passed() ? 1 : 0;
    list.push_back({{"id", r.id}, {"name", r.name}, {"cases", r.cases}, {"failures", r.failures}});
  }
  s.line(std::to_string(passed) + "/" + std::to_string(results.size()) + " suites passed (seed " +
         std::to_string(seed) + ")");
  s.result() = {{"seed", seed}, {"suites", list}};
  return s.finish();
}

inline CommandOutput cmd_example(Session& s, const std::vector<std::string>& args) {
  need_args("example", args, 1, "example quantum-plane");
  if (args[0] != "quantum-plane") throw InstanceError("unknown example \"" + args[0] + "\" (known: quantum-plane)");
  const QuantumPlane qp;
  const bool relation = qp.mul(qp.x(), qp.y()) == qp.scaled(qp.mul(qp.y(), qp.x()), qp.e1());
  const auto br = qp.semiclassical_bracket(qp.x(), qp.y());
  // For e_1 = t the derivative at 1 is mu_1 = 1.
  std::string formal, concrete;
  for (const auto& [w, c] : br.terms) {
    formal += (formal.empty() ? "" : " + ") + c.str() + "*" + QuantumPlane::word_str(w);
    Rational value = 0;
    for (const auto& [deg, k] : c.terms()) value += k;
    concrete += (concrete.empty() ? "" : " + ") + (value == 1 ? "" : to_string(value) + "*") + QuantumPlane::word_str(w);
  }
  if (formal.empty()) formal = concrete = "0";
  s.line("relation: " + std::string(relation ? "xy=tyx" : "xy!=tyx"));
  s.line("limit bracket: {x,y}=" + concrete);
  s.line("with mu1 formal: {x,y}=" + formal);
  s.check("xy = e1 yx", relation);
  s.check("{x,y} = xy", concrete == "xy");
  s.result() = {{"relation", "xy=tyx"}, {"bracket", "{x,y}=" + concrete}, {"bracket_formal", "{x,y}=" + formal}};
  return s.finish();
}

}  // namespace detail

/// Runs one command against an instance.
inline CommandOutput run_command(const std::string& command, const InstanceConfig& cfg,
                                 const std::vector<std::string>& args, const CommandOptions& opt = {}) {
  detail::Session s(command, cfg);
  const auto& params = cfg.params;
  auto single = [&](const char* usage) { detail::need_args(command, args, 1, usage); };
  auto pair = [&](const char* usage) { detail::need_args(command, args, 2, usage); };
  if (command == "validate") return detail::cmd_validate(s, cfg);
  if (command == "nf") {
    single("nf EXPR");
    const auto e = parse_weyl(args[0], make_formal_algebra(params));
    s.line(to_string(e));
    s.result() = {{"normal_form", to_string(e)}};
    return s.finish();
  }
  if (command == "comm") {
    pair("comm EXPR EXPR");
    const auto alg = make_formal_algebra(params);
    const auto c = alg.commutator(parse_weyl(args[0], alg), parse_weyl(args[1], alg));
    s.line(to_string(c));
    s.check("commutator vanishes at t = 1", divisible_by_t_minus_1(c));
    s.result() = {{"commutator", to_string(c)}};
    return s.finish();
  }
  if (command == "bracket") {
    pair("bracket EXPR EXPR");
    const PoissonAlgebra pa(params);
    const auto b = pa.bracket(parse_poisson(args[0], pa), parse_poisson(args[1], pa));
    s.line(detail::factored(b));
    s.result() = {{"bracket", to_string(b)}};
    return s.finish();
  }
  if (command == "limit") {
    single("limit EXPR");
    const auto g = gamma1(parse_weyl(args[0], make_formal_algebra(params)), params.rank());
    s.line(to_string(g));
    s.result() = {{"limit", to_string(g)}};
    return s.finish();
  }
  if (command == "scl") return detail::cmd_scl(s, cfg, args);
  if (command == "admissible") return detail::cmd_admissible(s, args);
  if (command == "stratum") return detail::cmd_stratum(s, cfg, args);
  if (command == "center") return detail::cmd_center(s, cfg, args);
  if (command == "verify") {
    if (!args.empty()) throw InstanceError("verify takes no positional arguments");
    return detail::cmd_verify(s, cfg, opt);
  }
  if (command == "example") return detail::cmd_example(s, args);
  if (command == "maltsiniotis") {
    single("maltsiniotis EXPR");
    const auto image = from_maltsiniotis(parse_free(args[0], params), make_formal_algebra(params));
    s.line(to_string(image));
    s.result() = {{"image", to_string(image)}};
    return s.finish();
  }
  throw InstanceError("unknown command \"" + command + "\"");
}

/// run_command with every failure turned into an exit status and an error record.
inline CommandOutput run_command_safely(const std::string& command, const InstanceConfig& cfg,
                                        const std::vector<std::string>& args, const CommandOptions& opt = {}) {
  auto failure = [&](int status, const char* type, const std::exception& e) {
    nlohmann::json err{{"type", type}, {"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
      err["line"] = pe->line();
      err["column"] = pe->column();
    }
    nlohmann::json record{{"command", command}, {"instance", config_to_json(cfg)}, {"error", err},
                          {"checks", nlohmann::json::array()}, {"status", status}};
    return CommandOutput{status, std::string("error: ") + e.what() + "\n", std::move(record)};
  };
  try {
    return run_command(command, cfg, args, opt);
  } catch (const ParseError& e) {
    return failure(usage_error, "parse", e);
  } catch (const InstanceError& e) {
    return failure(usage_error, "instance", e);
  } catch (const LocalizationError& e) {
    return failure(usage_error, "localization", e);
  } catch (const DomainError& e) {
    return failure(usage_error, "domain", e);
  } catch (const DivisibilityError& e) {
    return failure(usage_error, "divisibility", e);
  } catch (const InvariantViolation& e) {
    return failure(verification_failed, "invariant", e);
  }
}

}  // namespace qweyl::cli
