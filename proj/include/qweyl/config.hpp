#pragma once

// Instance configuration documents (JSON).
//
//   {
//     "n": 2, "r": 1,
//     "q_exponents": [[1], [2]],
//     "lambda_exponents": [[[0, 1], [-1, 0]]],
//     "concrete": {"q": "2", "eta": ["3"], "mu": ["1"]},
//     "seed": 7
//   }
//
// lambda_exponents[k][i][j] is coordinate k of L_{i+1,j+1}. Integers may be
// JSON numbers or decimal strings; rationals are strings "p/q" (or integers).

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qweyl/errors.hpp"
#include "qweyl/interp.hpp"
#include "qweyl/scalars.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl {

struct ConcreteParams {
  Rational q;
  std::vector<Rational> eta;
  std::vector<Rational> mu;

  /// e_1, ..., e_r from build_e.
  std::vector<QuadPoly> polynomials() const {
    std::vector<QuadPoly> out;
    for (std::size_t i = 0; i < eta.size(); ++i) out.push_back(build_e(q, eta[i], mu[i]));
    return out;
  }
};

struct InstanceConfig {
  WeylParams params;
  std::optional<ConcreteParams> concrete;
  std::optional<std::uint64_t> seed;
};

namespace detail {

inline std::int64_t json_integer(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t used = 0;
    try {
      std::int64_t v = std::stoll(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw InstanceError(where + ": not an integer: \"" + s + "\"");
  }
  throw InstanceError(where + ": expected an integer");
}

inline Rational json_rational(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<std::int64_t>()), 10);
  if (j.is_string()) {
    try {
      return parse_rational(j.get_ref<const std::string&>());
    } catch (const std::exception& e) {
      throw InstanceError(where + ": " + e.what());
    }
  }
  throw InstanceError(where + ": expected a rational string \"p/q\"");
}

inline const nlohmann::json& json_field(const nlohmann::json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InstanceError(std::string("missing field \"") + key + "\"");
  return *it;
}

inline const nlohmann::json& json_array(const nlohmann::json& j, std::size_t size, const std::string& where) {
  if (!j.is_array()) throw InstanceError(where + ": expected an array");
  if (j.size() != size)
    throw InstanceError(where + ": expected " + std::to_string(size) + " entries, got " +
                        std::to_string(j.size()));
  return j;
}

}  // namespace detail

inline InstanceConfig config_from_json(const nlohmann::json& doc) {
  using namespace detail;
  if (!doc.is_object()) throw InstanceError("config must be a JSON object");
  const std::int64_t n = json_integer(json_field(doc, "n"), "n");
  const std::int64_t r = json_integer(json_field(doc, "r"), "r");
  if (n < 1) throw InstanceError("n must be at least 1");
  if (r < 1) throw InstanceError("r must be at least 1");
  const auto un = static_cast<std::size_t>(n), ur = static_cast<std::size_t>(r);

  const auto& qrows = json_array(json_field(doc, "q_exponents"), un, "q_exponents");
  std::vector<ExpVec> qexp;
  for (std::size_t i = 0; i < un; ++i) {
    const std::string where = "q_exponents[" + std::to_string(i) + "]";
    const auto& row = json_array(qrows[i], ur, where);
    std::vector<std::int64_t> v;
    for (std::size_t k = 0; k < ur; ++k) v.push_back(json_integer(row[k], where));
    qexp.emplace_back(std::move(v));
  }

  const auto& lmats = json_array(json_field(doc, "lambda_exponents"), ur, "lambda_exponents");
  std::vector<std::vector<ExpVec>> lexp(un, std::vector<ExpVec>(un, ExpVec(ur)));
  for (std::size_t k = 0; k < ur; ++k) {
    const std::string wk = "lambda_exponents[" + std::to_string(k) + "]";
    const auto& mat = json_array(lmats[k], un, wk);
    for (std::size_t i = 0; i < un; ++i) {
      const std::string wi = wk + "[" + std::to_string(i) + "]";
      const auto& row = json_array(mat[i], un, wi);
      for (std::size_t j = 0; j < un; ++j) lexp[i][j][k] = json_integer(row[j], wi);
    }
  }

  InstanceConfig cfg{WeylParams(ur, std::move(qexp), std::move(lexp)), std::nullopt, std::nullopt};

  if (auto it = doc.find("concrete"); it != doc.end() && !it->is_null()) {
    const auto& c = *it;
    if (!c.is_object()) throw InstanceError("concrete must be an object");
    ConcreteParams cp;
    cp.q = json_rational(json_field(c, "q"), "concrete.q");
    const auto& eta = json_array(json_field(c, "eta"), ur, "concrete.eta");
    const auto& mu = json_array(json_field(c, "mu"), ur, "concrete.mu");
    for (std::size_t k = 0; k < ur; ++k) {
      cp.eta.push_back(json_rational(eta[k], "concrete.eta"));
      cp.mu.push_back(json_rational(mu[k], "concrete.mu"));
    }
    try {
      (void)cp.polynomials();
    } catch (const DomainError& e) {
      throw InstanceError(std::string("concrete: ") + e.what());
    }
    cfg.concrete = std::move(cp);
  }
  if (auto it = doc.find("seed"); it != doc.end() && !it->is_null()) {
    const std::int64_t s = json_integer(*it, "seed");
    if (s < 0) throw InstanceError("seed must be nonnegative");
    cfg.seed = static_cast<std::uint64_t>(s);
  }
  return cfg;
}

inline InstanceConfig config_from_string(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InstanceError(std::string("config is not valid JSON: ") + e.what());
  }
  return config_from_json(doc);
}

inline InstanceConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_string(buf.str());
}

inline nlohmann::json config_to_json(const InstanceConfig& cfg) {
  const auto& p = cfg.params;
  nlohmann::json doc;
  doc["n"] = p.n();
  doc["r"] = p.rank();
  nlohmann::json q = nlohmann::json::array();
  for (std::size_t i = 1; i <= p.n(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < p.rank(); ++k) row.push_back(p.qexp(i)[k]);
    q.push_back(row);
  }
  doc["q_exponents"] = q;
  nlohmann::json l = nlohmann::json::array();
  for (std::size_t k = 0; k < p.rank(); ++k) {
    nlohmann::json mat = nlohmann::json::array();
    for (std::size_t i = 1; i <= p.n(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 1; j <= p.n(); ++j) row.push_back(p.lexp(i, j)[k]);
      mat.push_back(row);
    }
    l.push_back(mat);
  }
  doc["lambda_exponents"] = l;
  if (cfg.concrete) {
    nlohmann::json c;
    c["q"] = to_string(cfg.concrete->q);
    for (const auto& e : cfg.concrete->eta) c["eta"].push_back(to_string(e));
    for (const auto& m : cfg.concrete->mu) c["mu"].push_back(to_string(m));
    doc["concrete"] = c;
  }
  if (cfg.seed) doc["seed"] = *cfg.seed;
  return doc;
}

/// The instance used when no config file is given: n = 3, r = 2.
inline InstanceConfig default_config() {
  return config_from_string(R"({
    "n": 3, "r": 2,
    "q_exponents": [[1, 0], [0, 1], [1, 1]],
    "lambda_exponents": [
      [[0, 1, 0], [-1, 0, 1], [0, -1, 0]],
      [[0, 0, 1], [0, 0, -1], [-1, 1, 0]]
    ],
    "concrete": {"q": "2", "eta": ["3", "5"], "mu": ["1", "1/2"]}
  })");
}

}  // namespace qweyl
