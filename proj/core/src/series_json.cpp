#include "htoda/series_json.hpp"

#include <algorithm>
#include <stdexcept>

namespace htoda {

namespace {

nlohmann::ordered_json exponents_to_json(
    const std::vector<std::pair<int, int>>& xs) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [k, e] : xs) out.push_back({k, e});
  return out;
}

std::vector<std::pair<int, int>> exponents_from_json(
    const nlohmann::json& j) {
  std::vector<std::pair<int, int>> out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("series JSON: exponent entry must be [k,e]");
    int k = pair[0].get<int>();
    int e = pair[1].get<int>();
    if (k < 1 || e < 1)
      throw std::invalid_argument("series JSON: indices and exponents >= 1");
    out.emplace_back(k, e);
  }
  std::sort(out.begin(), out.end());
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i].first == out[i - 1].first)
      throw std::invalid_argument("series JSON: repeated variable index");
  return out;
}

}  // namespace

nlohmann::ordered_json series_to_json(const TSeries& f) {
  int mode = -1;
  for (const auto& [mono, c] : f.terms())
    mode = std::max(mode, c.mode_code());

  nlohmann::ordered_json j;
  j["D"] = f.trunc_degree();
  nlohmann::ordered_json params;
  if (mode >= 1) {
    params["beta_mode"] = "trunc";
    params["N_beta"] = mode;
  } else {
    params["beta_mode"] = "poly";
  }
  j["params"] = params;

  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [mono, c] : f.terms()) {
    nlohmann::ordered_json term;
    term["t"] = exponents_to_json(mono.t);
    term["tbar"] = exponents_to_json(mono.tb);
    nlohmann::ordered_json coeff = nlohmann::ordered_json::array();
    for (const auto& [e, v] : c.terms()) {
      nlohmann::ordered_json piece;
      piece["e_beta"] = e.b;
      piece["e_s"] = e.es;
      piece["e_Q"] = e.eq;
      piece["e_B"] = e.eB;
      piece["value"] = rat_str(v);
      coeff.push_back(piece);
    }
    term["coeff"] = coeff;
    terms.push_back(term);
  }
  j["terms"] = terms;
  return j;
}

TSeries series_from_json(const nlohmann::json& j) {
  if (!j.contains("D") || !j.contains("params") || !j.contains("terms"))
    throw std::invalid_argument("series JSON: need D, params, terms");
  int D = j["D"].get<int>();
  const auto& params = j["params"];
  std::string beta_mode = params.at("beta_mode").get<std::string>();
  int mode;
  if (beta_mode == "poly") {
    mode = 0;
  } else if (beta_mode == "trunc") {
    mode = params.at("N_beta").get<int>();
    if (mode < 1)
      throw std::invalid_argument("series JSON: trunc mode needs N_beta >= 1");
  } else {
    throw std::invalid_argument("series JSON: beta_mode must be poly|trunc");
  }

  TSeries f = TSeries::zero(D);
  for (const auto& term : j["terms"]) {
    Monomial mono;
    mono.t = exponents_from_json(term.at("t"));
    mono.tb = exponents_from_json(term.at("tbar"));
    if (mono.wdeg() > D)
      throw std::invalid_argument("series JSON: term exceeds truncation");
    ParamScalar acc = ParamScalar::zero();
    for (const auto& piece : term.at("coeff")) {
      ParamExp e;
      e.b = piece.at("e_beta").get<int>();
      e.es = piece.at("e_s").get<int>();
      e.eq = piece.at("e_Q").get<int>();
      e.eB = piece.at("e_B").get<int>();
      if (e.b < 0 || e.es < 0)
        throw std::invalid_argument("series JSON: negative beta or s power");
      if (mode >= 1 && e.b >= mode) continue;
      Rat v = rat_parse(piece.at("value").get<std::string>());
      acc += ParamScalar::monomial(v, e, mode);
    }
    if (!acc.is_zero()) {
      if (!f.coeff(mono).is_zero())
        throw std::invalid_argument("series JSON: repeated monomial");
      f.set_coeff(mono, acc);
    }
  }
  return f;
}

std::string series_to_string(const TSeries& f) {
  return series_to_json(f).dump(2);
}

TSeries series_from_string(const std::string& text) {
  return series_from_json(nlohmann::json::parse(text));
}

}  // namespace htoda
