#pragma once

#include <string>

#include "json.hpp"

#include "htoda/tseries.hpp"

namespace htoda {

// Series dump format, stable across runs:
//   {"D": int,
//    "params": {"beta_mode": "poly"|"trunc", "N_beta": int (trunc only)},
//    "terms": [{"t": [[k,e],...], "tbar": [[k,e],...],
//               "coeff": [{"e_beta", "e_s", "e_Q", "e_B",
//                          "value": "num/den"}, ...]}, ...]}
// with terms in graded-lexicographic monomial order and coefficient
// monomials in the parameter-exponent order.
nlohmann::ordered_json series_to_json(const TSeries& f);
TSeries series_from_json(const nlohmann::json& j);

std::string series_to_string(const TSeries& f);
TSeries series_from_string(const std::string& text);

}  // namespace htoda
