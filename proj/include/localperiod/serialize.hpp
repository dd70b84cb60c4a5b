#pragma once

#include <json.hpp>

#include "localperiod/closed_forms.hpp"
#include "localperiod/rational_function.hpp"

namespace localperiod {

// Structured output schema. Exact rationals are "numerator/denominator"
// strings (always with a slash); never floats.
//
//   rational           "n/d"
//   polynomial         [["c", dega, degz], ...] in ascending (dega, degz)
//   rational function  {"num": polynomial, "den": polynomial}
//   series             [[coeff of a^0 z^0, a^0 z^1, ...], [a^1 z^0, ...], ...]

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Polynomial2& p);
nlohmann::json to_json(const RationalFunction2& f);
nlohmann::json to_json(const TruncatedSeries2& s);
nlohmann::json to_json(const std::vector<Rational>& v);
nlohmann::json to_json(const LocalFactorReport& r);
nlohmann::json to_json(const ExponentForm& e);

Rational rational_from_json(const nlohmann::json& j);
Polynomial2 polynomial_from_json(const nlohmann::json& j);
RationalFunction2 rational_function_from_json(const nlohmann::json& j);

} // namespace localperiod
