#include "localperiod/serialize.hpp"

#include <stdexcept>

namespace localperiod {

using nlohmann::json;

json to_json(const Rational& r) { return r.to_fraction_string(); }

json to_json(const Polynomial2& p)
{
    json arr = json::array();
    for (const auto& t : p.terms())
        arr.push_back(json::array({t.coeff.to_fraction_string(), t.dega, t.degz}));
    return arr;
}

json to_json(const RationalFunction2& f) { return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

json to_json(const TruncatedSeries2& s)
{
    json rows = json::array();
    for (const auto& row : s.coeffs) {
        json r = json::array();
        for (const auto& c : row)
            r.push_back(to_json(c));
        rows.push_back(std::move(r));
    }
    return rows;
}

json to_json(const std::vector<Rational>& v)
{
    json arr = json::array();
    for (const auto& c : v)
        arr.push_back(to_json(c));
    return arr;
}

json to_json(const LocalFactorReport& r)
{
    return json{{"raw", to_json(r.raw)},
                {"normalized", to_json(r.normalized)},
                {"adjusted", to_json(r.adjusted)},
                {"constant_ratio", to_json(r.constant_ratio)},
                {"ratio_is_constant", r.ratio_is_constant}};
}

json to_json(const ExponentForm& e) { return json{{"c0", e.c0}, {"ca", e.ca}, {"cb", e.cb}}; }

Rational rational_from_json(const json& j)
{
    if (!j.is_string())
        throw std::invalid_argument("expected a rational string");
    return Rational::parse(j.get<std::string>());
}

Polynomial2 polynomial_from_json(const json& j)
{
    Polynomial2 p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument("malformed monomial");
        p += Polynomial2::monomial(rational_from_json(t[0]), t[1].get<int>(), t[2].get<int>());
    }
    return p;
}

RationalFunction2 rational_function_from_json(const json& j)
{
    return RationalFunction2(polynomial_from_json(j.at("num")), polynomial_from_json(j.at("den")));
}

} // namespace localperiod
