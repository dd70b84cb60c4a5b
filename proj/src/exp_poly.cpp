#include "localperiod/exp_poly.hpp"

#include <stdexcept>

namespace localperiod {

ExpPolyT::ExpPolyT(std::vector<Term> terms) : terms_(std::move(terms))
{
    for (const auto& t : terms_)
        if (t.coeff.contains(Var::A) || t.ratio.contains(Var::A))
            throw std::invalid_argument("ExpPolyT terms must be functions of z only");
}

RationalFunction2 ExpPolyT::evaluate(unsigned T) const
{
    RationalFunction2 sum;
    for (const auto& t : terms_)
        sum = sum + t.coeff * t.ratio.pow(T);
    return sum;
}

RationalFunction2 ExpPolyT::stationary_part() const
{
    RationalFunction2 sum;
    for (const auto& t : terms_)
        if (rf_equal(t.ratio, RationalFunction2(1)))
            sum = sum + t.coeff;
    return sum;
}

ExpPolyT ExpPolyT::scaled(const RationalFunction2& f) const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_)
        out.push_back({f * t.coeff, t.ratio});
    return ExpPolyT(std::move(out));
}

ExpPolyT ExpPolyT::rescale_z(const Rational& coeff) const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_)
        out.push_back({t.coeff.substitute(Var::Z, coeff, 0, 1), t.ratio.substitute(Var::Z, coeff, 0, 1)});
    return ExpPolyT(std::move(out));
}

RationalFunction2 sum_over_T(const ExpPolyT& f)
{
    const RationalFunction2 a = RationalFunction2::var(Var::A);
    RationalFunction2 sum;
    for (const auto& t : f.terms()) {
        // 1 - a r = (den_r - a num_r) / den_r, which keeps constant term 1.
        RationalFunction2 one_minus = RationalFunction2(1) - a * t.ratio;
        if (one_minus.is_zero())
            throw std::domain_error("sum_over_T: 1 - a*r vanishes identically");
        sum = sum + t.coeff / one_minus;
    }
    return sum;
}

} // namespace localperiod
