#pragma once

#include <vector>

#include "localperiod/rational_function.hpp"

namespace localperiod {

/// A function of the integer T >= 0 of the form sum_i c_i(z) * r_i(z)^T.
///
/// Coefficients and ratios are rational functions of z alone.
class ExpPolyT {
public:
    struct Term {
        RationalFunction2 coeff;
        RationalFunction2 ratio;
    };

    ExpPolyT() = default;
    explicit ExpPolyT(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }

    /// The z-rational function sum_i c_i r_i^T.
    RationalFunction2 evaluate(unsigned T) const;

    /// Sum of the coefficients whose ratio is exactly 1.
    RationalFunction2 stationary_part() const;

    /// Multiplies every coefficient by f (a function of z).
    ExpPolyT scaled(const RationalFunction2& f) const;

    /// Applies z -> coeff * z to every coefficient and ratio.
    ExpPolyT rescale_z(const Rational& coeff) const;

private:
    std::vector<Term> terms_;
};

/// sum_{T>=0} a^T f(T) = sum_i c_i / (1 - a r_i), as a function of (a, z).
RationalFunction2 sum_over_T(const ExpPolyT& f);

} // namespace localperiod
