#pragma once

#include "localperiod/exp_poly.hpp"
#include "localperiod/local_model.hpp"
#include "localperiod/rational_function.hpp"

namespace localperiod {

// All functions below read q and epsilon from the place. Variables are
// a = q^{-alpha} and z = q^{-beta}; auxiliary quantities w = z/q and
// u = z^2/q are monomials, not independent variables.

/// Z(e) = 1/(1 - q^{-e}). Requires ca, cb >= 0; throws std::domain_error
/// for the zero exponent.
RationalFunction2 zeta_Z(const ExponentForm& e, const GoodPlace& place);

/// L(e, chi) = 1/(1 - epsilon q^{-e}).
RationalFunction2 l_factor(const ExponentForm& e, const GoodPlace& place);

/// Zeta factor of the unramified quadratic extension, Z(e) L(e, chi).
RationalFunction2 quadratic_zeta(const ExponentForm& e, const GoodPlace& place);

/// q^{-c0} a^ca z^cb as a rational function (c0 may be negative).
RationalFunction2 q_monomial(const ExponentForm& e, const GoodPlace& place);

/// Throws std::invalid_argument unless (n, epsilon) is admissible.
void require_admissible(int n, const GoodPlace& place);

/// X^n(beta; t^2) as a function of T = ord t.
ExpPolyT x_exp_poly(int n, const GoodPlace& place);

/// Adds k hyperbolic planes to a base generating function:
/// Z(beta+1)/Z(beta+k+1) * X(beta+k).
ExpPolyT add_hyperbolic_planes(const ExpPolyT& base, int k, const GoodPlace& place);
RationalFunction2 add_hyperbolic_planes(const RationalFunction2& base, int k, const GoodPlace& place);

/// X^n(beta; 0), the summary closed form.
RationalFunction2 x_at_zero(int n, const GoodPlace& place);

/// Pi^n(alpha, beta), built by summing x_exp_poly over T.
RationalFunction2 pi(int n, const GoodPlace& place);

/// Pi^n(alpha, beta) from the product-of-zeta displays (independent route).
RationalFunction2 pi_display(int n, const GoodPlace& place);

/// Pi^n from Pi^base by the hyperbolic reduction, base in {0, 1, 2}.
RationalFunction2 pi_reduced_from(int base, int n, const GoodPlace& place);

struct LocalFactorReport {
    RationalFunction2 raw;            ///< Pi(alpha - n, 0)
    RationalFunction2 normalized;     ///< raw / Z(alpha)
    RationalFunction2 adjusted;       ///< display up to a multiplicative constant
    RationalFunction2 constant_ratio; ///< adjusted / normalized, reduced when constant
    bool ratio_is_constant = false;
};

/// Local period at the place. For n = 0 and epsilon = -1 the period is 1
/// by the anisotropic measure convention (raw is then Z(alpha)).
LocalFactorReport local_period(int n, const GoodPlace& place);

/// Adjusted period display as a function of a.
RationalFunction2 period_adjusted_display(int n, const GoodPlace& place);

/// Normalized period as displayed before dropping constants (keeps Z(1), L(k+1) ...).
RationalFunction2 period_normalized_display(int n, const GoodPlace& place);

/// int_{o^n} |B(x)|^beta dx = (1 - q^beta) X(beta;0) + q^beta. Requires n >= 1.
RationalFunction2 weil_zeta(int n, const GoodPlace& place);

/// Closed display of the same integral.
RationalFunction2 weil_zeta_display(int n, const GoodPlace& place);

/// alpha -> alpha + beta0, i.e. a -> a q^{-beta0}.
RationalFunction2 hecke_shift(const RationalFunction2& f, long beta0, const GoodPlace& place);

struct ConstantTermFactor {
    /// X^{n+1}(alpha - (n+1); 0) / Z(alpha), a function of a only.
    RationalFunction2 factor;
    /// |lambda| is raised to c0 + ca*alpha; here (n+1) - alpha.
    ExponentForm lambda_exponent;
};

ConstantTermFactor constant_term_factor(int n, const GoodPlace& place);

/// q^{-x} for an integer x.
Rational q_power(const GoodPlace& place, long x);

} // namespace localperiod
