#include "localperiod/closed_forms.hpp"

#include <stdexcept>
#include <string>

namespace localperiod {

namespace {

using RF = RationalFunction2;

ExponentForm E(long c0, int ca, int cb) { return {c0, ca, cb}; }

RF eps_rf(const GoodPlace& place) { return RF(Rational(to_int(place.epsilon()))); }

// Monomials in z: w = z/q and u = z^2/q.
RF w_of(const GoodPlace& place) { return RF(Polynomial2::monomial(Rational(1) / place.q(), 0, 1)); }
RF u_of(const GoodPlace& place) { return RF(Polynomial2::monomial(Rational(1) / place.q(), 0, 2)); }

} // namespace

Rational q_power(const GoodPlace& place, long x) { return place.q().pow(-x); }

RF q_monomial(const ExponentForm& e, const GoodPlace& place)
{
    if (e.ca < 0 || e.cb < 0)
        throw std::invalid_argument("exponent " + e.to_string() + " has a negative variable coefficient");
    return RF(Polynomial2::monomial(q_power(place, e.c0), e.ca, e.cb));
}

RF zeta_Z(const ExponentForm& e, const GoodPlace& place)
{
    if (e.c0 == 0 && e.ca == 0 && e.cb == 0)
        throw std::domain_error("Z(0) is a pole");
    return RF(1) / (RF(1) - q_monomial(e, place));
}

RF l_factor(const ExponentForm& e, const GoodPlace& place)
{
    if (e.c0 == 0 && e.ca == 0 && e.cb == 0 && place.epsilon() == Sign::Plus)
        throw std::domain_error("L(0, chi) is a pole for split chi");
    return RF(1) / (RF(1) - eps_rf(place) * q_monomial(e, place));
}

RF quadratic_zeta(const ExponentForm& e, const GoodPlace& place) { return zeta_Z(e, place) * l_factor(e, place); }

void require_admissible(int n, const GoodPlace& place)
{
    if (n < 0)
        throw std::invalid_argument("dimension n must be nonnegative");
    if (n == 0 && place.epsilon() == Sign::Minus)
        throw std::invalid_argument("X^0 exists only for epsilon = +1 (k^2 isotropic)");
}

ExpPolyT add_hyperbolic_planes(const ExpPolyT& base, int k, const GoodPlace& place)
{
    if (k == 0)
        return base;
    RF prefactor = zeta_Z(E(1, 0, 1), place) / zeta_Z(E(k + 1, 0, 1), place);
    return base.rescale_z(q_power(place, k)).scaled(prefactor);
}

RF add_hyperbolic_planes(const RF& base, int k, const GoodPlace& place)
{
    if (k == 0)
        return base;
    RF prefactor = zeta_Z(E(1, 0, 1), place) / zeta_Z(E(k + 1, 0, 1), place);
    return prefactor * base.substitute(Var::Z, q_power(place, k), 0, 1);
}

ExpPolyT x_exp_poly(int n, const GoodPlace& place)
{
    require_admissible(n, place);
    const RF one(1);
    const RF z = RF::var(Var::Z);
    const RF eps = eps_rf(place);
    const RF w = w_of(place);
    const RF u = u_of(place);
    const RF inv_q(Rational(1) / place.q());

    switch (n) {
    case 0:
        // (1 - z^{2T+1}) / (1 - z)
        return ExpPolyT({{one / (one - z), one}, {-(z / (one - z)), z * z}});
    case 1: {
        RF lead = (one + w) / (one - u);
        RF tail = lead * (u - eps * w) / (one - eps * w);
        return ExpPolyT({{lead, one}, {-tail, u}});
    }
    case 2: {
        RF c = (one - eps * w * inv_q) / ((one - w) * (one - eps * w));
        return ExpPolyT({{c, one}, {-(eps * w * c), w * w}});
    }
    default: {
        int base = n % 2 == 1 ? 1 : 2;
        return add_hyperbolic_planes(x_exp_poly(base, place), (n - base) / 2, place);
    }
    }
}

RF x_at_zero(int n, const GoodPlace& place)
{
    require_admissible(n, place);
    const RF one(1);
    if (n == 0)
        return one / (one - RF::var(Var::Z));
    const RF w_beta1 = q_monomial(E(1, 0, 1), place); // q^{-beta-1}
    if (n % 2 == 1) {
        RF num = one - q_monomial(E(n + 1, 0, 2), place);
        RF den = (one - w_beta1) * (one - q_monomial(E(n, 0, 2), place));
        return num / den;
    }
    const RF eps = eps_rf(place);
    RF num = one - eps * q_monomial(E(n / 2 + 1, 0, 1), place);
    RF den = (one - w_beta1) * (one - eps * q_monomial(E(n / 2, 0, 1), place));
    return num / den;
}

RF pi(int n, const GoodPlace& place) { return sum_over_T(x_exp_poly(n, place)); }

RF pi_display(int n, const GoodPlace& place)
{
    require_admissible(n, place);
    auto Z = [&](long c0, int ca, int cb) { return zeta_Z(E(c0, ca, cb), place); };
    auto L = [&](long c0, int ca, int cb) { return l_factor(E(c0, ca, cb), place); };
    if (n == 0)
        return Z(0, 1, 0) * Z(0, 1, 1) * Z(0, 1, 2) / Z(0, 2, 2);
    if (n == 1)
        return Z(0, 1, 0) * quadratic_zeta(E(1, 0, 1), place) * Z(1, 1, 2) / (Z(2, 0, 2) * L(1, 1, 1));
    if (n == 2)
        return Z(0, 1, 0) * Z(1, 0, 1) * Z(2, 1, 2) * L(1, 1, 1) / (L(2, 0, 1) * Z(2, 2, 2));
    if (n % 2 == 1) {
        long k = (n - 1) / 2;
        return Z(1, 0, 1) * Z(0, 1, 0) * L(k + 1, 0, 1) * Z(2 * k + 1, 1, 2) / (Z(2 * k + 2, 0, 2) * L(k + 1, 1, 1));
    }
    long k = (n - 2) / 2;
    return Z(1, 0, 1) * Z(0, 1, 0) * Z(2 * k + 2, 1, 2) * L(k + 1, 1, 1) / (L(k + 2, 0, 1) * Z(2 * k + 2, 2, 2));
}

RF pi_reduced_from(int base, int n, const GoodPlace& place)
{
    if (base < 0 || base > 2 || n < base || (n - base) % 2 != 0)
        throw std::invalid_argument("pi_reduced_from: n - base must be a nonnegative even number");
    return add_hyperbolic_planes(pi(base, place), (n - base) / 2, place);
}

RF period_adjusted_display(int n, const GoodPlace& place)
{
    if (n < 0)
        throw std::invalid_argument("dimension n must be nonnegative");
    auto Z = [&](long c0, int ca) { return zeta_Z(E(c0, ca, 0), place); };
    auto L = [&](long c0, int ca) { return l_factor(E(c0, ca, 0), place); };
    if (n % 2 == 1) {
        long k = (n - 1) / 2;
        return Z(-n, 1) / L(-k, 1);
    }
    // n = 2k + 2 (including n = 0 with k = -1): Z(alpha-n) L(alpha-n/2) / Z(2 alpha - n)
    return Z(-n, 1) * L(-(n / 2), 1) / Z(-n, 2);
}

RF period_normalized_display(int n, const GoodPlace& place)
{
    if (n < 0)
        throw std::invalid_argument("dimension n must be nonnegative");
    auto Z = [&](long c0, int ca) { return zeta_Z(E(c0, ca, 0), place); };
    auto L = [&](long c0, int ca) { return l_factor(E(c0, ca, 0), place); };
    if (n == 0) {
        if (place.epsilon() == Sign::Minus)
            return RF(1);
        return Z(0, 1) * Z(0, 1) / Z(0, 2);
    }
    if (n % 2 == 1) {
        long k = (n - 1) / 2;
        return Z(1, 0) * Z(-n, 1) * L(k + 1, 0) / (Z(2 * k + 2, 0) * L(-k, 1));
    }
    long k = (n - 2) / 2;
    return Z(1, 0) * Z(-n, 1) * L(-(k + 1), 1) / (L(k + 2, 0) * Z(-n, 2));
}

LocalFactorReport local_period(int n, const GoodPlace& place)
{
    if (n < 0)
        throw std::invalid_argument("dimension n must be nonnegative");
    LocalFactorReport r;
    const RF z_alpha = zeta_Z(E(0, 1, 0), place);
    if (n == 0 && place.epsilon() == Sign::Minus) {
        // Compact H: the normalized period is 1 by the choice of measures.
        r.normalized = RF(1);
        r.raw = z_alpha;
    } else {
        RF shifted = pi(n, place).substitute(Var::A, place.q().pow(n), 1, 0);
        r.raw = shifted.specialize(Var::Z, Rational(1));
        r.normalized = r.raw / z_alpha;
    }
    r.adjusted = period_adjusted_display(n, place);
    RF ratio = r.adjusted / r.normalized;
    Rational c;
    r.ratio_is_constant = reduce_to_constant(ratio, c);
    r.constant_ratio = r.ratio_is_constant ? RF(c) : ratio;
    return r;
}

RF weil_zeta(int n, const GoodPlace& place)
{
    if (n < 1)
        throw std::invalid_argument("weil_zeta requires n >= 1");
    RF x = x_at_zero(n, place);
    // ((z - 1) X + 1) / z, with X = N/D: ((z - 1) N + D) / (z D).
    Polynomial2 z = Polynomial2::var(Var::Z);
    Polynomial2 num = (z - Polynomial2(1)) * x.num() + x.den();
    return RF(num, x.den()).divide_monomial(0, 1);
}

RF weil_zeta_display(int n, const GoodPlace& place)
{
    if (n < 1)
        throw std::invalid_argument("weil_zeta requires n >= 1");
    const RF one(1);
    const RF eps = eps_rf(place);
    const RF q_inv(q_power(place, 1));
    const RF w = q_monomial(E(1, 0, 1), place);
    if (n % 2 == 1)
        return (one - q_monomial(E(n, 0, 1), place)) * (one - q_inv) /
               ((one - w) * (one - q_monomial(E(n, 0, 2), place)));
    return (one - eps * RF(q_power(place, n / 2))) * (one - q_inv) /
           ((one - w) * (one - eps * q_monomial(E(n / 2, 0, 1), place)));
}

RF hecke_shift(const RF& f, long beta0, const GoodPlace& place)
{
    if (beta0 == 0)
        return f;
    return f.substitute(Var::A, q_power(place, beta0), 1, 0);
}

ConstantTermFactor constant_term_factor(int n, const GoodPlace& place)
{
    if (n < 0)
        throw std::invalid_argument("dimension n must be nonnegative");
    RF x = x_at_zero(n + 1, place);
    RF in_a = x.substitute(Var::Z, place.q().pow(n + 1), 1, 0);
    RF one_minus_a = RF(1) - RF::var(Var::A);
    return {in_a * one_minus_a, ExponentForm{n + 1, -1, 0}};
}

} // namespace localperiod
