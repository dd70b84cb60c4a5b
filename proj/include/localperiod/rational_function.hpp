#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "localperiod/polynomial.hpp"
#include "localperiod/rational.hpp"

namespace localperiod {

/// An exponent c0 + ca*alpha + cb*beta; stands for the quantity
/// q^{-(c0 + ca*alpha + cb*beta)} = q^{-c0} a^ca z^cb.
struct ExponentForm {
    long c0 = 0;
    int ca = 0;
    int cb = 0;

    friend bool operator==(const ExponentForm&, const ExponentForm&) = default;
    std::string to_string() const;
};

/// Exact coefficients of a bivariate power series, [i][j] <-> a^i z^j.
struct TruncatedSeries2 {
    int maxdega = 0;
    int maxdegz = 0;
    std::vector<std::vector<Rational>> coeffs;

    const Rational& at(int i, int j) const
    {
        return coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
};

/// num/den with den(0,0) = 1 ("origin-normal form").
///
/// No gcd reduction is performed; two rational functions are equal iff
/// their cross products agree. Every value is expandable as a power series
/// at the origin.
class RationalFunction2 {
public:
    RationalFunction2() = default;
    RationalFunction2(const Rational& c) : num_(c), den_(1) {}
    RationalFunction2(const Polynomial2& p) : num_(p), den_(1) {}
    /// Throws std::domain_error if den is zero or cannot be normalized at the origin.
    RationalFunction2(Polynomial2 num, Polynomial2 den);

    static RationalFunction2 var(Var v) { return RationalFunction2(Polynomial2::var(v)); }

    const Polynomial2& num() const { return num_; }
    const Polynomial2& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool contains(Var v) const { return num_.contains(v) || den_.contains(v); }

    RationalFunction2 operator-() const { return {-num_, den_}; }
    friend RationalFunction2 operator+(const RationalFunction2& f, const RationalFunction2& g);
    friend RationalFunction2 operator-(const RationalFunction2& f, const RationalFunction2& g);
    friend RationalFunction2 operator*(const RationalFunction2& f, const RationalFunction2& g);
    /// Throws std::domain_error when g is the zero function.
    friend RationalFunction2 operator/(const RationalFunction2& f, const RationalFunction2& g);

    RationalFunction2 pow(unsigned e) const;

    /// Value at a numeric point. Throws std::domain_error where den vanishes.
    Rational evaluate(const Rational& a, const Rational& z) const;

    /// Replaces v by a number. Common factors (v - value) of num and den are
    /// cancelled first, so removable singularities at the point are allowed.
    RationalFunction2 specialize(Var v, const Rational& value) const;

    /// Replaces v by coeff * a^ia * z^iz (ia, iz may be negative) and
    /// renormalizes, clearing negative powers from num and den together.
    RationalFunction2 substitute(Var v, const Rational& coeff, int ia, int iz) const;

    /// Divides by a^da z^dz; throws std::domain_error unless the numerator
    /// is divisible by that monomial.
    RationalFunction2 divide_monomial(int da, int dz) const;

    /// Constant value if this function does not depend on a or z.
    bool is_constant() const;

    std::string to_string() const;

private:
    Polynomial2 num_;
    Polynomial2 den_{Rational(1)};
};

/// rf_arith dispatcher.
enum class ArithOp { Add, Sub, Mul, Div };
RationalFunction2 rf_arith(const RationalFunction2& f, const RationalFunction2& g, ArithOp op);

/// f == g as rational functions (cross-multiplication identity).
bool rf_equal(const RationalFunction2& f, const RationalFunction2& g);

/// Exact power-series coefficients up to a^maxdega z^maxdegz, from the
/// recurrence num = den * series.
TruncatedSeries2 series_expand(const RationalFunction2& f, int maxdega, int maxdegz);

RationalFunction2 monomial_substitute(const RationalFunction2& f, Var v, const Rational& image_coeff,
                                      int image_dega, int image_degz);

/// If f is independent of a and z, replaces it by its constant value;
/// returns false (leaving out untouched) otherwise.
bool reduce_to_constant(const RationalFunction2& f, Rational& out);

std::ostream& operator<<(std::ostream& os, const RationalFunction2& f);

} // namespace localperiod
