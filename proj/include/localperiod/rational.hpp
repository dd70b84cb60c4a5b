#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace localperiod {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Division by zero throws
/// std::domain_error instead of trapping inside GMP.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(const Integer& v) : v_(v) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    /// Parses "n", "-n" or "n/d" (decimal). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational l, const Rational& r) { return l += r; }
    friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
    friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
    friend Rational operator/(Rational l, const Rational& r) { return l /= r; }

    friend bool operator==(const Rational& l, const Rational& r) { return l.v_ == r.v_; }
    friend std::strong_ordering operator<=>(const Rational& l, const Rational& r);

    /// Integer power; negative exponents invert (zero base then throws).
    Rational pow(long e) const;
    Rational abs() const;

    /// "n/d" always, including "0/1" and "5/1". Used by structured output.
    std::string to_fraction_string() const;
    /// "n" when integral, "n/d" otherwise.
    std::string to_string() const;

    const mpq_class& raw() const { return v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace localperiod
