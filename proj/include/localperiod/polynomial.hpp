#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "localperiod/rational.hpp"

namespace localperiod {

/// The two formal variables: a = q^{-alpha}, z = q^{-beta}.
enum class Var { A, Z };

struct Monomial2 {
    Rational coeff;
    int dega = 0;
    int degz = 0;
};

/// Sparse bivariate polynomial in (a, z) over the rationals.
///
/// Terms are kept in ascending (dega, degz) order with no zero
/// coefficients; the zero polynomial has no terms. Exponents may be
/// transiently negative while a substitution is being cleared, but every
/// polynomial stored in a RationalFunction2 has nonnegative exponents.
class Polynomial2 {
public:
    using Key = std::pair<int, int>;

    Polynomial2() = default;
    Polynomial2(const Rational& c);

    static Polynomial2 monomial(const Rational& c, int dega, int degz);
    static Polynomial2 var(Var v) { return v == Var::A ? monomial(1, 1, 0) : monomial(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(int dega, int degz) const;
    Rational constant_term() const { return coefficient(0, 0); }
    std::vector<Monomial2> terms() const;
    const std::map<Key, Rational>& raw() const { return terms_; }

    /// Largest / smallest exponent of v over all terms (0 for the zero polynomial).
    int max_degree(Var v) const;
    int min_degree(Var v) const;
    bool contains(Var v) const { return max_degree(v) > 0 || min_degree(v) < 0; }

    Polynomial2 operator-() const;
    Polynomial2& operator+=(const Polynomial2& o);
    Polynomial2& operator-=(const Polynomial2& o);
    Polynomial2& operator*=(const Rational& c);

    friend Polynomial2 operator+(Polynomial2 l, const Polynomial2& r) { return l += r; }
    friend Polynomial2 operator-(Polynomial2 l, const Polynomial2& r) { return l -= r; }
    friend Polynomial2 operator*(const Polynomial2& l, const Polynomial2& r);
    friend Polynomial2 operator*(Polynomial2 l, const Rational& c) { return l *= c; }
    friend bool operator==(const Polynomial2& l, const Polynomial2& r) = default;

    Polynomial2 pow(unsigned e) const;

    /// Multiplies by a^da z^db (negative shifts allowed).
    Polynomial2 shifted(int da, int dz) const;

    Rational evaluate(const Rational& a, const Rational& z) const;

    /// Replaces v by value; the result no longer contains v.
    Polynomial2 specialize(Var v, const Rational& value) const;

    /// Replaces v by coeff * a^ia * z^iz. Exponents of the result may be negative.
    Polynomial2 substitute(Var v, const Rational& coeff, int ia, int iz) const;

    /// Exact quotient by (v - value). Throws std::domain_error when the
    /// division leaves a remainder.
    Polynomial2 divide_linear(Var v, const Rational& value) const;

    std::string to_string() const;

private:
    void add_term(const Key& k, const Rational& c);
    std::map<Key, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial2& p);

} // namespace localperiod
