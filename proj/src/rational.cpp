#include "localperiod/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace localperiod {

namespace {

Integer parse_integer(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw std::invalid_argument("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        throw std::invalid_argument("malformed integer literal '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw std::invalid_argument("malformed integer literal '" + s + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    return Integer(s, 10);
}

} // namespace

Rational::Rational(const Integer& num, const Integer& den)
{
    if (sgn(den) == 0)
        throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    Integer den = parse_integer(text.substr(slash + 1));
    if (sgn(den) == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash)), den);
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o)
{
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& l, const Rational& r)
{
    int c = cmp(l.v_, r.v_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::pow(long e) const
{
    if (e < 0) {
        if (is_zero())
            throw std::domain_error("zero raised to a negative power");
        return Rational(1) / pow(-e);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::to_fraction_string() const
{
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::to_string() const
{
    if (is_integer())
        return v_.get_num().get_str();
    return to_fraction_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace localperiod
