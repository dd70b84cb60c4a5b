#include "localperiod/rational_function.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace localperiod {

std::string ExponentForm::to_string() const
{
    std::ostringstream os;
    bool any = false;
    auto put = [&](long c, const char* name) {
        if (c == 0)
            return;
        if (any)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        long m = c < 0 ? -c : c;
        if (*name == '\0')
            os << m;
        else if (m == 1)
            os << name;
        else
            os << m << name;
        any = true;
    };
    put(ca, "alpha");
    put(cb, "beta");
    put(c0, "");
    if (!any)
        os << "0";
    return os.str();
}

RationalFunction2::RationalFunction2(Polynomial2 num, Polynomial2 den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw std::domain_error("rational function with identically zero denominator");
    Rational c = den_.constant_term();
    if (c.is_zero())
        throw std::domain_error("denominator vanishes at the origin: " + den_.to_string());
    if (!c.is_one()) {
        Rational inv = Rational(1) / c;
        num_ *= inv;
        den_ *= inv;
    }
    if (num_.is_zero())
        den_ = Polynomial2(1);
}

RationalFunction2 operator+(const RationalFunction2& f, const RationalFunction2& g)
{
    if (f.den_ == g.den_)
        return {f.num_ + g.num_, f.den_};
    return {f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_};
}

RationalFunction2 operator-(const RationalFunction2& f, const RationalFunction2& g)
{
    if (f.den_ == g.den_)
        return {f.num_ - g.num_, f.den_};
    return {f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_};
}

RationalFunction2 operator*(const RationalFunction2& f, const RationalFunction2& g)
{
    if (f.is_zero() || g.is_zero())
        return {};
    return {f.num_ * g.num_, f.den_ * g.den_};
}

RationalFunction2 operator/(const RationalFunction2& f, const RationalFunction2& g)
{
    if (g.is_zero())
        throw std::domain_error("division by the zero rational function");
    if (f.is_zero())
        return {};
    // g.num may vanish at the origin (e.g. dividing by z); clear a common
    // monomial so the result can be normalized when that is possible.
    Polynomial2 num = f.num_ * g.den_;
    Polynomial2 den = f.den_ * g.num_;
    int sa = std::min(num.min_degree(Var::A), den.min_degree(Var::A));
    int sz = std::min(num.min_degree(Var::Z), den.min_degree(Var::Z));
    return {num.shifted(-sa, -sz), den.shifted(-sa, -sz)};
}

RationalFunction2 RationalFunction2::pow(unsigned e) const
{
    return {num_.pow(e), den_.pow(e)};
}

Rational RationalFunction2::evaluate(const Rational& a, const Rational& z) const
{
    Rational d = den_.evaluate(a, z);
    if (d.is_zero())
        throw std::domain_error("rational function has a pole at the evaluation point");
    return num_.evaluate(a, z) / d;
}

RationalFunction2 RationalFunction2::specialize(Var v, const Rational& value) const
{
    if (num_.is_zero())
        return {};
    Polynomial2 n = num_;
    Polynomial2 d = den_;
    while (!n.is_zero() && n.specialize(v, value).is_zero() && d.specialize(v, value).is_zero()) {
        n = n.divide_linear(v, value);
        d = d.divide_linear(v, value);
    }
    Polynomial2 ds = d.specialize(v, value);
    if (ds.is_zero())
        throw std::domain_error("rational function has a pole along the specialization");
    return {n.specialize(v, value), ds};
}

RationalFunction2 RationalFunction2::substitute(Var v, const Rational& coeff, int ia, int iz) const
{
    Polynomial2 n = num_.substitute(v, coeff, ia, iz);
    Polynomial2 d = den_.substitute(v, coeff, ia, iz);
    if (d.is_zero())
        throw std::domain_error("substitution produced an identically zero denominator");
    int sa = std::min(d.min_degree(Var::A), n.is_zero() ? 0 : n.min_degree(Var::A));
    int sz = std::min(d.min_degree(Var::Z), n.is_zero() ? 0 : n.min_degree(Var::Z));
    sa = std::min(sa, 0);
    sz = std::min(sz, 0);
    return {n.shifted(-sa, -sz), d.shifted(-sa, -sz)};
}

RationalFunction2 RationalFunction2::divide_monomial(int da, int dz) const
{
    if (num_.is_zero())
        return {};
    Polynomial2 n = num_.shifted(-da, -dz);
    if (n.min_degree(Var::A) < 0 || n.min_degree(Var::Z) < 0)
        throw std::domain_error("numerator not divisible by the monomial");
    return {n, den_};
}

bool RationalFunction2::is_constant() const
{
    Rational c;
    return reduce_to_constant(*this, c);
}

std::string RationalFunction2::to_string() const
{
    if (den_.is_constant())
        return "(" + num_.to_string() + ")";
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction2 rf_arith(const RationalFunction2& f, const RationalFunction2& g, ArithOp op)
{
    switch (op) {
    case ArithOp::Add:
        return f + g;
    case ArithOp::Sub:
        return f - g;
    case ArithOp::Mul:
        return f * g;
    case ArithOp::Div:
        return f / g;
    }
    throw std::invalid_argument("unknown arithmetic operation");
}

bool rf_equal(const RationalFunction2& f, const RationalFunction2& g)
{
    if (f.num() == g.num() && f.den() == g.den())
        return true;
    return (f.num() * g.den() - g.num() * f.den()).is_zero();
}

TruncatedSeries2 series_expand(const RationalFunction2& f, int maxdega, int maxdegz)
{
    if (maxdega < 0 || maxdegz < 0)
        throw std::invalid_argument("series orders must be nonnegative");
    TruncatedSeries2 s;
    s.maxdega = maxdega;
    s.maxdegz = maxdegz;
    s.coeffs.assign(static_cast<std::size_t>(maxdega + 1),
                    std::vector<Rational>(static_cast<std::size_t>(maxdegz + 1)));
    auto den_terms = f.den().terms();
    for (int i = 0; i <= maxdega; ++i) {
        for (int j = 0; j <= maxdegz; ++j) {
            Rational c = f.num().coefficient(i, j);
            for (const auto& t : den_terms) {
                if (t.dega == 0 && t.degz == 0)
                    continue;
                if (t.dega > i || t.degz > j)
                    continue;
                c -= t.coeff * s.at(i - t.dega, j - t.degz);
            }
            s.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
        }
    }
    return s;
}

RationalFunction2 monomial_substitute(const RationalFunction2& f, Var v, const Rational& image_coeff,
                                      int image_dega, int image_degz)
{
    return f.substitute(v, image_coeff, image_dega, image_degz);
}

bool reduce_to_constant(const RationalFunction2& f, Rational& out)
{
    Rational c = f.num().constant_term(); // den(0,0) == 1
    if (!rf_equal(f, RationalFunction2(c)))
        return false;
    out = c;
    return true;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction2& f) { return os << f.to_string(); }

} // namespace localperiod
