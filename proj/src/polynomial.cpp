#include "localperiod/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace localperiod {

namespace {

int degree_of(const Polynomial2::Key& k, Var v) { return v == Var::A ? k.first : k.second; }

Polynomial2::Key with_degree(Polynomial2::Key k, Var v, int d)
{
    (v == Var::A ? k.first : k.second) = d;
    return k;
}

} // namespace

Polynomial2::Polynomial2(const Rational& c)
{
    if (!c.is_zero())
        terms_.emplace(Key{0, 0}, c);
}

Polynomial2 Polynomial2::monomial(const Rational& c, int dega, int degz)
{
    Polynomial2 p;
    if (!c.is_zero())
        p.terms_.emplace(Key{dega, degz}, c);
    return p;
}

bool Polynomial2::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

Rational Polynomial2::coefficient(int dega, int degz) const
{
    auto it = terms_.find(Key{dega, degz});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Monomial2> Polynomial2::terms() const
{
    std::vector<Monomial2> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_)
        out.push_back({c, k.first, k.second});
    return out;
}

int Polynomial2::max_degree(Var v) const
{
    int d = 0;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        int e = degree_of(k, v);
        d = first ? e : std::max(d, e);
        first = false;
    }
    return d;
}

int Polynomial2::min_degree(Var v) const
{
    int d = 0;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        int e = degree_of(k, v);
        d = first ? e : std::min(d, e);
        first = false;
    }
    return d;
}

void Polynomial2::add_term(const Key& k, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Polynomial2 Polynomial2::operator-() const
{
    Polynomial2 r = *this;
    for (auto& [k, c] : r.terms_)
        c = -c;
    return r;
}

Polynomial2& Polynomial2::operator+=(const Polynomial2& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

Polynomial2& Polynomial2::operator-=(const Polynomial2& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k, -c);
    return *this;
}

Polynomial2& Polynomial2::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_)
        v *= c;
    return *this;
}

Polynomial2 operator*(const Polynomial2& l, const Polynomial2& r)
{
    Polynomial2 out;
    for (const auto& [kl, cl] : l.terms_)
        for (const auto& [kr, cr] : r.terms_)
            out.add_term({kl.first + kr.first, kl.second + kr.second}, cl * cr);
    return out;
}

Polynomial2 Polynomial2::pow(unsigned e) const
{
    Polynomial2 result(1);
    Polynomial2 base = *this;
    while (e) {
        if (e & 1u)
            result = result * base;
        e >>= 1u;
        if (e)
            base = base * base;
    }
    return result;
}

Polynomial2 Polynomial2::shifted(int da, int dz) const
{
    Polynomial2 out;
    for (const auto& [k, c] : terms_)
        out.terms_.emplace(Key{k.first + da, k.second + dz}, c);
    return out;
}

Rational Polynomial2::evaluate(const Rational& a, const Rational& z) const
{
    Rational sum;
    for (const auto& [k, c] : terms_)
        sum += c * a.pow(k.first) * z.pow(k.second);
    return sum;
}

Polynomial2 Polynomial2::specialize(Var v, const Rational& value) const
{
    Polynomial2 out;
    for (const auto& [k, c] : terms_)
        out.add_term(with_degree(k, v, 0), c * value.pow(degree_of(k, v)));
    return out;
}

Polynomial2 Polynomial2::substitute(Var v, const Rational& coeff, int ia, int iz) const
{
    if (coeff.is_zero())
        throw std::invalid_argument("substitution image must be a nonzero monomial");
    Polynomial2 out;
    for (const auto& [k, c] : terms_) {
        int d = degree_of(k, v);
        Key base = with_degree(k, v, 0);
        out.add_term({base.first + d * ia, base.second + d * iz}, c * coeff.pow(d));
    }
    return out;
}

Polynomial2 Polynomial2::divide_linear(Var v, const Rational& value) const
{
    if (is_zero())
        return {};
    // Slice by powers of v; each slice is a polynomial in the other variable.
    int lo = min_degree(v);
    int hi = max_degree(v);
    if (lo < 0)
        throw std::domain_error("divide_linear requires nonnegative exponents");
    std::vector<Polynomial2> slice(static_cast<std::size_t>(hi + 1));
    for (const auto& [k, c] : terms_)
        slice[static_cast<std::size_t>(degree_of(k, v))].add_term(with_degree(k, v, 0), c);

    // Synthetic division by (v - value), highest power first.
    std::vector<Polynomial2> quot(static_cast<std::size_t>(std::max(hi, 1)));
    Polynomial2 carry;
    for (int j = hi; j >= 1; --j) {
        carry = slice[static_cast<std::size_t>(j)] + carry * value;
        quot[static_cast<std::size_t>(j - 1)] = carry;
    }
    Polynomial2 remainder = slice[0] + carry * value;
    if (!remainder.is_zero())
        throw std::domain_error("polynomial is not divisible by the linear factor");

    Polynomial2 out;
    for (int j = 0; j < hi; ++j)
        for (const auto& [k, c] : quot[static_cast<std::size_t>(j)].terms_)
            out.add_term(with_degree(k, v, j), c);
    return out;
}

std::string Polynomial2::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational mag = c.abs();
        bool bare = k.first == 0 && k.second == 0;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (!mag.is_one() || bare)
            os << mag;
        bool need_star = !mag.is_one();
        auto put = [&](const char* name, int e) {
            if (e == 0)
                return;
            os << (need_star ? "*" : "") << name;
            if (e != 1)
                os << '^' << e;
            need_star = true;
        };
        put("a", k.first);
        put("z", k.second);
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial2& p) { return os << p.to_string(); }

} // namespace localperiod
