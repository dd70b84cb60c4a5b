#include "localperiod/local_model.hpp"

#include <sstream>
#include <stdexcept>

namespace localperiod {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t m)
{
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m)
{
    __int128 result = 1;
    __int128 base = mod(b, m);
    while (e > 0) {
        if (e & 1)
            result = result * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

} // namespace

Sign sign_from_int(int e)
{
    if (e == 1)
        return Sign::Plus;
    if (e == -1)
        return Sign::Minus;
    throw std::invalid_argument("epsilon must be +1 or -1, got " + std::to_string(e));
}

bool is_odd_prime(std::int64_t p)
{
    if (p < 3 || p % 2 == 0)
        return false;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

Sign chi(std::int64_t u, std::int64_t p)
{
    if (!is_odd_prime(p))
        throw std::invalid_argument("chi: modulus " + std::to_string(p) + " is not an odd prime");
    if (mod(u, p) == 0)
        throw std::invalid_argument("chi: " + std::to_string(u) + " is not a unit mod " + std::to_string(p));
    return powmod(u, (p - 1) / 2, p) == 1 ? Sign::Plus : Sign::Minus;
}

std::int64_t least_nonresidue(std::int64_t p)
{
    for (std::int64_t u = 2; u < p; ++u)
        if (chi(u, p) == Sign::Minus)
            return u;
    throw std::invalid_argument("no quadratic non-residue mod " + std::to_string(p));
}

GoodPlace GoodPlace::symbolic(const Rational& q, Sign epsilon)
{
    if (q < Rational(3))
        throw std::invalid_argument("residue field size q must be at least 3");
    GoodPlace g;
    g.q_ = q;
    g.epsilon_ = epsilon;
    return g;
}

GoodPlace GoodPlace::prime(std::int64_t p, Sign epsilon, std::optional<std::int64_t> delta)
{
    if (!is_odd_prime(p))
        throw std::invalid_argument("p = " + std::to_string(p) + " is not an odd prime");
    std::int64_t d;
    if (delta) {
        d = *delta;
        if (chi(d, p) != epsilon)
            throw std::invalid_argument("discriminant representative " + std::to_string(d) +
                                        " has the wrong quadratic class for epsilon");
    } else {
        d = epsilon == Sign::Plus ? 1 : least_nonresidue(p);
    }
    GoodPlace g;
    g.q_ = Rational(p);
    g.epsilon_ = epsilon;
    g.p_ = p;
    g.delta_ = d;
    return g;
}

std::int64_t GoodPlace::p() const
{
    if (!p_)
        throw std::logic_error("symbolic place has no residue prime");
    return *p_;
}

std::int64_t GoodPlace::delta_rep() const
{
    if (!delta_)
        throw std::logic_error("symbolic place has no discriminant representative");
    return *delta_;
}

GoodPlace GoodPlace::with_epsilon(Sign e) const
{
    if (p_)
        return prime(*p_, e);
    return symbolic(q_, e);
}

std::string to_string(Kernel k)
{
    switch (k) {
    case Kernel::Empty:
        return "empty";
    case Kernel::Unary:
        return "unary";
    case Kernel::BinaryAnisotropic:
        return "binary-anisotropic";
    case Kernel::BinaryHyperbolic:
        return "binary-hyperbolic";
    }
    return "?";
}

int kernel_dimension(Kernel k)
{
    switch (k) {
    case Kernel::Empty:
        return 0;
    case Kernel::Unary:
        return 1;
    default:
        return 2;
    }
}

FormShape make_shape(int n, Sign epsilon)
{
    if (n < 0)
        throw std::invalid_argument("form dimension must be nonnegative");
    if (n == 0 && epsilon == Sign::Minus)
        throw std::invalid_argument("the zero-dimensional form has trivial discriminant (epsilon = -1 is inadmissible)");
    if (n % 2 == 1)
        return {n, Kernel::Unary, (n - 1) / 2, epsilon};
    if (epsilon == Sign::Plus)
        return {n, Kernel::Empty, n / 2, epsilon};
    return {n, Kernel::BinaryAnisotropic, (n - 2) / 2, epsilon};
}

std::string ConcreteForm::to_string() const
{
    std::ostringstream os;
    int var = 1;
    bool first = true;
    for (auto c : square_terms) {
        os << (first ? "" : " + ") << c << "*x" << var++ << "^2";
        first = false;
    }
    for (int h = 0; h < hyp_terms; ++h) {
        os << (first ? "" : " + ") << "x" << var << "*x" << var + 1;
        var += 2;
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

ConcreteForm realize_form(const FormShape& shape, const GoodPlace& place)
{
    if (!place.has_prime())
        throw std::invalid_argument("realize_form needs a place with a residue prime");
    if (shape.epsilon != place.epsilon())
        throw std::invalid_argument("form shape and place disagree on epsilon");
    if (shape.n != kernel_dimension(shape.kernel) + 2 * shape.hyp_count)
        throw std::invalid_argument("inconsistent form shape");
    const std::int64_t delta = place.delta_rep();
    ConcreteForm f;
    f.hyp_terms = shape.hyp_count;
    switch (shape.kernel) {
    case Kernel::Empty:
        break;
    case Kernel::Unary:
        f.square_terms = {delta};
        break;
    case Kernel::BinaryAnisotropic:
        if (shape.epsilon != Sign::Minus)
            throw std::invalid_argument("anisotropic binary kernel requires epsilon = -1");
        f.square_terms = {1, -delta};
        break;
    case Kernel::BinaryHyperbolic:
        if (shape.epsilon != Sign::Plus)
            throw std::invalid_argument("hyperbolic binary kernel requires epsilon = +1");
        f.hyp_terms += 1;
        break;
    }
    return f;
}

Sign discriminant_sign(const ConcreteForm& form, std::int64_t p)
{
    std::int64_t prod = 1;
    for (auto c : form.square_terms)
        prod = mod(prod * mod(c, p), p);
    int flips = form.variables() / 2 + form.hyp_terms;
    if (flips % 2 == 1)
        prod = mod(-prod, p);
    return chi(prod, p);
}

} // namespace localperiod
