#include "localperiod/oracle.hpp"

#include <algorithm>
#include <string>

namespace localperiod {

namespace {

std::uint64_t ipow(std::uint64_t b, int e)
{
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

Integer to_integer(ValueHistogram::Count c)
{
    // Two 64-bit halves.
    Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(c >> 64)));
    Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(c)));
    return (hi << 64) + lo;
}

std::uint64_t reduce(const Integer& x, std::uint64_t m)
{
    Integer r = x % Integer(static_cast<unsigned long>(m));
    if (sgn(r) < 0)
        r += Integer(static_cast<unsigned long>(m));
    return r.get_ui();
}

std::int64_t mod(std::int64_t x, std::int64_t m)
{
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

int ord_p(std::uint64_t v, std::int64_t p, int cap)
{
    if (v == 0)
        return cap;
    int k = 0;
    while (k < cap && v % static_cast<std::uint64_t>(p) == 0) {
        v /= static_cast<std::uint64_t>(p);
        ++k;
    }
    return k;
}

void check_budget(std::int64_t p, int ell, int variables, std::uint64_t budget)
{
    Integer cells;
    mpz_ui_pow_ui(cells.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(2 * ell));
    if (cells > Integer(static_cast<unsigned long>(budget)))
        throw BudgetExceeded("oracle work p^(2l) = " + cells.get_str() + " exceeds budget of " +
                             std::to_string(budget) + " cells (p=" + std::to_string(p) +
                             ", l=" + std::to_string(ell) + ")");
    Integer mass;
    mpz_ui_pow_ui(mass.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(ell * variables));
    if (mpz_sizeinbase(mass.get_mpz_t(), 2) > 126)
        throw BudgetExceeded("total mass p^(l n) = " + mass.get_str() + " exceeds 128-bit counters");
}

} // namespace

ValueHistogram::ValueHistogram(std::int64_t p, int ell) : p_(p), ell_(ell)
{
    if (!is_odd_prime(p))
        throw std::invalid_argument("oracle requires an odd prime p, got " + std::to_string(p));
    if (ell < 0)
        throw std::invalid_argument("precision l must be nonnegative");
    modulus_ = ipow(static_cast<std::uint64_t>(p), ell);
    counts_.assign(modulus_, 0);
}

ValueHistogram ValueHistogram::point(std::int64_t p, int ell)
{
    ValueHistogram h(p, ell);
    h.counts_[0] = 1;
    return h;
}

ValueHistogram ValueHistogram::square_term(std::int64_t p, int ell, std::int64_t coeff)
{
    ValueHistogram h(p, ell);
    const std::uint64_t m = h.modulus_;
    const auto c = static_cast<std::uint64_t>(mod(coeff, static_cast<std::int64_t>(m)));
    for (std::uint64_t x = 0; x < m; ++x) {
        auto sq = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * x) % m);
        auto v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(sq) * c) % m);
        ++h.counts_[v];
    }
    h.variables_ = 1;
    return h;
}

ValueHistogram ValueHistogram::hyperbolic_plane(std::int64_t p, int ell)
{
    ValueHistogram h(p, ell);
    const std::uint64_t m = h.modulus_;
    // Direct enumeration of all pairs; row x visits x*y by repeated addition.
    for (std::uint64_t x = 0; x < m; ++x) {
        std::uint64_t r = 0;
        for (std::uint64_t y = 0; y < m; ++y) {
            ++h.counts_[r];
            r += x;
            if (r >= m)
                r -= m;
        }
    }
    h.variables_ = 2;
    return h;
}

void ValueHistogram::convolve(const ValueHistogram& other)
{
    if (other.p_ != p_ || other.ell_ != ell_)
        throw std::invalid_argument("convolution of histograms over different rings");
    const std::uint64_t m = modulus_;
    std::vector<std::pair<std::uint64_t, Count>> support;
    for (std::uint64_t j = 0; j < m; ++j)
        if (other.counts_[j] != 0)
            support.emplace_back(j, other.counts_[j]);
    std::vector<Count> out(m, 0);
    for (std::uint64_t i = 0; i < m; ++i) {
        const Count ci = counts_[i];
        if (ci == 0)
            continue;
        for (const auto& [j, cj] : support) {
            std::uint64_t k = i + j;
            if (k >= m)
                k -= m;
            out[k] += ci * cj;
        }
    }
    counts_ = std::move(out);
    variables_ += other.variables_;
}

Integer ValueHistogram::count(std::int64_t residue) const
{
    return to_integer(counts_[static_cast<std::size_t>(mod(residue, static_cast<std::int64_t>(modulus_)))]);
}

Integer ValueHistogram::total() const
{
    Count t = 0;
    for (auto c : counts_)
        t += c;
    return to_integer(t);
}

Rational ValueHistogram::measure(const Integer& rho) const
{
    Integer denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(ell_ * variables_));
    return Rational(to_integer(counts_[reduce(rho, modulus_)]), denom);
}

ValueHistogram value_distribution(const ConcreteForm& form, int ell, const GoodPlace& place,
                                  std::uint64_t budget_cells)
{
    const std::int64_t p = place.p();
    check_budget(p, ell, form.variables(), budget_cells);
    ValueHistogram h = ValueHistogram::point(p, ell);
    for (auto c : form.square_terms) {
        if (mod(c, p) == 0)
            throw std::invalid_argument("square-term coefficient " + std::to_string(c) + " is not a unit");
        h.convolve(ValueHistogram::square_term(p, ell, c));
    }
    if (form.hyp_terms > 0) {
        ValueHistogram plane = ValueHistogram::hyperbolic_plane(p, ell);
        for (int i = 0; i < form.hyp_terms; ++i)
            h.convolve(plane);
    }
    return h;
}

Rational count_measure(const ConcreteForm& form, const Integer& rho, int ell, const GoodPlace& place,
                       std::uint64_t budget_cells)
{
    if (ell == 0)
        return Rational(1);
    return value_distribution(form, ell, place, budget_cells).measure(rho);
}

Integer RhoSpec::value(std::int64_t p) const
{
    if (zero)
        return Integer(0);
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(2 * T));
    return r;
}

FormOracle::FormOracle(ConcreteForm form, GoodPlace place, std::uint64_t budget_cells)
    : form_(std::move(form)), place_(std::move(place)), budget_(budget_cells)
{
    if (!place_.has_prime())
        throw std::invalid_argument("the oracle needs a place with a residue prime");
}

const ValueHistogram& FormOracle::histogram(int ell)
{
    auto it = cache_.find(ell);
    if (it == cache_.end())
        it = cache_.emplace(ell, value_distribution(form_, ell, place_, budget_)).first;
    return it->second;
}

Rational FormOracle::measure(const Integer& rho, int ell)
{
    if (ell == 0)
        return Rational(1);
    return histogram(ell).measure(rho);
}

OracleSeries FormOracle::x_series(RhoSpec rho, int lmax)
{
    OracleSeries s{rho, {}};
    const Integer value = rho.value(place_.p());
    for (int l = 0; l <= lmax; ++l)
        s.coeffs.push_back(measure(value, l));
    return s;
}

std::vector<std::vector<Rational>> FormOracle::pi_table(int tmax, int lmax)
{
    std::vector<std::vector<Rational>> table;
    for (int T = 0; T <= tmax; ++T)
        table.push_back(x_series(RhoSpec::valuation(T), lmax).coeffs);
    return table;
}

std::vector<Rational> FormOracle::weil_zeta(int lmax)
{
    auto x = x_series(RhoSpec::at_zero(), lmax + 1).coeffs;
    std::vector<Rational> out;
    for (int l = 0; l <= lmax; ++l)
        out.push_back(x[static_cast<std::size_t>(l)] - x[static_cast<std::size_t>(l + 1)]);
    return out;
}

OracleSeries x_series_oracle(const ConcreteForm& form, RhoSpec rho, int lmax, const GoodPlace& place,
                             std::uint64_t budget_cells)
{
    return FormOracle(form, place, budget_cells).x_series(rho, lmax);
}

std::vector<std::vector<Rational>> pi_table_oracle(const ConcreteForm& form, int tmax, int lmax,
                                                   const GoodPlace& place, std::uint64_t budget_cells)
{
    return FormOracle(form, place, budget_cells).pi_table(tmax, lmax);
}

std::vector<Rational> weil_zeta_oracle(const ConcreteForm& form, int lmax, const GoodPlace& place,
                                       std::uint64_t budget_cells)
{
    return FormOracle(form, place, budget_cells).weil_zeta(lmax);
}

bool is_anisotropic_diagonal(const ConcreteForm& form, std::int64_t p)
{
    if (form.hyp_terms != 0)
        return false;
    for (auto c : form.square_terms)
        if (mod(c, p) == 0)
            return false;
    if (form.square_terms.size() == 1)
        return true;
    if (form.square_terms.size() == 2)
        return chi(-form.square_terms[0] * form.square_terms[1], p) == Sign::Minus;
    return false;
}

bool aniso_valuation_check(const ConcreteForm& form, int ell, const GoodPlace& place)
{
    const std::int64_t p = place.p();
    if (!is_anisotropic_diagonal(form, p))
        throw std::invalid_argument("aniso_valuation_check: form " + form.to_string() +
                                    " is not an anisotropic diagonal form mod " + std::to_string(p));
    if (ell <= 0)
        return true;
    const std::uint64_t m = ipow(static_cast<std::uint64_t>(p), ell);
    std::vector<std::uint64_t> coeff;
    for (auto c : form.square_terms)
        coeff.push_back(static_cast<std::uint64_t>(mod(c, static_cast<std::int64_t>(m))));

    // Per-coordinate values c_i x^2 mod p^l and their valuations.
    const std::size_t n = coeff.size();
    std::vector<std::vector<std::uint64_t>> value(n, std::vector<std::uint64_t>(m));
    std::vector<std::vector<int>> val_ord(n, std::vector<int>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::uint64_t x = 0; x < m; ++x) {
            auto sq = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * x) % m);
            value[i][x] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(sq) * coeff[i]) % m);
            val_ord[i][x] = ord_p(value[i][x], p, ell);
        }

    std::vector<std::uint64_t> x(n, 0);
    while (true) {
        int least = ell;
        std::uint64_t b = 0;
        for (std::size_t i = 0; i < n; ++i) {
            least = std::min(least, val_ord[i][x[i]]);
            b = (b + value[i][x[i]]) % m;
        }
        if (least < ell && ord_p(b, p, ell) != least)
            return false;
        std::size_t i = 0;
        while (i < n && ++x[i] == m)
            x[i++] = 0;
        if (i == n)
            break;
    }
    return true;
}

} // namespace localperiod
