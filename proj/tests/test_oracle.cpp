#include <doctest.h>

#include "localperiod/oracle.hpp"
#include "support/brute.hpp"

using namespace localperiod;

namespace {

GoodPlace place(std::int64_t p, int eps = 1) { return GoodPlace::prime(p, sign_from_int(eps)); }

std::vector<Integer> counts(const ValueHistogram& h)
{
    std::vector<Integer> out;
    for (std::uint64_t r = 0; r < h.modulus(); ++r)
        out.push_back(h.count(static_cast<std::int64_t>(r)));
    return out;
}

std::vector<Integer> counts(const std::vector<std::int64_t>& v)
{
    std::vector<Integer> out;
    for (auto c : v)
        out.emplace_back(static_cast<long>(c));
    return out;
}

} // namespace

TEST_CASE("value distributions of small forms")
{
    auto sq = value_distribution({{1}, 0}, 1, place(5));
    CHECK(counts(sq) == counts(std::vector<std::int64_t>{1, 2, 0, 0, 2}));

    auto xy = value_distribution({{}, 1}, 1, place(5));
    CHECK(xy.count(0) == 9);
    for (int r = 1; r < 5; ++r)
        CHECK(xy.count(r) == 4);

    auto empty = value_distribution({{}, 0}, 2, place(5));
    CHECK(empty.count(0) == 1);
    for (int r = 1; r < 25; ++r)
        CHECK(empty.count(r) == 0);

    CHECK_THROWS_AS(value_distribution({{5}, 0}, 1, place(5)), std::invalid_argument);
}

TEST_CASE("convolution agrees with direct enumeration")
{
    const std::vector<brute::Form> forms{{{1}, 0},     {{2}, 0},        {{1, 1}, 0},  {{1, -2}, 0}, {{}, 1},
                                         {{3}, 1},     {{1, 2, 3}, 0},  {{-1, 1}, 0}, {{2, 2, 2}, 0}};
    for (std::int64_t p : {3, 5})
        for (const auto& f : forms)
            for (int ell = 1; brute::ipow(p, ell) <= 125 && ell <= 3; ++ell) {
                if (f.variables() > 3)
                    continue;
                ConcreteForm cf{f.squares, f.planes};
                bool units = true;
                for (auto c : f.squares)
                    units = units && c % p != 0;
                if (!units)
                    continue;
                auto h = value_distribution(cf, ell, place(p));
                CHECK(counts(h) == counts(brute::histogram(f, p, ell)));
                CHECK(h.total() == Integer(static_cast<long>(brute::ipow(brute::ipow(p, ell), f.variables()))));
            }
}

TEST_CASE("count_measure")
{
    auto g5m = place(5, -1);
    CHECK(count_measure({{2}, 0}, 1, 1, g5m) == 0);
    CHECK(count_measure({{1}, 0}, 25, 3, place(5)) == Rational(2, 25));
    CHECK(count_measure({{1, 1, 1}, 2}, 17, 0, place(7)) == 1);
}

TEST_CASE("oracle series")
{
    auto g5 = place(5);
    auto x1 = x_series_oracle({{1}, 0}, RhoSpec::valuation(0), 3, g5);
    CHECK(x1.coeffs == std::vector<Rational>{1, Rational(2, 5), Rational(2, 25), Rational(2, 125)});

    auto aniso = x_series_oracle({{1, -2}, 0}, RhoSpec::at_zero(), 1, place(5, -1));
    CHECK(aniso.coeffs[1] == Rational(1, 25));

    auto x0 = x_series_oracle({{}, 0}, RhoSpec::valuation(1), 3, g5);
    CHECK(x0.coeffs == std::vector<Rational>{1, 1, 1, 0});
}

TEST_CASE("pi table")
{
    auto g5 = place(5);
    auto t0 = pi_table_oracle({{}, 0}, 3, 5, g5);
    for (int T = 0; T <= 3; ++T)
        for (int l = 0; l <= 5; ++l)
            CHECK(t0[T][l] == Rational(l <= 2 * T ? 1 : 0));

    auto t1 = pi_table_oracle({{1}, 0}, 1, 3, g5);
    CHECK(t1[1][3] == Rational(2, 25));
    for (const auto& f : std::vector<ConcreteForm>{{{1}, 0}, {{}, 1}, {{2, 1}, 1}})
        CHECK(pi_table_oracle(f, 2, 2, place(3))[0][0] == 1);
}

TEST_CASE("weil oracle")
{
    CHECK(weil_zeta_oracle({{1}, 0}, 0, place(5))[0] == Rational(4, 5));
    CHECK(weil_zeta_oracle({{}, 1}, 0, place(5))[0] == Rational(16, 25));

    brute::Form aniso{{1, -2}, 0};
    auto w = weil_zeta_oracle({{1, -2}, 0}, 2, place(5, -1));
    for (int l = 0; l <= 2; ++l)
        CHECK(w[l] == brute::measure(aniso, 0, 5, l) - brute::measure(aniso, 0, 5, l + 1));
}

TEST_CASE("unit-class independence")
{
    FormOracle o({{1, -2}, 0}, place(5, -1));
    for (int T = 0; T <= 1; ++T)
        for (int l = 0; l <= 3; ++l) {
            Integer rho = RhoSpec::valuation(T).value(5);
            CHECK(o.measure(rho, l) == o.measure(rho * 2, l));
            CHECK(o.measure(rho, l) == o.measure(rho * 3, l));
        }
}

TEST_CASE("anisotropic valuation lemma")
{
    CHECK(aniso_valuation_check({{2}, 0}, 3, place(5, -1)));
    CHECK(aniso_valuation_check({{1, -2}, 0}, 3, place(5, -1)));
    CHECK(is_anisotropic_diagonal({{1, -2}, 0}, 5));
    CHECK_FALSE(is_anisotropic_diagonal({{1, -1}, 0}, 5));
    CHECK_THROWS_AS(aniso_valuation_check({{1, -1}, 0}, 2, place(5)), std::invalid_argument);
}

TEST_CASE("budget guard")
{
    CHECK_THROWS_AS(value_distribution({{1}, 0}, 5, place(7)), BudgetExceeded);
    CHECK_THROWS_AS(value_distribution({{1}, 0}, 2, place(5), 100), BudgetExceeded);
    CHECK_NOTHROW(value_distribution({{1}, 0}, 2, place(5), 625));
    std::vector<std::int64_t> many(60, 1);
    CHECK_THROWS_AS(value_distribution({many, 0}, 2, place(7)), BudgetExceeded);
}
