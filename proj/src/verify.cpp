#include "localperiod/verify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>
#include <tuple>

#include "localperiod/serialize.hpp"

namespace localperiod {

namespace {

using RF = RationalFunction2;

constexpr int kMismatchWindow = 8;

struct BudgetFlag {
    bool hit = false;
};

CheckResult pass(const std::string& name) { return {name, CheckStatus::Pass, std::nullopt, {}}; }

CheckResult not_applicable(const std::string& name, std::string why)
{
    return {name, CheckStatus::NotApplicable, std::nullopt, std::move(why)};
}

CheckResult fail(const std::string& name, Mismatch m, std::string detail = {})
{
    return {name, CheckStatus::Fail, std::move(m), std::move(detail)};
}

CheckResult fail_note(const std::string& name, std::string detail)
{
    return {name, CheckStatus::Fail, std::nullopt, std::move(detail)};
}

// First (a, z) coefficient where two rational functions differ.
CheckResult identity_check(const std::string& name, const RF& expected, const RF& got, const std::string& what)
{
    if (rf_equal(expected, got))
        return pass(name);
    auto se = series_expand(expected, kMismatchWindow, kMismatchWindow);
    auto sg = series_expand(got, kMismatchWindow, kMismatchWindow);
    for (int i = 0; i <= kMismatchWindow; ++i)
        for (int j = 0; j <= kMismatchWindow; ++j)
            if (se.at(i, j) != sg.at(i, j))
                return fail(name, {{{"a", i}, {"z", j}}, se.at(i, j).to_string(), sg.at(i, j).to_string()},
                            what + " differ");
    return fail(name, {{}, expected.to_string(), got.to_string()}, what + " differ beyond the series window");
}

template <typename Body>
CheckResult guarded(const std::string& name, BudgetFlag& flag, Body&& body)
{
    try {
        return body();
    } catch (const BudgetExceeded& e) {
        flag.hit = true;
        return fail_note(name, std::string("budget exceeded: ") + e.what());
    } catch (const std::exception& e) {
        return fail_note(name, std::string("error: ") + e.what());
    }
}

} // namespace

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::NotApplicable:
        return "not-applicable";
    }
    return "?";
}

const CheckResult* CellReport::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

int default_lmax(std::int64_t p, std::uint64_t budget_cells)
{
    switch (p) {
    case 3:
        return 5;
    case 5:
        return 4;
    case 7:
        return 3;
    default:
        break;
    }
    int L = 1;
    auto fits = [&](int l) {
        Integer cells;
        mpz_ui_pow_ui(cells.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(2 * (l + 1)));
        return cells <= Integer(static_cast<unsigned long>(budget_cells));
    };
    while (fits(L + 1))
        ++L;
    return L;
}

const std::vector<std::string>& check_names()
{
    static const std::vector<std::string> names{"x-series",   "rho-zero",    "stationary-part", "pi-table",
                                                "pi-display", "weil-zeta",   "aniso-lemma",     "period",
                                                "hecke-shift", "constant-term", "unit-class"};
    return names;
}

CellReport verify_cell(std::int64_t p, int epsilon, int n, const VerifyOptions& opts)
{
    const Formulas& F = opts.formulas;
    const GoodPlace place = GoodPlace::prime(p, sign_from_int(epsilon));
    const int L = opts.lmax.value_or(default_lmax(p, opts.budget_cells));
    const int tmax = opts.tmax;
    const bool x_defined = !(n == 0 && epsilon == -1);
    const std::string undefined = "X^0 is undefined for epsilon = -1 (k^2 anisotropic)";

    CellReport cell{p, epsilon, n, L, {}};
    BudgetFlag budget;

    std::optional<FormOracle> oracle;
    if (x_defined)
        oracle.emplace(realize_form(make_shape(n, place.epsilon()), place), place, opts.budget_cells);

    auto compare_series = [](const std::string& name, const std::vector<Rational>& expected,
                             const std::vector<Rational>& got, std::vector<std::pair<std::string, long>> prefix,
                             const char* index) -> std::optional<CheckResult> {
        for (std::size_t l = 0; l < expected.size(); ++l)
            if (expected[l] != got[l]) {
                prefix.emplace_back(index, static_cast<long>(l));
                return fail(name, {prefix, expected[l].to_string(), got[l].to_string()});
            }
        return std::nullopt;
    };
    auto z_column = [](const RF& f, int lmax) {
        auto s = series_expand(f, 0, lmax);
        return s.coeffs[0];
    };

    // z-series of X^n(beta; t^2) against X_l(p^{2T}).
    cell.checks.push_back(guarded("x-series", budget, [&]() -> CheckResult {
        if (!x_defined)
            return not_applicable("x-series", undefined);
        ExpPolyT x = F.x_exp_poly(n, place);
        for (int T = 0; T <= tmax; ++T) {
            auto expected = oracle->x_series(RhoSpec::valuation(T), L).coeffs;
            if (auto r = compare_series("x-series", expected, z_column(x.evaluate(static_cast<unsigned>(T)), L),
                                        {{"T", T}}, "l"))
                return *r;
        }
        return pass("x-series");
    }));

    // X^n(beta; 0) against X_l(0).
    cell.checks.push_back(guarded("rho-zero", budget, [&]() -> CheckResult {
        if (!x_defined)
            return not_applicable("rho-zero", undefined);
        auto expected = oracle->x_series(RhoSpec::at_zero(), L).coeffs;
        if (auto r = compare_series("rho-zero", expected, z_column(F.x_at_zero(n, place), L), {}, "l"))
            return *r;
        return pass("rho-zero");
    }));

    // T-independent part of X^n(beta; t^2) against X_l(0).
    cell.checks.push_back(guarded("stationary-part", budget, [&]() -> CheckResult {
        if (!x_defined)
            return not_applicable("stationary-part", undefined);
        auto expected = oracle->x_series(RhoSpec::at_zero(), L).coeffs;
        auto got = z_column(F.x_exp_poly(n, place).stationary_part(), L);
        if (auto r = compare_series("stationary-part", expected, got, {}, "l"))
            return *r;
        return pass("stationary-part");
    }));

    // [a^T z^l] Pi^n against X_l(p^{2T}).
    cell.checks.push_back(guarded("pi-table", budget, [&]() -> CheckResult {
        if (!x_defined)
            return not_applicable("pi-table", undefined);
        auto table = oracle->pi_table(tmax, L);
        auto s = series_expand(F.pi(n, place), tmax, L);
        for (int T = 0; T <= tmax; ++T)
            if (auto r = compare_series("pi-table", table[static_cast<std::size_t>(T)],
                                        s.coeffs[static_cast<std::size_t>(T)], {{"T", T}}, "l"))
                return *r;
        return pass("pi-table");
    }));

    // constructive Pi against the displays and the hyperbolic reduction.
    cell.checks.push_back(guarded("pi-display", budget, [&]() -> CheckResult {
        if (!x_defined)
            return not_applicable("pi-display", undefined);
        RF built = F.pi(n, place);
        auto r = identity_check("pi-display", pi_display(n, place), built, "constructive Pi and display");
        if (r.status != CheckStatus::Pass)
            return r;
        if (n >= 3) {
            int base = n % 2 == 1 ? 1 : 2;
            r = identity_check("pi-display", pi_reduced_from(base, n, place), built,
                               "constructive Pi and reduction from Pi^" + std::to_string(base));
            if (r.status != CheckStatus::Pass)
                return r;
        }
        if (n >= 2 && n % 2 == 0 && epsilon == 1) {
            r = identity_check("pi-display", pi_reduced_from(0, n, place), built,
                               "constructive Pi and reduction from Pi^0");
            if (r.status != CheckStatus::Pass)
                return r;
        }
        return pass("pi-display");
    }));

    // Weil zeta: bridge, display and oracle truncation.
    cell.checks.push_back(guarded("weil-zeta", budget, [&]() -> CheckResult {
        if (!x_defined)
            return not_applicable("weil-zeta", undefined);
        if (n == 0)
            return not_applicable("weil-zeta", "the zero form has no local zeta function");
        RF bridge = F.weil_zeta(n, place);
        auto r = identity_check("weil-zeta", weil_zeta_display(n, place), bridge, "bridge and Weil display");
        if (r.status != CheckStatus::Pass)
            return r;
        auto expected = oracle->weil_zeta(L);
        if (auto m = compare_series("weil-zeta", expected, z_column(bridge, L), {}, "l"))
            return *m;
        return pass("weil-zeta");
    }));

    // valuation lemma for anisotropic diagonal forms.
    cell.checks.push_back(guarded("aniso-lemma", budget, [&]() -> CheckResult {
        if (!x_defined || !is_anisotropic_diagonal(oracle->form(), p))
            return not_applicable("aniso-lemma", "form is not an anisotropic diagonal form");
        for (int l = 1; l <= std::min(3, L); ++l)
            if (!aniso_valuation_check(oracle->form(), l, place))
                return fail("aniso-lemma", {{{"l", l}}, "true", "false"});
        return pass("aniso-lemma");
    }));

    // period: constant ratio and the unadjusted display.
    cell.checks.push_back(guarded("period", budget, [&]() -> CheckResult {
        LocalFactorReport rep = F.local_period(n, place);
        if (!x_defined && !rf_equal(rep.normalized, RF(1)))
            return fail("period", {{}, "1", rep.normalized.to_string()}, "anisotropic period must be 1");
        if (!rep.ratio_is_constant)
            return fail("period", {{}, "constant", rep.constant_ratio.to_string()},
                        "adjusted/normalized depends on a");
        return identity_check("period", period_normalized_display(n, place), rep.normalized,
                              "normalized period and display");
    }));

    // alpha -> alpha + beta0 against the display evaluated at the shifted argument.
    cell.checks.push_back(guarded("hecke-shift", budget, [&]() -> CheckResult {
        LocalFactorReport rep = F.local_period(n, place);
        for (long b0 = 0; b0 <= 2; ++b0) {
            RF direct;
            if (!x_defined)
                direct = zeta_Z({b0, 1, 0}, place);
            else
                direct = pi_display(n, place).substitute(Var::A, q_power(place, b0 - n), 1, 0).specialize(Var::Z, 1);
            auto r = identity_check("hecke-shift", direct, hecke_shift(rep.raw, b0, place),
                                    "shifted period (beta0=" + std::to_string(b0) + ")");
            if (r.status != CheckStatus::Pass)
                return r;
            RF direct_norm = direct / zeta_Z({b0, 1, 0}, place);
            r = identity_check("hecke-shift", direct_norm, hecke_shift(rep.normalized, b0, place),
                               "shifted normalized period (beta0=" + std::to_string(b0) + ")");
            if (r.status != CheckStatus::Pass)
                return r;
        }
        return pass("hecke-shift");
    }));

    // constant term against oracle X^{n+1}_T(0).
    cell.checks.push_back(guarded("constant-term", budget, [&]() -> CheckResult {
        const int deg = opts.constant_term_degree;
        FormOracle up(realize_form(make_shape(n + 1, place.epsilon()), place), place, opts.budget_cells);
        auto x0 = up.x_series(RhoSpec::at_zero(), deg).coeffs;
        const Rational qn = place.q().pow(n + 1);
        std::vector<Rational> expected;
        for (int T = 0; T <= deg; ++T) {
            Rational c = qn.pow(T) * x0[static_cast<std::size_t>(T)];
            if (T > 0)
                c -= qn.pow(T - 1) * x0[static_cast<std::size_t>(T - 1)];
            expected.push_back(c);
        }
        auto s = series_expand(F.constant_term(n, place).factor, deg, 0);
        std::vector<Rational> got;
        for (int T = 0; T <= deg; ++T)
            got.push_back(s.at(T, 0));
        if (auto r = compare_series("constant-term", expected, got, {}, "T"))
            return *r;
        return pass("constant-term");
    }));

    // X_l(u p^{2T}) = X_l(p^{2T}) for unit squares u.
    cell.checks.push_back(guarded("unit-class", budget, [&]() -> CheckResult {
        if (!x_defined)
            return not_applicable("unit-class", undefined);
        for (std::int64_t c = 2; c <= std::min<std::int64_t>(p - 1, 3); ++c) {
            const Integer u(static_cast<long>(c * c));
            for (int T = 0; T <= tmax; ++T) {
                Integer rho = RhoSpec::valuation(T).value(p);
                for (int l = 0; l <= L; ++l) {
                    Rational base = oracle->measure(rho, l);
                    Rational moved = oracle->measure(u * rho, l);
                    if (base != moved)
                        return fail("unit-class", {{{"u", static_cast<long>(c * c)}, {"T", T}, {"l", l}},
                                                   base.to_string(), moved.to_string()});
                }
            }
        }
        return pass("unit-class");
    }));

    return cell;
}

VerifyReport verify(const VerifyOptions& opts)
{
    struct Job {
        std::int64_t p;
        int eps;
        int n;
    };
    std::vector<Job> jobs;
    for (auto p : opts.primes)
        for (auto e : opts.epsilons)
            for (auto n : opts.dims)
                jobs.push_back({p, e, n});
    std::sort(jobs.begin(), jobs.end(), [](const Job& l, const Job& r) {
        return std::tuple(l.p, -l.eps, l.n) < std::tuple(r.p, -r.eps, r.n);
    });
    jobs.erase(std::unique(jobs.begin(), jobs.end(),
                           [](const Job& l, const Job& r) { return l.p == r.p && l.eps == r.eps && l.n == r.n; }),
               jobs.end());

    std::vector<CellReport> cells(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < jobs.size(); i = next++)
            cells[i] = verify_cell(jobs[i].p, jobs[i].eps, jobs[i].n, opts);
    };
    unsigned threads = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(jobs.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    VerifyReport report;
    report.cells = std::move(cells);
    for (const auto& c : report.cells)
        for (const auto& chk : c.checks) {
            ++report.summary.checks;
            switch (chk.status) {
            case CheckStatus::Pass:
                ++report.summary.pass;
                break;
            case CheckStatus::Fail:
                ++report.summary.fail;
                if (chk.detail.rfind("budget exceeded", 0) == 0)
                    report.budget_exceeded = true;
                break;
            case CheckStatus::NotApplicable:
                ++report.summary.not_applicable;
                break;
            }
        }
    return report;
}

nlohmann::json to_json(const VerifyReport& report, const VerifyOptions& opts)
{
    using nlohmann::json;
    json cells = json::array();
    for (const auto& c : report.cells) {
        json checks = json::array();
        for (const auto& chk : c.checks) {
            json j{{"name", chk.name}, {"status", to_string(chk.status)}};
            if (chk.mismatch) {
                json idx = json::object();
                for (const auto& [k, v] : chk.mismatch->indices)
                    idx[k] = v;
                j["mismatch"] = {{"indices", idx}, {"expected", chk.mismatch->expected}, {"got", chk.mismatch->got}};
            }
            if (!chk.detail.empty())
                j["detail"] = chk.detail;
            checks.push_back(std::move(j));
        }
        cells.push_back({{"p", c.p}, {"epsilon", c.epsilon}, {"n", c.n}, {"l_max", c.lmax}, {"checks", checks}});
    }
    json params{{"primes", opts.primes},
                {"epsilons", opts.epsilons},
                {"dims", opts.dims},
                {"t_max", opts.tmax},
                {"constant_term_degree", opts.constant_term_degree},
                {"budget_cells", opts.budget_cells}};
    if (opts.lmax)
        params["l_max"] = *opts.lmax;
    return json{{"schema", "localperiod.verify/1"},
                {"parameters", params},
                {"cells", cells},
                {"summary",
                 {{"cells", report.cells.size()},
                  {"checks", report.summary.checks},
                  {"pass", report.summary.pass},
                  {"fail", report.summary.fail},
                  {"not_applicable", report.summary.not_applicable}}}};
}

std::string to_human(const VerifyReport& report)
{
    std::ostringstream os;
    for (const auto& c : report.cells) {
        std::size_t ok = 0, na = 0, bad = 0;
        for (const auto& chk : c.checks)
            (chk.status == CheckStatus::Pass ? ok : chk.status == CheckStatus::Fail ? bad : na)++;
        os << "p=" << c.p << " eps=" << (c.epsilon > 0 ? "+1" : "-1") << " n=" << c.n << " L=" << c.lmax << ": "
           << ok << " pass, " << bad << " fail, " << na << " n/a\n";
        for (const auto& chk : c.checks) {
            if (chk.status != CheckStatus::Fail)
                continue;
            os << "    FAIL " << chk.name;
            if (chk.mismatch) {
                os << " at";
                for (const auto& [k, v] : chk.mismatch->indices)
                    os << ' ' << k << '=' << v;
                os << ": expected " << chk.mismatch->expected << ", got " << chk.mismatch->got;
            }
            if (!chk.detail.empty())
                os << " (" << chk.detail << ")";
            os << '\n';
        }
    }
    os << "summary: " << report.summary.pass << " pass, " << report.summary.fail << " fail, "
       << report.summary.not_applicable << " not applicable, " << report.cells.size() << " cells\n";
    return os.str();
}

} // namespace localperiod
