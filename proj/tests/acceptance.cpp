// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "localperiod/verify.hpp"

using namespace localperiod;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
};

// Every cell in dims must have `check` passing, or not-applicable only for
// the inadmissible (n = 0, epsilon = -1) cell.
Outcome grid_check(const VerifyReport& report, const std::string& check, int nmin, int nmax,
                   bool allow_na_elsewhere = false)
{
    std::size_t passed = 0;
    for (const auto& cell : report.cells) {
        if (cell.n < nmin || cell.n > nmax)
            continue;
        const CheckResult* r = cell.find(check);
        if (!r)
            return {false, "missing check " + check};
        const bool inadmissible = cell.n == 0 && cell.epsilon == -1;
        if (r->status == CheckStatus::Pass) {
            ++passed;
            continue;
        }
        if (r->status == CheckStatus::NotApplicable && (inadmissible || allow_na_elsewhere))
            continue;
        std::ostringstream os;
        os << "p=" << cell.p << " eps=" << cell.epsilon << " n=" << cell.n << ": " << to_string(r->status);
        if (r->mismatch) {
            for (const auto& [k, v] : r->mismatch->indices)
                os << ' ' << k << '=' << v;
            os << " expected " << r->mismatch->expected << " got " << r->mismatch->got;
        }
        if (!r->detail.empty())
            os << " (" << r->detail << ")";
        return {false, os.str()};
    }
    return {true, std::to_string(passed) + " cells"};
}

Outcome spot_period_value()
{
    auto rep = local_period(0, GoodPlace::symbolic(Rational(5), Sign::Plus));
    Rational v;
    if (!reduce_to_constant(rep.normalized.specialize(Var::A, Rational(1, 25)), v))
        return {false, "normalized period not constant after specialization"};
    if (v != Rational(13, 12))
        return {false, "n=0 q=5 alpha=2 normalized = " + v.to_string()};
    return {true, "n=0 q=5 alpha=2 -> 13/12"};
}

Outcome all_anisotropic_forms()
{
    std::size_t forms = 0;
    for (std::int64_t p : {3, 5, 7}) {
        auto place = GoodPlace::prime(p, Sign::Plus);
        for (std::int64_t c = 1; c < p; ++c) {
            for (int ell = 1; ell <= 3; ++ell)
                if (!aniso_valuation_check({{c}, 0}, ell, place))
                    return {false, "p=" + std::to_string(p) + " form " + std::to_string(c) + "x^2"};
            ++forms;
        }
        for (std::int64_t c1 = 1; c1 < p; ++c1)
            for (std::int64_t c2 = c1; c2 < p; ++c2) {
                ConcreteForm f{{c1, c2}, 0};
                if (!is_anisotropic_diagonal(f, p))
                    continue;
                for (int ell = 1; ell <= 3; ++ell)
                    if (!aniso_valuation_check(f, ell, place))
                        return {false, "p=" + std::to_string(p) + " form " + f.to_string()};
                ++forms;
            }
    }
    return {true, std::to_string(forms) + " forms, l <= 3"};
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        return {};
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

Outcome both(Outcome a, Outcome b)
{
    if (!a.ok)
        return a;
    if (!b.ok)
        return b;
    return {true, a.note + "; " + b.note};
}

} // namespace

int main(int argc, char** argv)
{
    std::string baseline = LOCALPERIOD_BASELINE;
    if (argc > 1)
        baseline = argv[1];

    VerifyOptions opts;
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report = verify(opts);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string first = to_json(report, opts).dump(2) + "\n";

    VerifyOptions again = opts;
    again.jobs = 2;
    const std::string second = to_json(verify(again), opts).dump(2) + "\n";
    const std::string stored = read_file(baseline);

    struct Criterion {
        const char* id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"AC1", "X-series match", [&] { return grid_check(report, "x-series", 0, 6); }},
        {"AC2", "rho=0 match", [&] { return grid_check(report, "rho-zero", 0, 6); }},
        {"AC3", "Pi bivariate match", [&] { return grid_check(report, "pi-table", 0, 6); }},
        {"AC4", "closed-display identities", [&] { return grid_check(report, "pi-display", 0, 6); }},
        {"AC5", "period structure", [&] { return both(grid_check(report, "period", 0, 6), spot_period_value()); }},
        {"AC6", "Weil bridge", [&] { return grid_check(report, "weil-zeta", 1, 6); }},
        {"AC7", "anisotropic valuation lemma",
         [&] { return both(grid_check(report, "aniso-lemma", 0, 6, true), all_anisotropic_forms()); }},
        {"AC8", "constant-term consistency", [&] { return grid_check(report, "constant-term", 0, 5); }},
        {"AC9", "Hecke shift coherence", [&] { return grid_check(report, "hecke-shift", 0, 6); }},
        {"AC10", "determinism and regression",
         [&]() -> Outcome {
             if (first != second)
                 return {false, "two runs differ"};
             if (stored.empty())
                 return {false, "baseline " + baseline + " missing"};
             if (stored != first)
                 return {false, "baseline " + baseline + " differs"};
             return {true, "byte-identical, baseline diff empty"};
         }},
    };

    bool all = true;
    for (const auto& c : criteria) {
        Outcome o = c.run();
        all = all && o.ok;
        std::printf("%-4s %s  %s (%s)\n", c.id, o.ok ? "PASS" : "FAIL", c.title, o.note.c_str());
    }
    std::printf("verify grid: %zu cells, %zu checks, %zu fail, %.1fs\n", report.cells.size(), report.summary.checks,
                report.summary.fail, seconds);
    return all ? 0 : 1;
}
