#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "localperiod/closed_forms.hpp"
#include "localperiod/oracle.hpp"

namespace localperiod {

/// The closed-form operations exercised by verify. Tests replace single
/// members to check that a corrupted formula is caught.
struct Formulas {
    std::function<ExpPolyT(int, const GoodPlace&)> x_exp_poly = [](int n, const GoodPlace& g) {
        return localperiod::x_exp_poly(n, g);
    };
    std::function<RationalFunction2(int, const GoodPlace&)> x_at_zero = [](int n, const GoodPlace& g) {
        return localperiod::x_at_zero(n, g);
    };
    std::function<RationalFunction2(int, const GoodPlace&)> pi = [](int n, const GoodPlace& g) {
        return localperiod::pi(n, g);
    };
    std::function<RationalFunction2(int, const GoodPlace&)> weil_zeta = [](int n, const GoodPlace& g) {
        return localperiod::weil_zeta(n, g);
    };
    std::function<LocalFactorReport(int, const GoodPlace&)> local_period = [](int n, const GoodPlace& g) {
        return localperiod::local_period(n, g);
    };
    std::function<ConstantTermFactor(int, const GoodPlace&)> constant_term = [](int n, const GoodPlace& g) {
        return localperiod::constant_term_factor(n, g);
    };
};

enum class CheckStatus { Pass, Fail, NotApplicable };
std::string to_string(CheckStatus s);

struct Mismatch {
    std::vector<std::pair<std::string, long>> indices;
    std::string expected;
    std::string got;
};

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::optional<Mismatch> mismatch;
    std::string detail; ///< reason for not-applicable, or failure note
};

struct CellReport {
    std::int64_t p = 3;
    int epsilon = 1;
    int n = 0;
    int lmax = 0;
    std::vector<CheckResult> checks;

    const CheckResult* find(const std::string& name) const;
};

struct VerifySummary {
    std::size_t checks = 0;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t not_applicable = 0;
};

struct VerifyReport {
    std::vector<CellReport> cells; ///< sorted by (p, -epsilon, n)
    VerifySummary summary;
    bool budget_exceeded = false;

    bool ok() const { return summary.fail == 0; }
};

struct VerifyOptions {
    std::vector<std::int64_t> primes{3, 5, 7};
    std::vector<int> epsilons{1, -1};
    std::vector<int> dims{0, 1, 2, 3, 4, 5, 6};
    int tmax = 3;
    /// Per-prime z-precision; default_lmax when absent.
    std::optional<int> lmax;
    /// a-degree checked by the constant-term check.
    int constant_term_degree = 3;
    std::uint64_t budget_cells = kDefaultBudgetCells;
    unsigned jobs = 1;
    Formulas formulas;
};

/// Precision used by default: L(3) = 5, L(5) = 4, L(7) = 3, and for other
/// primes the largest L with p^{2(L+1)} within the budget.
int default_lmax(std::int64_t p, std::uint64_t budget_cells = kDefaultBudgetCells);

/// Names of the checks run per cell, in report order.
const std::vector<std::string>& check_names();

CellReport verify_cell(std::int64_t p, int epsilon, int n, const VerifyOptions& opts);

/// Runs every cell of the grid (optionally on several threads).
/// Inadmissible cells are reported with not-applicable checks.
VerifyReport verify(const VerifyOptions& opts);

nlohmann::json to_json(const VerifyReport& report, const VerifyOptions& opts);
std::string to_human(const VerifyReport& report);

} // namespace localperiod
