#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "localperiod/oracle.hpp"
#include "localperiod/rational.hpp"

namespace localperiod {

enum class OutputFormat { Human, Structured };

/// Process exit codes of run().
enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitInvalidArgument = 2,
    kExitBudgetExceeded = 3,
    kExitBaselineMismatch = 4,
};

struct JobSpec {
    std::string command = "verify";
    std::vector<std::int64_t> p;       ///< single entry except for verify
    std::optional<Rational> q;         ///< defaults to p; a different q disables the oracle
    std::vector<int> eps;              ///< single entry except for verify
    std::vector<int> n;                ///< single entry except for verify
    std::optional<int> lmax;
    std::optional<int> tmax;
    int T = 0;                         ///< x-series: rho = p^{2T}
    bool oracle = false;               ///< x-series / x-zero: add the brute-force series
    std::optional<long> alpha;
    std::optional<Rational> s;         ///< alpha = (n+1) s
    std::optional<long> beta;
    std::optional<long> beta0;
    OutputFormat output = OutputFormat::Human;
    std::uint64_t budget_cells = kDefaultBudgetCells;
    std::optional<std::string> baseline;
    bool update_baseline = false;
    unsigned jobs = 1;
};

const std::vector<std::string>& job_commands();

/// Executes one job, writing the result to out and diagnostics to err.
/// Returns an ExitCode.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

} // namespace localperiod
