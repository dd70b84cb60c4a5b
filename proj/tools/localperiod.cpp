#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "localperiod/job.hpp"

using namespace localperiod;

int main(int argc, char** argv)
{
    CLI::App app{"Exact local factors at good places, with brute-force verification"};
    JobSpec job;
    std::string q_text, s_text, out_text = "human";

    app.add_option("--command", job.command, "Quantity to compute")
        ->check(CLI::IsMember(job_commands()))
        ->capture_default_str();
    app.add_option("--p", job.p, "Residue prime(s); verify accepts a list")->delimiter(',');
    app.add_option("--q", q_text, "Residue field size as an exact rational (defaults to p)");
    app.add_option("--eps", job.eps, "Discriminant sign(s), +1 or -1")->delimiter(',');
    app.add_option("--n", job.n, "Dimension(s)")->delimiter(',');
    app.add_option("--l-max", job.lmax, "Highest z-degree (level l)");
    app.add_option("--t-max", job.tmax, "Highest a-degree (ord t)");
    app.add_option("--t", job.T, "ord t for x-series")->capture_default_str();
    app.add_flag("--oracle", job.oracle, "Also print the brute-force series (x-series, x-zero)");
    app.add_option("--alpha", job.alpha, "Evaluate at a = q^-alpha");
    app.add_option("--s", s_text, "Evaluate at alpha = (n+1) s");
    app.add_option("--beta", job.beta, "Evaluate at z = q^-beta");
    app.add_option("--beta0", job.beta0, "Hecke shift alpha -> alpha + beta0 (period)");
    app.add_option("--out", out_text, "Output format")->check(CLI::IsMember({"human", "structured"}))->capture_default_str();
    app.add_option("--budget-cells", job.budget_cells, "Cap on p^(2l) per oracle histogram")->capture_default_str();
    app.add_option("--baseline", job.baseline, "Compare the structured verify report with this file");
    app.add_flag("--update-baseline", job.update_baseline, "Write the report to --baseline instead of comparing");
    app.add_option("--jobs", job.jobs, "Worker threads for verify")->check(CLI::PositiveNumber)->capture_default_str();

    try {
        app.parse(argc, argv);
        if (!q_text.empty())
            job.q = Rational::parse(q_text);
        if (!s_text.empty())
            job.s = Rational::parse(s_text);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidArgument;
    } catch (const std::exception& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kExitInvalidArgument;
    }
    job.output = out_text == "structured" ? OutputFormat::Structured : OutputFormat::Human;

    return run(job, std::cout, std::cerr);
}
