#include "localperiod/job.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "localperiod/closed_forms.hpp"
#include "localperiod/serialize.hpp"
#include "localperiod/verify.hpp"

namespace localperiod {

namespace {

using nlohmann::json;
using RF = RationalFunction2;

struct Context {
    const JobSpec& job;
    GoodPlace place;
    int n;
    int lmax;
    int tmax;
    std::optional<long> alpha;
};

template <typename T>
T single(const std::vector<T>& v, const char* flag, std::optional<T> fallback = std::nullopt)
{
    if (v.empty()) {
        if (fallback)
            return *fallback;
        throw std::invalid_argument(std::string("--") + flag + " is required");
    }
    if (v.size() != 1)
        throw std::invalid_argument(std::string("--") + flag + " takes a single value for this command");
    return v.front();
}

GoodPlace make_place(const JobSpec& job, int eps)
{
    const Sign e = sign_from_int(eps);
    if (job.p.size() > 1)
        throw std::invalid_argument("--p takes a single value for this command");
    if (!job.p.empty()) {
        const std::int64_t p = job.p.front();
        if (!is_odd_prime(p))
            throw std::invalid_argument("--p must be an odd prime, got " + std::to_string(p));
        if (!job.q || *job.q == Rational(static_cast<long>(p)))
            return GoodPlace::prime(p, e);
        return GoodPlace::symbolic(*job.q, e);
    }
    if (job.q)
        return GoodPlace::symbolic(*job.q, e);
    throw std::invalid_argument("--p or --q is required");
}

std::optional<long> resolve_alpha(const JobSpec& job, int n)
{
    if (job.alpha && job.s)
        throw std::invalid_argument("--alpha and --s are mutually exclusive");
    if (job.alpha)
        return job.alpha;
    if (job.s) {
        Rational a = Rational(static_cast<long>(n + 1)) * *job.s;
        if (!a.is_integer())
            throw std::invalid_argument("alpha = (n+1) s = " + a.to_string() +
                                        " is not an integer; q^{-alpha} would not be rational");
        return a.numerator().get_si();
    }
    return std::nullopt;
}

// Numeric value at a = q^{-alpha}, z = q^{-beta}; removable singularities
// are cancelled before substitution.
Rational value_at(const RF& f, const Context& c, bool needs_beta)
{
    RF g = f.specialize(Var::A, q_power(c.place, *c.alpha));
    if (needs_beta)
        g = g.specialize(Var::Z, q_power(c.place, *c.job.beta));
    Rational v;
    if (!reduce_to_constant(g, v))
        throw std::invalid_argument("specialization left a free variable");
    return v;
}

json place_json(const Context& c)
{
    json j{{"q", to_json(c.place.q())}, {"epsilon", to_int(c.place.epsilon())}, {"n", c.n}};
    if (c.place.has_prime())
        j["p"] = c.place.p();
    return j;
}

std::string join(const std::vector<Rational>& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + v[i].to_string();
    return s + "]";
}

std::vector<Rational> z_column(const RF& f, int lmax) { return series_expand(f, 0, lmax).coeffs[0]; }

ConcreteForm oracle_form(const Context& c, int n)
{
    if (!c.place.has_prime())
        throw std::invalid_argument("the oracle needs a prime place (q must equal p)");
    return realize_form(make_shape(n, c.place.epsilon()), c.place);
}

void emit_x_series(const Context& c, json& out, std::ostream& human)
{
    if (c.job.T < 0)
        throw std::invalid_argument("--t must be nonnegative");
    ExpPolyT x = x_exp_poly(c.n, c.place);
    RF at_T = x.evaluate(static_cast<unsigned>(c.job.T));
    auto series = z_column(at_T, c.lmax);
    out["T"] = c.job.T;
    out["function"] = to_json(at_T);
    out["series"] = to_json(series);
    human << "X^" << c.n << "(beta; t^2), ord t = " << c.job.T << "\n  " << at_T.to_string() << "\n  series "
          << join(series) << '\n';
    if (c.job.oracle) {
        auto o = x_series_oracle(oracle_form(c, c.n), RhoSpec::valuation(c.job.T), c.lmax, c.place,
                                 c.job.budget_cells);
        out["oracle"] = to_json(o.coeffs);
        human << "  oracle " << join(o.coeffs) << '\n';
    }
}

void emit_x_zero(const Context& c, json& out, std::ostream& human)
{
    RF f = x_at_zero(c.n, c.place);
    auto series = z_column(f, c.lmax);
    out["function"] = to_json(f);
    out["series"] = to_json(series);
    human << "X^" << c.n << "(beta; 0) = " << f.to_string() << "\n  series " << join(series) << '\n';
    if (c.job.oracle) {
        auto o = x_series_oracle(oracle_form(c, c.n), RhoSpec::at_zero(), c.lmax, c.place, c.job.budget_cells);
        out["oracle"] = to_json(o.coeffs);
        human << "  oracle " << join(o.coeffs) << '\n';
    }
}

void emit_pi(const Context& c, json& out, std::ostream& human)
{
    RF f = pi(c.n, c.place);
    auto table = series_expand(f, c.tmax, c.lmax);
    out["function"] = to_json(f);
    out["series"] = to_json(table);
    human << "Pi^" << c.n << "(alpha, beta) = " << f.to_string() << '\n';
    for (int T = 0; T <= c.tmax; ++T)
        human << "  a^" << T << ": " << join(table.coeffs[static_cast<std::size_t>(T)]) << '\n';
    if (c.alpha && c.job.beta) {
        Rational v = value_at(f, c, true);
        out["value"] = to_json(v);
        human << "  value at alpha=" << *c.alpha << ", beta=" << *c.job.beta << ": " << v.to_string() << '\n';
    }
}

void emit_period(const Context& c, json& out, std::ostream& human)
{
    LocalFactorReport rep = local_period(c.n, c.place);
    if (c.job.beta0) {
        const long b0 = *c.job.beta0;
        rep.raw = hecke_shift(rep.raw, b0, c.place);
        rep.normalized = hecke_shift(rep.normalized, b0, c.place);
        rep.adjusted = hecke_shift(rep.adjusted, b0, c.place);
        out["beta0"] = b0;
        human << "shifted by beta0 = " << b0 << '\n';
    }
    out["period"] = to_json(rep);
    human << "raw        " << rep.raw.to_string() << "\nnormalized " << rep.normalized.to_string()
          << "\nadjusted   " << rep.adjusted.to_string() << "\nadjusted/normalized " << rep.constant_ratio.to_string()
          << (rep.ratio_is_constant ? " (constant)" : " (depends on a)") << '\n';
    if (c.alpha) {
        json values{{"raw", to_json(value_at(rep.raw, c, false))},
                    {"normalized", to_json(value_at(rep.normalized, c, false))},
                    {"adjusted", to_json(value_at(rep.adjusted, c, false))}};
        human << "at alpha=" << *c.alpha << ": raw " << values["raw"].get<std::string>() << ", normalized "
              << value_at(rep.normalized, c, false).to_string() << ", adjusted "
              << value_at(rep.adjusted, c, false).to_string() << '\n';
        out["values"] = std::move(values);
    }
}

void emit_weil(const Context& c, json& out, std::ostream& human)
{
    RF f = weil_zeta(c.n, c.place);
    auto series = z_column(f, c.lmax);
    out["function"] = to_json(f);
    out["series"] = to_json(series);
    human << "int |B|^beta = " << f.to_string() << "\n  series " << join(series) << '\n';
    if (c.job.beta) {
        Rational v = f.evaluate(0, q_power(c.place, *c.job.beta));
        out["value"] = to_json(v);
        human << "  value at beta=" << *c.job.beta << ": " << v.to_string() << '\n';
    }
}

void emit_constant_term(const Context& c, json& out, std::ostream& human)
{
    ConstantTermFactor ct = constant_term_factor(c.n, c.place);
    auto s = series_expand(ct.factor, c.tmax, 0);
    std::vector<Rational> coeffs;
    for (int T = 0; T <= c.tmax; ++T)
        coeffs.push_back(s.at(T, 0));
    out["factor"] = to_json(ct.factor);
    out["lambda_exponent"] = to_json(ct.lambda_exponent);
    out["series"] = to_json(coeffs);
    human << "constant term factor " << ct.factor.to_string() << "\n  |lambda| exponent "
          << ct.lambda_exponent.to_string() << "\n  a-series " << join(coeffs) << '\n';
    if (c.alpha) {
        Rational v = value_at(ct.factor, c, false);
        out["value"] = to_json(v);
        human << "  value at alpha=" << *c.alpha << ": " << v.to_string() << '\n';
    }
}

void emit_table(const Context& c, json& out, std::ostream& human)
{
    auto table = pi_table_oracle(oracle_form(c, c.n), c.tmax, c.lmax, c.place, c.job.budget_cells);
    json rows = json::array();
    human << "X_l(p^{2T}) by brute force\n";
    for (std::size_t T = 0; T < table.size(); ++T) {
        rows.push_back(to_json(table[T]));
        human << "  T=" << T << ": " << join(table[T]) << '\n';
    }
    out["table"] = std::move(rows);
    auto zero = x_series_oracle(oracle_form(c, c.n), RhoSpec::at_zero(), c.lmax, c.place, c.job.budget_cells);
    out["rho_zero"] = to_json(zero.coeffs);
    human << "  rho=0: " << join(zero.coeffs) << '\n';
}

int run_verify(const JobSpec& job, std::ostream& out, std::ostream& err)
{
    VerifyOptions opts;
    if (!job.p.empty())
        opts.primes = job.p;
    if (!job.eps.empty())
        opts.epsilons = job.eps;
    if (!job.n.empty())
        opts.dims = job.n;
    if (job.q)
        throw std::invalid_argument("verify runs at prime places; --q is not accepted");
    for (auto p : opts.primes)
        if (!is_odd_prime(p))
            throw std::invalid_argument("--p must be odd primes, got " + std::to_string(p));
    for (auto e : opts.epsilons)
        sign_from_int(e);
    for (auto n : opts.dims)
        if (n < 0)
            throw std::invalid_argument("--n must be nonnegative");
    if (job.tmax)
        opts.tmax = *job.tmax;
    opts.lmax = job.lmax;
    if (opts.tmax < 0 || (opts.lmax && *opts.lmax < 0))
        throw std::invalid_argument("--t-max and --l-max must be nonnegative");
    opts.budget_cells = job.budget_cells;
    opts.jobs = std::max(1u, job.jobs);

    VerifyReport report = verify(opts);
    const std::string structured = to_json(report, opts).dump(2) + "\n";
    out << (job.output == OutputFormat::Structured ? structured : to_human(report));

    int code = report.ok() ? kExitOk : (report.budget_exceeded ? kExitBudgetExceeded : kExitVerifyFailed);
    if (job.baseline) {
        if (job.update_baseline) {
            std::ofstream f(*job.baseline, std::ios::binary);
            if (!f || !(f << structured))
                throw std::invalid_argument("cannot write baseline " + *job.baseline);
            err << "baseline written to " << *job.baseline << '\n';
        } else {
            std::ifstream f(*job.baseline, std::ios::binary);
            if (!f)
                throw std::invalid_argument("cannot read baseline " + *job.baseline);
            std::stringstream stored;
            stored << f.rdbuf();
            if (stored.str() != structured) {
                err << "structured report differs from baseline " << *job.baseline << '\n';
                if (code == kExitOk)
                    code = kExitBaselineMismatch;
            }
        }
    }
    return code;
}

int run_single(const JobSpec& job, std::ostream& out)
{
    const int eps = single<int>(job.eps, "eps", 1);
    const int n = single<int>(job.n, "n");
    Context c{job, make_place(job, eps), n, job.lmax.value_or(4), job.tmax.value_or(3), resolve_alpha(job, n)};
    if (c.lmax < 0 || c.tmax < 0)
        throw std::invalid_argument("--l-max and --t-max must be nonnegative");

    json result{{"command", job.command}, {"place", place_json(c)}};
    std::ostringstream human;
    if (job.command == "x-series")
        emit_x_series(c, result, human);
    else if (job.command == "x-zero")
        emit_x_zero(c, result, human);
    else if (job.command == "pi")
        emit_pi(c, result, human);
    else if (job.command == "period")
        emit_period(c, result, human);
    else if (job.command == "weil-zeta")
        emit_weil(c, result, human);
    else if (job.command == "constant-term")
        emit_constant_term(c, result, human);
    else if (job.command == "table")
        emit_table(c, result, human);
    else
        throw std::invalid_argument("unknown command '" + job.command + "'");

    if (job.output == OutputFormat::Structured)
        out << result.dump(2) << '\n';
    else
        out << human.str();
    return kExitOk;
}

} // namespace

const std::vector<std::string>& job_commands()
{
    static const std::vector<std::string> commands{"x-series", "x-zero",        "pi",    "period",
                                                   "weil-zeta", "constant-term", "table", "verify"};
    return commands;
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err)
{
    try {
        if (job.command == "verify")
            return run_verify(job, out, err);
        return run_single(job, out);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kExitBudgetExceeded;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kExitInvalidArgument;
    } catch (const std::domain_error& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kExitInvalidArgument;
    }
}

} // namespace localperiod
