#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "localperiod/closed_forms.hpp"
#include "localperiod/oracle.hpp"
#include "localperiod/serialize.hpp"
#include "localperiod/verify.hpp"

namespace py = pybind11;
using namespace localperiod;
using RF = RationalFunction2;

namespace {

py::object to_fraction(const Rational& r)
{
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object make_int = py::module_::import("builtins").attr("int");
    return fraction(make_int(r.numerator().get_str()), make_int(r.denominator().get_str()));
}

Rational from_python(const py::handle& h) { return Rational::parse(py::str(h).cast<std::string>()); }

py::object from_json(const nlohmann::json& j)
{
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

py::list series_list(const std::vector<Rational>& v)
{
    py::list out;
    for (const auto& c : v)
        out.append(to_fraction(c));
    return out;
}

GoodPlace make_place(std::optional<std::int64_t> p, const py::object& q, int eps)
{
    const Sign e = sign_from_int(eps);
    if (p && (q.is_none() || from_python(q) == Rational(static_cast<long>(*p))))
        return GoodPlace::prime(*p, e);
    if (q.is_none())
        throw std::invalid_argument("either p or q is required");
    return GoodPlace::symbolic(from_python(q), e);
}

ConcreteForm model_form(int n, const GoodPlace& place) { return realize_form(make_shape(n, place.epsilon()), place); }

RhoSpec rho_from(std::optional<int> T) { return T ? RhoSpec::valuation(*T) : RhoSpec::at_zero(); }

} // namespace

PYBIND11_MODULE(_localperiod, m)
{
    m.doc() = "Exact local factors at good places and brute-force oracles";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<GoodPlace>(m, "Place")
        .def(py::init([](std::optional<std::int64_t> p, const py::object& q, int eps) { return make_place(p, q, eps); }),
             py::arg("p") = py::none(), py::arg("q") = py::none(), py::arg("eps") = 1)
        .def_property_readonly("q", [](const GoodPlace& g) { return to_fraction(g.q()); })
        .def_property_readonly("epsilon", [](const GoodPlace& g) { return to_int(g.epsilon()); })
        .def_property_readonly("p", [](const GoodPlace& g) -> py::object {
            return g.has_prime() ? py::object(py::int_(g.p())) : py::none();
        })
        .def("__repr__", [](const GoodPlace& g) {
            std::string s = "Place(q=" + g.q().to_string() + ", eps=" + std::to_string(to_int(g.epsilon()));
            if (g.has_prime())
                s += ", p=" + std::to_string(g.p());
            return s + ")";
        });

    py::class_<RF>(m, "RationalFunction")
        .def("series",
             [](const RF& f, int maxdega, int maxdegz) {
                 auto s = series_expand(f, maxdega, maxdegz);
                 py::list rows;
                 for (const auto& row : s.coeffs)
                     rows.append(series_list(row));
                 return rows;
             },
             py::arg("maxdega"), py::arg("maxdegz"))
        .def("evaluate", [](const RF& f, const py::object& a, const py::object& z) {
            Rational v;
            RF g = f.specialize(Var::A, from_python(a)).specialize(Var::Z, from_python(z));
            if (!reduce_to_constant(g, v))
                throw std::domain_error("evaluation did not reduce to a constant");
            return to_fraction(v);
        }, py::arg("a") = 0, py::arg("z") = 0)
        .def("to_dict", [](const RF& f) { return from_json(to_json(f)); })
        .def("is_constant", &RF::is_constant)
        .def("__eq__", [](const RF& f, const RF& g) { return rf_equal(f, g); })
        .def("__str__", &RF::to_string)
        .def("__repr__", [](const RF& f) { return "RationalFunction(" + f.to_string() + ")"; });

    m.def("x_series", [](int n, int T, const GoodPlace& g) { return x_exp_poly(n, g).evaluate(static_cast<unsigned>(T)); },
          py::arg("n"), py::arg("T"), py::arg("place"), "X^n(beta; t^2) at ord t = T, as a function of z");
    m.def("x_at_zero", &x_at_zero, py::arg("n"), py::arg("place"));
    m.def("pi", &pi, py::arg("n"), py::arg("place"));
    m.def("pi_display", &pi_display, py::arg("n"), py::arg("place"));
    m.def("weil_zeta", &weil_zeta, py::arg("n"), py::arg("place"));
    m.def("weil_zeta_display", &weil_zeta_display, py::arg("n"), py::arg("place"));
    m.def("hecke_shift", &hecke_shift, py::arg("f"), py::arg("beta0"), py::arg("place"));
    m.def("local_period", [](int n, const GoodPlace& g) {
        auto r = local_period(n, g);
        py::dict d;
        d["raw"] = r.raw;
        d["normalized"] = r.normalized;
        d["adjusted"] = r.adjusted;
        d["constant_ratio"] = r.constant_ratio;
        d["ratio_is_constant"] = r.ratio_is_constant;
        return d;
    }, py::arg("n"), py::arg("place"));
    m.def("constant_term_factor", [](int n, const GoodPlace& g) {
        auto c = constant_term_factor(n, g);
        return py::make_tuple(c.factor, py::make_tuple(c.lambda_exponent.c0, c.lambda_exponent.ca, c.lambda_exponent.cb));
    }, py::arg("n"), py::arg("place"));

    m.def("model_form", [](int n, const GoodPlace& g) {
        auto f = model_form(n, g);
        return py::make_tuple(f.square_terms, f.hyp_terms);
    }, py::arg("n"), py::arg("place"));
    m.def("x_series_oracle",
          [](int n, const GoodPlace& g, int lmax, std::optional<int> T, std::uint64_t budget) {
              return series_list(x_series_oracle(model_form(n, g), rho_from(T), lmax, g, budget).coeffs);
          },
          py::arg("n"), py::arg("place"), py::arg("lmax"), py::arg("T") = py::none(),
          py::arg("budget_cells") = kDefaultBudgetCells, "X_l(p^{2T}) (or X_l(0) when T is None) by enumeration");
    m.def("pi_table_oracle",
          [](int n, const GoodPlace& g, int tmax, int lmax, std::uint64_t budget) {
              py::list rows;
              for (const auto& row : pi_table_oracle(model_form(n, g), tmax, lmax, g, budget))
                  rows.append(series_list(row));
              return rows;
          },
          py::arg("n"), py::arg("place"), py::arg("tmax"), py::arg("lmax"), py::arg("budget_cells") = kDefaultBudgetCells);
    m.def("count_measure",
          [](const std::vector<std::int64_t>& squares, int hyp, const py::object& rho, int ell, const GoodPlace& g) {
              Rational r = from_python(rho);
              if (!r.is_integer())
                  throw std::invalid_argument("rho must be an integer");
              return to_fraction(count_measure({squares, hyp}, r.numerator(), ell, g));
          },
          py::arg("square_terms"), py::arg("hyp_terms"), py::arg("rho"), py::arg("ell"), py::arg("place"));

    m.def("verify",
          [](std::vector<std::int64_t> primes, std::vector<int> epsilons, std::vector<int> dims, int tmax,
             std::optional<int> lmax, std::uint64_t budget, unsigned jobs) {
              VerifyOptions o;
              o.primes = std::move(primes);
              o.epsilons = std::move(epsilons);
              o.dims = std::move(dims);
              o.tmax = tmax;
              o.lmax = lmax;
              o.budget_cells = budget;
              o.jobs = jobs;
              VerifyReport r;
              {
                  py::gil_scoped_release release;
                  r = verify(o);
              }
              return from_json(to_json(r, o));
          },
          py::arg("primes") = std::vector<std::int64_t>{3, 5, 7}, py::arg("epsilons") = std::vector<int>{1, -1},
          py::arg("dims") = std::vector<int>{0, 1, 2, 3, 4, 5, 6}, py::arg("tmax") = 3, py::arg("lmax") = py::none(),
          py::arg("budget_cells") = kDefaultBudgetCells, py::arg("jobs") = 1u,
          "Runs the oracle-vs-formula suite; returns the structured report as a dict");
}
