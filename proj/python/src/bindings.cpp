#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mordell/factor.hpp"
#include "mordell/report.hpp"

namespace py = pybind11;
using namespace mordell;

namespace {

py::object to_python(json const& j)
{
    switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<long long>());
    case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
        py::list out;
        for (auto const& x : j)
            out.append(to_python(x));
        return out;
    }
    case json::value_t::object: {
        py::dict out;
        for (auto const& [k, v] : j.items())
            out[py::str(k)] = to_python(v);
        return out;
    }
    default: throw std::invalid_argument("unsupported JSON value");
    }
}

PolyQ poly_from(std::vector<std::string> const& coeffs)
{
    return from_coefficient_strings(coeffs);
}

FieldPtr field_from(std::optional<std::vector<std::string>> const& poly, std::string const& label)
{
    if (!poly)
        return rationals();
    return make_number_field(poly_from(*poly), label);
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Torsion of Mordell curves over number fields";

    py::register_exception<NumberFieldError>(m, "NumberFieldError", PyExc_ValueError);
    py::register_exception<EllipticError>(m, "EllipticError", PyExc_ValueError);

    m.def(
        "torsion",
        [](std::string const& c, std::optional<std::vector<std::string>> const& field, std::string const& label,
           std::optional<std::vector<unsigned long>> const& primes) {
            FieldPtr K = field_from(field, label);
            TorsionOptions opt;
            opt.primes = primes;
            MordellCurve e(K, parse_rational(c));
            return to_python(torsion_report_to_json(compute_torsion(e, K, opt)));
        },
        py::arg("c"), py::arg("field") = py::none(), py::arg("label") = "", py::arg("primes") = py::none(),
        "Torsion report of y^2 = x^3 + c over Q[t]/(field); field is a list of coefficient strings, low degree first.");

    m.def(
        "torsion_long",
        [](std::vector<std::string> const& a, std::optional<std::vector<std::string>> const& field) {
            if (a.size() != 5)
                throw std::invalid_argument("need a1, a2, a3, a4, a6");
            FieldPtr K = field_from(field, "");
            auto r = [&](size_t i) { return NFElement(K, parse_rational(a[i])); };
            auto e = make_curve(CurveModel{r(0), r(1), r(2), r(3), r(4)});
            return to_python(torsion_report_to_json(compute_torsion(e, K)));
        },
        py::arg("a"), py::arg("field") = py::none(), "Torsion report of a long Weierstrass model with j = 0.");

    m.def(
        "classify",
        [](std::string const& shape, unsigned long p) {
            return to_python(classification_to_json(classify(make_degree_form(shape, p))));
        },
        py::arg("shape"), py::arg("p"), "Classification with traces for [K:Q] = 2p or 3p.");

    m.def(
        "orbits",
        [](std::string const& name, uint32_t p) {
            auto g = build_named_subgroup(name, p);
            return to_python(degree_set_to_json(g, orbit_degree_set(g)));
        },
        py::arg("group"), py::arg("p"), "Orbit sizes of a named subgroup of GL2(F_p).");

    m.def(
        "division_polynomial",
        [](std::string const& c, unsigned long n, bool primitive) {
            DivisionPolynomials dp(MordellCurve(rationals(), parse_rational(c)));
            return to_coefficient_strings(primitive ? dp.primitive_rational(n) : dp.get_rational(n));
        },
        py::arg("c"), py::arg("n"), py::arg("primitive") = false,
        "Coefficient strings of the n-th division polynomial of y^2 = x^3 + c over Q.");

    m.def(
        "factor",
        [](std::vector<std::string> const& coeffs) {
            auto fac = factor_poly_q(poly_from(coeffs));
            std::vector<std::pair<std::vector<std::string>, unsigned>> out;
            for (auto const& [h, e] : fac.factors)
                out.emplace_back(to_coefficient_strings(h), e);
            return py::make_tuple(to_string(fac.leading), out);
        },
        py::arg("coeffs"), "Factor a rational polynomial: (leading, [(factor, exponent), ...]).");

    m.def(
        "verify_paper",
        [](std::string const& only) {
            VerifyOptions opt;
            opt.only = only;
            return to_python(report_to_json(verify_paper(opt)));
        },
        py::arg("only") = "", "Run the acceptance suite, optionally restricted to an id prefix.");
}
