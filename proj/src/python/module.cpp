#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bringlab/belyi.hpp"
#include "bringlab/certificates.hpp"
#include "bringlab/elliptic.hpp"
#include "bringlab/qexp.hpp"
#include "bringlab/quotient.hpp"

namespace py = pybind11;
using namespace bringlab;

namespace {

// integer coefficients as python ints (arbitrary size via string)
py::object big(const FieldElement& e) {
    py::object pyint = py::module_::import("builtins").attr("int");
    Rational r = e.as_rational();
    if (r.is_integer()) return pyint(py::str(r.num().get_str()));
    py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(py::str(r.str()));
}

py::dict series_dict(const LaurentSeries& s) {
    py::dict d;
    d["valuation"] = s.valuation();
    d["precision"] = s.precision();
    py::dict coeffs;
    for (long e = s.valuation(); e < s.precision(); ++e) {
        FieldElement c = s.coeff(e);
        if (!c.is_zero()) coeffs[py::int_(e)] = big(c);
    }
    d["coeffs"] = coeffs;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact q-expansion and certification kernel for the Bring-curve toolkit";

    m.def("theta_series", [](int r, long prec) { return series_dict(theta_series(r, prec)); },
          py::arg("residue_class"), py::arg("prec"),
          "theta series sum (-q)^((5n+r)^2) truncated at prec");

    m.def("cuspform_basis", [](long prec) {
        SeriesTuple f = cuspform_basis(prec);
        py::dict d;
        for (std::size_t i = 0; i < f.size(); ++i)
            d[py::str("f" + std::to_string(i + 1))] = series_dict(f.at(i));
        return d;
    }, py::arg("prec"), "the four weight-2 level-50 basis expansions");

    m.def("j_series", [](long prec) { return series_dict(j_series(prec)); }, py::arg("prec"));

    m.def("quotient_g_coefficients", []() {
        TClosedForm cf = express_t_in_v();
        py::list out;
        for (int k = 0; k <= cf.g.degree(); ++k) out.append(big(cf.g.coeff(k)));
        return out;
    }, "coefficients of the degree-20 quotient-map numerator g(v)");

    m.def("j_invariant", [](const std::string& path, const std::string& label) {
        WeierstrassCurve e = curve_from_file(path, label);
        return invariants(e).j.str();
    }, py::arg("curves_file"), py::arg("label"));

    m.def("run_certificate", [](const std::string& name, long prec, bool online) {
        RunConfig cfg;
        cfg.precision = prec;
        cfg.online = online;
        auto reports = run_certificates(name, cfg);
        py::list out;
        for (const auto& r : reports) {
            py::dict d;
            d["name"] = r.name;
            d["status"] = CertReport::status_str(r.status);
            d["precision_used"] = r.precision_used;
            d["millis"] = r.millis;
            d["witness"] = py::module_::import("json").attr("loads")(r.witness.dump());
            out.append(d);
        }
        return out;
    }, py::arg("name"), py::arg("prec") = 120, py::arg("online") = false,
       "run a named certificate; returns a list of report dicts");

    m.def("certificate_names", [] { return certificate_names(); });

    m.def("parse_roundtrip", [](const std::string& text, const std::vector<std::string>& vars) {
        VarListPtr v = make_vars(vars);
        return parse_poly(text, v, Field::rationals()).str();
    }, py::arg("text"), py::arg("vars"), "parse a polynomial and print it back");
}
