#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diracsl/classify.hpp"
#include "diracsl/errors.hpp"
#include "diracsl/inverse.hpp"
#include "diracsl/problem_io.hpp"
#include "diracsl/roots.hpp"
#include "diracsl/shooting.hpp"
#include "diracsl/tridiag.hpp"

namespace py = pybind11;
using namespace diracsl;

namespace {

py::dict hypotheses_dict(const HypothesisReport& h) {
    py::dict margins;
    margins["h0"] = h.h0_margin;
    margins["h"] = h.h_margin;
    margins["h1"] = h.h1_margin;
    py::dict out;
    out["h0"] = h.h0;
    out["h"] = h.h;
    out["h1"] = h.h1;
    out["margins"] = margins;
    return out;
}

py::dict classification_dict(const Classification& c) {
    py::dict out;
    out["classification"] = c.spectrum.all_complex ? "all_complex" : "finite";
    out["eigenvalues"] = c.spectrum.eigenvalues;
    out["hypotheses"] = hypotheses_dict(c.hypotheses);
    out["method"] = c.method_used == SpectrumMethod::tridiag ? "tridiag" : "charpoly";
    out["charpoly"] = c.charpoly.coeffs();
    return out;
}

py::dict validation_dict(const ValidationReport& r) {
    py::dict out;
    out["positivity"] = r.positivity;
    out["min_value"] = r.min_value;
    out["min_location"] = r.min_location;
    out["divergence_at_0"] = r.divergence_at_0;
    out["divergence_at_1"] = r.divergence_at_1;
    out["second_derivative_finite"] = r.second_derivative_finite;
    out["ratio_sup"] = r.ratio_sup;
    out["ratio_ok"] = r.ratio_ok;
    out["band0"] = r.band0;
    out["band1"] = r.band1;
    out["band0_stable"] = r.band0_stable;
    out["band1_stable"] = r.band1_stable;
    out["overall"] = r.overall();
    return out;
}

SpectrumMethod method_from_string(const std::string& m) {
    if (m == "auto") return SpectrumMethod::auto_select;
    if (m == "charpoly") return SpectrumMethod::charpoly;
    if (m == "tridiag") return SpectrumMethod::tridiag;
    throw domain_error("method must be auto, charpoly, or tridiag");
}

}  // namespace

PYBIND11_MODULE(_diracsl, m) {
    m.doc() = "Dirichlet spectra of Sturm-Liouville problems with measure-weighted "
              "eigenvalue terms, and the one-node inverse problem";

    py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<numerical_error>(m, "NumericalError", PyExc_RuntimeError);
    py::register_exception<tridiagonal_unavailable>(m, "TridiagonalUnavailable",
                                                    PyExc_RuntimeError);
    py::register_exception<inconsistency_error>(m, "InconsistencyError", PyExc_RuntimeError);
    py::register_exception<zero_eigenvalue_regime>(m, "ZeroEigenvalueRegime",
                                                   PyExc_RuntimeError);
    py::register_exception<empty_spectrum_signal>(m, "EmptySpectrumSignal", PyExc_RuntimeError);

    py::class_<Tolerances>(m, "Tolerances")
        .def(py::init<>())
        .def_readwrite("zero_det", &Tolerances::zero_det)
        .def_readwrite("root", &Tolerances::root)
        .def_readwrite("dedup", &Tolerances::dedup)
        .def_readwrite("ode_rel", &Tolerances::ode_rel)
        .def_readwrite("ode_abs", &Tolerances::ode_abs);

    py::class_<Potential>(m, "Potential")
        .def_static("zero", &Potential::zero)
        .def_static("constant", &Potential::constant, py::arg("value"))
        .def_static("piecewise_constant", &Potential::piecewise_constant,
                    py::arg("breakpoints"), py::arg("values"))
        .def_static("sampled", &Potential::sampled, py::arg("xs"), py::arg("qs"))
        .def("evaluate", &Potential::evaluate, py::arg("x"))
        .def("l1_norm", &Potential::l1_norm)
        .def("breakpoints", &Potential::breakpoints);

    py::class_<DiracWeight>(m, "DiracWeight")
        .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("nodes"),
             py::arg("masses"))
        .def_readonly("nodes", &DiracWeight::nodes)
        .def_readonly("masses", &DiracWeight::masses);

    py::class_<State>(m, "State")
        .def(py::init([](double x, double y, double dy) { return State{x, y, dy}; }),
             py::arg("x"), py::arg("y"), py::arg("dy"))
        .def_readwrite("x", &State::x)
        .def_readwrite("y", &State::y)
        .def_readwrite("dy", &State::dy);

    py::class_<FundamentalBasis>(m, "FundamentalBasis")
        .def_property_readonly("omega", [](const FundamentalBasis& b) { return b.omega; })
        .def_property_readonly("case_tag", [](const FundamentalBasis& b) {
            return b.case_tag == CaseTag::case_i ? "I" : "II";
        })
        .def("phi", [](const FundamentalBasis& b, double x) {
            const State s = b.phi.at(x);
            return py::make_tuple(s.y, s.dy);
        }, py::arg("x"))
        .def("psi", [](const FundamentalBasis& b, double x) {
            const State s = b.psi.at(x);
            return py::make_tuple(s.y, s.dy);
        }, py::arg("x"))
        .def("wronskian_at", &FundamentalBasis::wronskian_at, py::arg("x"));

    m.def("build_basis", &build_basis, py::arg("q"), py::arg("tol") = Tolerances{});
    m.def("propagate_state", &propagate_state, py::arg("q"), py::arg("s0"),
          py::arg("x_target"), py::arg("tol") = Tolerances{});
    m.def("discriminant", &discriminant, py::arg("basis"), py::arg("xi"), py::arg("eta"));

    m.def("characteristic_polynomial_coeffs",
          [](const Potential& q, const DiracWeight& w, const Tolerances& tol) {
              const FundamentalBasis basis = build_basis(q, tol);
              const RealPolynomial p = characteristic_polynomial(basis, w);
              const RealPolynomial reduced =
                  p.reduced_against(characteristic_magnitude_bounds(basis, w), tol.zero_det);
              py::dict out;
              out["coefficients"] = p.coeffs();
              out["reduced"] = reduced.coeffs();
              out["degenerate"] = reduced.is_zero();
              return out;
          },
          py::arg("q"), py::arg("w"), py::arg("tol") = Tolerances{});

    m.def("spectrum",
          [](const Potential& q, const DiracWeight& w, const Tolerances& tol,
             const std::string& method) {
              const FundamentalBasis basis = build_basis(q, tol);
              return classification_dict(
                  classify_spectrum(basis, w, tol, method_from_string(method)));
          },
          py::arg("q"), py::arg("w"), py::arg("tol") = Tolerances{},
          py::arg("method") = "auto");

    m.def("check_hypotheses",
          [](const Potential& q, const DiracWeight& w, const Tolerances& tol) {
              return hypotheses_dict(check_hypotheses(build_basis(q, tol), w, tol));
          },
          py::arg("q"), py::arg("w"), py::arg("tol") = Tolerances{});

    m.def("eigenfunction_samples",
          [](const Potential& q, const DiracWeight& w, double lambda,
             const std::vector<double>& xs, const Tolerances& tol) {
              const FundamentalBasis basis = build_basis(q, tol);
              const Eigenfunction fn = eigenfunction(basis, w, lambda, tol);
              std::vector<double> out;
              out.reserve(xs.size());
              for (double x : xs) out.push_back(fn.value(x));
              return out;
          },
          py::arg("q"), py::arg("w"), py::arg("lambda"), py::arg("xs"),
          py::arg("tol") = Tolerances{});

    m.def("miss", &miss, py::arg("q"), py::arg("w"), py::arg("lambda"),
          py::arg("tol") = Tolerances{});
    m.def("scan_spectrum", &scan_spectrum, py::arg("q"), py::arg("w"), py::arg("lambda_lo"),
          py::arg("lambda_hi"), py::arg("samples"), py::arg("tol") = Tolerances{});

    m.def("sturm_count",
          [](const std::vector<double>& diag, const std::vector<double>& offdiag, double mu) {
              return sturm_count(SymTridiag{diag, offdiag}, mu);
          },
          py::arg("diag"), py::arg("offdiag"), py::arg("mu"));
    m.def("tridiag_eigenvalues",
          [](const std::vector<double>& diag, const std::vector<double>& offdiag,
             const Tolerances& tol) {
              return tridiag_eigenvalues(SymTridiag{diag, offdiag}, tol);
          },
          py::arg("diag"), py::arg("offdiag"), py::arg("tol") = Tolerances{});

    m.def("forward_lambda",
          [](const Potential& q, double t, const Tolerances& tol) {
              return forward_lambda(q, t, tol);
          },
          py::arg("q"), py::arg("t"), py::arg("tol") = Tolerances{});

    m.def("recover_potential_closed",
          [](const std::function<double(double)>& f, const std::function<double(double)>& df,
             const std::function<double(double)>& d2f, const std::vector<double>& grid,
             bool force) {
              const Potential p =
                  recover_potential(SpectrumLikeFunction::closed(f, df, d2f), grid, force);
              const auto& rep = std::get<SampledPotential>(p.repr());
              return py::make_tuple(rep.xs, rep.qs);
          },
          py::arg("f"), py::arg("df"), py::arg("d2f"), py::arg("grid"),
          py::arg("force") = false);

    m.def("recover_potential_sampled",
          [](const std::vector<double>& ts, const std::vector<double>& lambdas,
             const std::vector<double>& grid, bool force) {
              const Potential p =
                  recover_potential(SpectrumLikeFunction::sampled(ts, lambdas), grid, force);
              const auto& rep = std::get<SampledPotential>(p.repr());
              return py::make_tuple(rep.xs, rep.qs);
          },
          py::arg("ts"), py::arg("lambdas"), py::arg("grid"), py::arg("force") = false);

    m.def("validate_spectrum_like_sampled",
          [](const std::vector<double>& ts, const std::vector<double>& lambdas) {
              return validation_dict(
                  validate_spectrum_like(SpectrumLikeFunction::sampled(ts, lambdas)));
          },
          py::arg("ts"), py::arg("lambdas"));

    m.def("validate_spectrum_like_closed",
          [](const std::function<double(double)>& f, const std::function<double(double)>& df,
             const std::function<double(double)>& d2f) {
              return validation_dict(
                  validate_spectrum_like(SpectrumLikeFunction::closed(f, df, d2f)));
          },
          py::arg("f"), py::arg("df"), py::arg("d2f"));

    m.def("reconstruct_basis_closed",
          [](const std::function<double(double)>& f, const std::function<double(double)>& df,
             const std::function<double(double)>& d2f, double anchor,
             const std::vector<double>& grid) {
              const BasisProfiles prof =
                  reconstruct_basis(SpectrumLikeFunction::closed(f, df, d2f), anchor, grid);
              py::dict out;
              std::vector<double> pv, pd, sv, sd;
              for (const State& s : prof.phi) {
                  pv.push_back(s.y);
                  pd.push_back(s.dy);
              }
              for (const State& s : prof.psi) {
                  sv.push_back(s.y);
                  sd.push_back(s.dy);
              }
              out["xs"] = prof.xs;
              out["phi"] = pv;
              out["dphi"] = pd;
              out["psi"] = sv;
              out["dpsi"] = sd;
              return out;
          },
          py::arg("f"), py::arg("df"), py::arg("d2f"), py::arg("anchor"), py::arg("grid"));

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
