// Python bindings. Configs and reports cross the boundary as JSON text; the
// pure-Python layer in magspec/__init__.py converts them to dicts.

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "magspec/analytic.hpp"
#include "magspec/bounds.hpp"
#include "magspec/eigensolve.hpp"
#include "magspec/eigfn.hpp"
#include "magspec/errors.hpp"
#include "magspec/harness.hpp"
#include "magspec/specfun.hpp"

namespace py = pybind11;
using namespace magspec;

namespace {

Spectrum make_spectrum(std::vector<double> values, int d) {
    Spectrum s;
    s.d = d;
    s.values = std::move(values);
    s.degeneracy_flags = degeneracy_flags(s.values);
    return s;
}

std::vector<cplx> as_vector(const py::array_t<cplx, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 1) throw InputError("expected a 1-D array");
    return {a.data(), a.data() + a.size()};
}

py::tuple eigenpairs(const std::string& config_json, const std::string& base_dir) {
    const auto config = harness::config_from_json(config_json, base_dir);
    const auto* grid = std::get_if<harness::GridDomainSpec>(&config.domain);
    if (grid == nullptr) throw InputError("eigenpairs needs a grid domain");
    const auto dom = build_domain(grid->shape, grid->h);
    SolverOptions options;
    options.method = config.solver.method;
    options.max_matvecs = config.solver.max_iter;
    EigenResult res;
    {
        py::gil_scoped_release release;
        res = lowest_eigenpairs(assemble(dom, config.gauge, bind_potential(config.potential, dom)),
                                config.solver.k, config.solver.tol, options);
    }
    const auto k = static_cast<py::ssize_t>(res.pairs.size());
    const auto n = static_cast<py::ssize_t>(dom.size());
    py::array_t<cplx> vectors({k, n});
    auto v = vectors.mutable_unchecked<2>();
    for (py::ssize_t i = 0; i < k; ++i) {
        for (py::ssize_t j = 0; j < n; ++j) v(i, j) = res.pairs[static_cast<std::size_t>(i)].vector[static_cast<std::size_t>(j)];
    }
    return py::make_tuple(res.spectrum.values, vectors, dom.h(), dom.measure());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Eigenvalue inequalities for magnetic Schroedinger operators";

    static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
    py::register_exception<TruncationError>(m, "TruncationError", base.ptr());

    m.attr("SCHEMA_VERSION") = harness::kSchemaVersion;

    m.def("bessel_j", &specfun::bessel_j, py::arg("order"), py::arg("x"));
    m.def("bessel_zero", &specfun::bessel_zero, py::arg("order"), py::arg("m"));
    m.def("unit_ball_volume", &specfun::unit_ball_volume, py::arg("d"));
    m.def("h_constant", &specfun::h_constant, py::arg("d"));
    m.def("chiti_constant", &specfun::chiti_constant, py::arg("d"), py::arg("p"));
    m.def("chiti_constant_closed", &specfun::chiti_constant_closed, py::arg("d"));
    m.def("heat_constant", &specfun::heat_constant, py::arg("d"));
    m.def(
        "constants_json",
        [](int d, const std::vector<double>& ps) {
            return harness::constants_to_json(specfun::constants_table(d, ps));
        },
        py::arg("d"), py::arg("p_list"));

    m.def(
        "box_spectrum",
        [](const std::vector<double>& lengths, int count) {
            return analytic::box_spectrum(lengths, count).values;
        },
        py::arg("lengths"), py::arg("count"));
    m.def(
        "disk_spectrum",
        [](double radius, int count) { return analytic::disk_spectrum(radius, count).values; },
        py::arg("radius"), py::arg("count"));
    m.def(
        "riesz_mean",
        [](std::vector<double> values, double lambda) {
            return bounds::riesz_mean(make_spectrum(std::move(values), 2), lambda);
        },
        py::arg("values"), py::arg("lam"));
    m.def(
        "legendre_transform_riesz",
        [](std::vector<double> values, double p) {
            return bounds::legendre_transform_riesz(make_spectrum(std::move(values), 2), p);
        },
        py::arg("values"), py::arg("p"));

    m.def("eigenpairs", &eigenpairs, py::arg("config_json"), py::arg("base_dir") = ".");
    m.def(
        "chiti_ratio",
        [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& omega, double h,
           double lambda, int d, double p) {
            const auto checks = eigfn::chiti_check(as_vector(omega), h, lambda, d, p,
                                                   bounds::SlackPolicy::discrete(h));
            return checks.front().context.at("ratio");
        },
        py::arg("omega"), py::arg("h"), py::arg("lam"), py::arg("d") = 2, py::arg("p") = 2.0);

    m.def(
        "normalize_config",
        [](const std::string& text, const std::string& base_dir) {
            return harness::config_to_json(harness::config_from_json(text, base_dir));
        },
        py::arg("config_json"), py::arg("base_dir") = ".");
    m.def(
        "compute_spectrum",
        [](const std::string& text, const std::string& base_dir) {
            const auto config = harness::config_from_json(text, base_dir);
            py::gil_scoped_release release;
            return harness::compute_spectrum(config).spectrum.values;
        },
        py::arg("config_json"), py::arg("base_dir") = ".");
    m.def(
        "run_scenario",
        [](const std::string& text, const std::string& base_dir, bool include_timing) {
            const auto config = harness::config_from_json(text, base_dir);
            py::gil_scoped_release release;
            return harness::report_to_json(harness::run_scenario(config), include_timing);
        },
        py::arg("config_json"), py::arg("base_dir") = ".", py::arg("include_timing") = true);
    m.def(
        "convergence_study",
        [](const std::string& text, int levels, const std::string& base_dir) {
            const auto config = harness::config_from_json(text, base_dir);
            py::gil_scoped_release release;
            return harness::convergence_to_json(harness::convergence_study(config, levels));
        },
        py::arg("config_json"), py::arg("levels") = 3, py::arg("base_dir") = ".");
    m.def(
        "exit_code",
        [](const std::string& report_json) {
            return harness::exit_code(harness::report_from_json(report_json));
        },
        py::arg("report_json"));
}
