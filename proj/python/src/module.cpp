#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "dmu/dirichlet.hpp"
#include "dmu/errors.hpp"
#include "dmu/oracle.hpp"
#include "dmu/projection.hpp"
#include "dmu/sympoly.hpp"

namespace py = pybind11;
using dmu::Complex;

namespace {

std::vector<Complex> to_list(const dmu::CoeffSeq& c) { return {c.coeffs().begin(), c.coeffs().end()}; }

dmu::AtomicMeasure make_measure(const std::vector<Complex>& points, std::optional<std::vector<double>> weights) {
    if (!weights) {
        return dmu::AtomicMeasure::from_points(points);
    }
    if (weights->size() != points.size()) {
        throw dmu::InvalidArgument("weights and points differ in length");
    }
    std::vector<dmu::Atom> atoms;
    for (std::size_t k = 0; k < points.size(); ++k) {
        atoms.push_back({dmu::UnitPoint(points[k]), (*weights)[k]});
    }
    return dmu::AtomicMeasure(std::move(atoms));
}

dmu::AnalyticFn make_function(const std::vector<Complex>& poly, std::optional<Complex> a,
                              std::optional<Complex> rho) {
    if (a.has_value() != rho.has_value()) {
        throw dmu::InvalidArgument("a geometric tail needs both a and rho");
    }
    std::optional<dmu::GeometricTail> tail;
    if (a) {
        tail = dmu::GeometricTail{*a, *rho};
    }
    return dmu::AnalyticFn(dmu::CoeffSeq(poly), tail);
}

}  // namespace

PYBIND11_MODULE(_dmuproj, m) {
    m.doc() = "Closed-form projections onto polynomials in D_mu for atomic measures";

    static py::exception<dmu::Error> error(m, "Error");
    static py::exception<dmu::InvalidArgument> invalid(m, "InvalidArgument", PyExc_ValueError);
    static py::exception<dmu::UnsupportedDegree> unsupported(m, "UnsupportedDegree", error.ptr());
    static py::exception<dmu::ConsistencyError> consistency(m, "ConsistencyError", error.ptr());
    static py::exception<dmu::IllConditioned> ill(m, "IllConditioned", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const dmu::UnsupportedDegree& e) {
            py::set_error(unsupported, e.what());
        } catch (const dmu::InvalidArgument& e) {
            py::set_error(invalid, e.what());
        } catch (const dmu::ConsistencyError& e) {
            py::set_error(consistency, e.what());
        } catch (const dmu::IllConditioned& e) {
            py::set_error(ill, e.what());
        } catch (const dmu::Error& e) {
            py::set_error(error, e.what());
        }
    });

    py::class_<dmu::AtomicMeasure>(m, "AtomicMeasure")
        .def(py::init(&make_measure), py::arg("points"), py::arg("weights") = py::none())
        .def_static("from_angles",
                    [](const std::vector<double>& angles) { return dmu::AtomicMeasure::from_angles(angles); })
        .def_static("roots_of_unity", &dmu::AtomicMeasure::roots_of_unity, py::arg("s"))
        .def_property_readonly("points", &dmu::AtomicMeasure::points)
        .def_property_readonly("weights",
                               [](const dmu::AtomicMeasure& mu) {
                                   std::vector<double> w;
                                   for (const dmu::Atom& a : mu.atoms()) w.push_back(a.weight);
                                   return w;
                               })
        .def("__len__", &dmu::AtomicMeasure::size);

    py::class_<dmu::AnalyticFn>(m, "AnalyticFn")
        .def(py::init(&make_function), py::arg("poly") = std::vector<Complex>{}, py::arg("a") = py::none(),
             py::arg("rho") = py::none())
        .def_property_readonly("poly", [](const dmu::AnalyticFn& f) { return to_list(f.poly()); })
        .def_property_readonly("tail",
                               [](const dmu::AnalyticFn& f) -> std::optional<std::pair<Complex, Complex>> {
                                   if (!f.tail()) return std::nullopt;
                                   return std::pair{f.tail()->a, f.tail()->rho};
                               })
        .def("coefficient", &dmu::AnalyticFn::coefficient, py::arg("k"))
        .def("__call__", [](const dmu::AnalyticFn& f, Complex z) { return dmu::eval_boundary(f, z); });

    py::class_<dmu::ProjectionResult>(m, "ProjectionResult")
        .def_readonly("degree", &dmu::ProjectionResult::n)
        .def_property_readonly("monomial_coefficients",
                               [](const dmu::ProjectionResult& r) { return r.monomial.padded(r.n + 1); })
        .def_readonly("basis_b", &dmu::ProjectionResult::basis_b)
        .def_readonly("basis_c", &dmu::ProjectionResult::basis_c)
        .def_readonly("distance", &dmu::ProjectionResult::distance)
        .def_readonly("boundary_values", &dmu::ProjectionResult::boundary_values);

    m.def("project", &dmu::project, py::arg("f"), py::arg("mu"), py::arg("n"));
    m.def("distance", &dmu::distance, py::arg("f"), py::arg("mu"), py::arg("n"));
    m.def(
        "fast_monomial_coefficients",
        [](const dmu::AnalyticFn& f, const dmu::AtomicMeasure& mu, std::size_t n) {
            return dmu::fast_monomial_coefficients(f, mu, n).padded(n + 1);
        },
        py::arg("f"), py::arg("mu"), py::arg("n"));
    m.def(
        "basis",
        [](const dmu::AtomicMeasure& mu, std::size_t count) {
            std::vector<std::vector<Complex>> out;
            for (const dmu::BasisPoly& p : dmu::basis_polys(mu, count)) out.push_back(to_list(p.coeffs));
            return out;
        },
        py::arg("mu"), py::arg("count"), "Coefficients of p_0..p_count.");
    m.def("inner", &dmu::dmu_inner, py::arg("f"), py::arg("g"), py::arg("mu"));
    m.def("norm", &dmu::dmu_norm, py::arg("f"), py::arg("mu"));

    m.def(
        "oracle_project",
        [](const dmu::AnalyticFn& f, const dmu::AtomicMeasure& mu, std::size_t n) {
            return dmu::oracle_project(f, mu, n).padded(n + 1);
        },
        py::arg("f"), py::arg("mu"), py::arg("n"));
    m.def("oracle_distance", &dmu::oracle_distance, py::arg("f"), py::arg("mu"), py::arg("n"));

    py::class_<dmu::ValidationReport>(m, "ValidationReport")
        .def_readonly("trials", &dmu::ValidationReport::trials)
        .def_readonly("tolerance", &dmu::ValidationReport::tolerance)
        .def_readonly("max_coeff_error", &dmu::ValidationReport::max_coeff_error)
        .def_readonly("max_distance_error", &dmu::ValidationReport::max_distance_error)
        .def_readonly("max_residual_norm_error", &dmu::ValidationReport::max_residual_norm_error)
        .def_readonly("max_fast_path_error", &dmu::ValidationReport::max_fast_path_error)
        .def_property_readonly("failure_seeds",
                               [](const dmu::ValidationReport& r) {
                                   std::vector<std::uint64_t> seeds;
                                   for (const auto& f : r.failures) seeds.push_back(f.seed);
                                   return seeds;
                               })
        .def_property_readonly("passed", [](const dmu::ValidationReport& r) { return r.failures.empty(); });
    m.def("cross_validate", &dmu::cross_validate, py::arg("seed") = 1, py::arg("trials") = 500,
          py::arg("s_max") = 4, py::arg("n_max") = 15, py::arg("tol") = 1e-8,
          py::call_guard<py::gil_scoped_release>());

    m.def(
        "complete_homogeneous",
        [](const std::vector<Complex>& points, std::size_t k) { return dmu::complete_homogeneous(points, k); },
        py::arg("points"), py::arg("max_index"));
    m.def(
        "elementary", [](const std::vector<Complex>& points) { return dmu::elementary(points); },
        py::arg("points"));
}
