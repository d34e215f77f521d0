//---------------------------------------------------------------------------//
// Copyright the cylsolid contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file _core.cpp
//! Python bindings.
//---------------------------------------------------------------------------//
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cylsolid/analytic.hpp"
#include "cylsolid/errors.hpp"
#include "cylsolid/oracle.hpp"
#include "cylsolid/sweep.hpp"

namespace py = pybind11;
using namespace cylsolid;

namespace
{
McConfig mc_config(std::uint64_t samples, std::uint64_t seed)
{
    McConfig cfg;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.chunks = std::min<std::uint64_t>(cfg.chunks, samples);
    return cfg;
}

QuadConfig quad_config(double tol)
{
    QuadConfig cfg;
    cfg.abs_tol = tol;
    return cfg;
}
}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Solid angles of cylinders and discs seen from a cosine source";

    py::register_exception<InvalidGeometry>(m, "InvalidGeometry", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InvalidSweep>(m, "InvalidSweep", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

    py::class_<SolidAngleResult>(m, "SolidAngleResult")
        .def_readonly("value", &SolidAngleResult::value)
        .def_readonly("std_error", &SolidAngleResult::std_error)
        .def_property_readonly("method",
                               [](SolidAngleResult const& r) {
                                   return std::string(to_string(r.method));
                               })
        .def("__float__", [](SolidAngleResult const& r) { return r.value; })
        .def("__repr__", [](SolidAngleResult const& r) {
            return "SolidAngleResult(value=" + py::repr(py::float_(r.value)).cast<std::string>()
                   + ", method='" + std::string(to_string(r.method)) + "')";
        });

    m.def(
        "omega_total",
        [](double r, double d, double l1, double l2) { return omega_total({r, d, l1, l2}); },
        py::arg("r"), py::arg("d"), py::arg("l1"), py::arg("l2"),
        "Solid angle of a solid cylinder, normalized to the hemisphere");
    m.def(
        "regime",
        [](double r, double d, double l1, double l2) {
            return std::string(to_string(classify(validate(CylinderGeometry{r, d, l1, l2}))));
        },
        py::arg("r"), py::arg("d"), py::arg("l1"), py::arg("l2"));
    m.def(
        "omega_circ", [](double r, double d, double l) { return omega_circ({r, d, l}); },
        py::arg("r"), py::arg("d"), py::arg("l"));
    m.def(
        "omega_cyl0", [](double l, double r, double d) { return omega_cyl0(l, r, d); },
        py::arg("l"), py::arg("r"), py::arg("d"));
    m.def(
        "omega_spread",
        [](double r_s, double r_d, double l) { return omega_spread({r_s, r_d, l}); },
        py::arg("r_s"), py::arg("r_d"), py::arg("l"));
    m.def("to_steradians", &to_steradians, py::arg("omega"));

    m.def(
        "mc_omega",
        [](double r, double d, double l1, double l2, std::uint64_t samples, std::uint64_t seed) {
            py::gil_scoped_release release;
            return mc_omega(CylinderGeometry{r, d, l1, l2}, mc_config(samples, seed));
        },
        py::arg("r"), py::arg("d"), py::arg("l1"), py::arg("l2"),
        py::arg("samples") = 1'000'000, py::arg("seed") = 42);
    m.def(
        "direct_2d_omega",
        [](double r, double d, double l1, double l2, double tol) {
            return direct_2d_omega(CylinderGeometry{r, d, l1, l2}, quad_config(tol));
        },
        py::arg("r"), py::arg("d"), py::arg("l1"), py::arg("l2"), py::arg("tol") = 1e-10);
    m.def(
        "quad_spread",
        [](double r_s, double r_d, double l, double tol) {
            return quad_spread({r_s, r_d, l}, quad_config(tol));
        },
        py::arg("r_s"), py::arg("r_d"), py::arg("l"), py::arg("tol") = 1e-10);

    m.def(
        "sweep",
        [](std::string const& vary, double from, double to, int steps,
           std::map<std::string, double> const& fixed, std::string const& quantity,
           bool log) {
            SweepSpec spec;
            spec.varying = vary;
            spec.from = from;
            spec.to = to;
            spec.steps = steps;
            spec.fixed = fixed;
            spec.quantity = parse_quantity(quantity);
            spec.spacing = log ? Spacing::log : Spacing::linear;
            py::list rows;
            for (auto const& rec : run_sweep(spec))
            {
                py::dict row;
                row["varying"] = rec.varying;
                row["omega"] = rec.omega ? py::object(py::float_(*rec.omega)) : py::none();
                row["regime"] = rec.regime;
                rows.append(row);
            }
            return rows;
        },
        py::arg("vary"), py::arg("start"), py::arg("stop"), py::arg("steps"), py::arg("fixed"),
        py::arg("quantity") = "total", py::arg("log") = false,
        "Evaluate one quantity over a parameter range; returns a list of dicts");
}
