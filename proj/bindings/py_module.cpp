// Python bindings for the numeric core. The experiment/CLI layer stays
// C++-only; scripts drive the library directly and do their own I/O.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wellblock/fd_grid.hpp"
#include "wellblock/radial_flow.hpp"
#include "wellblock/types.hpp"
#include "wellblock/well_model.hpp"

namespace py = pybind11;
using namespace wellblock;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Well-block radius numerics: radial flow laws, the "
              "rate-dependent Peaceman construction, and the reference "
              "finite-difference solver.";

    m.attr("PI") = pi;
    m.attr("PEACEMAN_RATIO") = peaceman_ratio;

    py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<FluidRockParams>(m, "FluidRockParams")
        .def(py::init<double, double, double, double>(), py::arg("mu"),
             py::arg("k"), py::arg("h"), py::arg("beta1") = 0.0)
        .def_readwrite("mu", &FluidRockParams::mu)
        .def_readwrite("k", &FluidRockParams::k)
        .def_readwrite("h", &FluidRockParams::h)
        .def_readwrite("beta1", &FluidRockParams::beta1)
        .def("alpha", &FluidRockParams::alpha)
        .def("alpha1", &FluidRockParams::alpha1)
        .def("beta", &FluidRockParams::beta)
        .def("__repr__", [](const FluidRockParams& f) {
            return "FluidRockParams(mu=" + std::to_string(f.mu) +
                   ", k=" + std::to_string(f.k) + ", h=" + std::to_string(f.h) +
                   ", beta1=" + std::to_string(f.beta1) + ")";
        });

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<double, int>(), py::arg("L"), py::arg("M"))
        .def_readwrite("L", &GridSpec::L)
        .def_readwrite("M", &GridSpec::M)
        .def("delta", &GridSpec::delta);

    py::class_<WellSpec>(m, "WellSpec")
        .def(py::init([](double r_w, py::object theta, double q) {
                 return WellSpec{r_w,
                                 theta.is_none() ? r_w : theta.cast<double>(),
                                 q};
             }),
             py::arg("r_w"), py::arg("theta") = py::none(), py::arg("q") = 0.0)
        .def_readwrite("r_w", &WellSpec::r_w)
        .def_readwrite("theta", &WellSpec::theta)
        .def_readwrite("q", &WellSpec::q);

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("violations", &ValidationReport::violations)
        .def_readonly("warnings", &ValidationReport::warnings)
        .def_readonly("reconstruction_branch",
                      &ValidationReport::reconstruction_branch)
        .def("valid", &ValidationReport::valid)
        .def("text", &ValidationReport::text);

    m.def("validate_config", &validate_config, py::arg("fluid"),
          py::arg("grid"), py::arg("well"));

    // Radial flow laws.
    py::class_<radial::Annulus>(m, "Annulus")
        .def(py::init<double, double>(), py::arg("r_inner"), py::arg("r_outer"))
        .def_readwrite("r_inner", &radial::Annulus::r_inner)
        .def_readwrite("r_outer", &radial::Annulus::r_outer);

    m.def("darcy_drop", &radial::darcy_drop, py::arg("q"), py::arg("alpha"),
          py::arg("annulus"));
    m.def("darcy_profile", &radial::darcy_profile, py::arg("q"),
          py::arg("alpha"), py::arg("r"), py::arg("r_ref"), py::arg("p_ref"));
    m.def("forchheimer_drop", &radial::forchheimer_drop, py::arg("q"),
          py::arg("alpha"), py::arg("beta"), py::arg("annulus"));
    m.def("rate_from_drop_forchheimer", &radial::rate_from_drop_forchheimer,
          py::arg("drop"), py::arg("alpha"), py::arg("beta"),
          py::arg("annulus"));
    m.def("reconstruct_pw_darcy", &radial::reconstruct_pw_darcy, py::arg("p0"),
          py::arg("q"), py::arg("alpha"), py::arg("delta"), py::arg("r_w"));
    m.def("radial_ode_oracle", &radial::radial_ode_oracle, py::arg("q"),
          py::arg("alpha"), py::arg("beta"), py::arg("annulus"),
          py::arg("n_steps"));

    // Well model.
    m.def("peaceman_radius_darcy", &well::peaceman_radius_darcy,
          py::arg("delta_spacing"));
    m.def(
        "solve_delta",
        [](double alpha, double beta, double q, double delta_spacing,
           double tol) {
            return well::solve_delta({alpha, beta, q, delta_spacing}, tol);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("q"),
        py::arg("delta_spacing"), py::arg("tol") = 1e-13);

    py::class_<well::ForchheimerRadius>(m, "ForchheimerRadius")
        .def_readonly("r0", &well::ForchheimerRadius::r0)
        .def_readonly("delta_factor", &well::ForchheimerRadius::delta_factor);

    m.def("forchheimer_radius", &well::forchheimer_radius, py::arg("fluid"),
          py::arg("q"), py::arg("delta_spacing"), py::arg("tol") = 1e-13);
    m.def("d_factor", &well::d_factor, py::arg("fluid"), py::arg("r_w"));
    m.def("dake_drop_simulator", &well::dake_drop_simulator, py::arg("q"),
          py::arg("fluid"), py::arg("delta_spacing"), py::arg("r_w"));
    m.def("dake_drop_correct", &well::dake_drop_correct, py::arg("q"),
          py::arg("fluid"), py::arg("delta_spacing"), py::arg("r_w"));
    m.def("well_index", &well::well_index, py::arg("q"), py::arg("mu"),
          py::arg("p0"), py::arg("p_w"));

    py::class_<well::WellposednessReport>(m, "WellposednessReport")
        .def_readonly("condition_met", &well::WellposednessReport::condition_met)
        .def_readonly("r0", &well::WellposednessReport::r0)
        .def_readonly("sewing_residual",
                      &well::WellposednessReport::sewing_residual)
        .def_readonly("u1_theta", &well::WellposednessReport::u1_theta)
        .def_readonly("u0_theta", &well::WellposednessReport::u0_theta);

    m.def("check_strict_wellposedness", &well::check_strict_wellposedness,
          py::arg("delta_spacing"), py::arg("theta"), py::arg("q"),
          py::arg("alpha"));

    py::class_<WellModelResult>(m, "WellModelResult")
        .def_readonly("r0", &WellModelResult::r0)
        .def_readonly("delta_factor", &WellModelResult::delta_factor)
        .def_readonly("d_factor", &WellModelResult::d_factor)
        .def_readonly("t_w", &WellModelResult::t_w)
        .def_readonly("p_w", &WellModelResult::p_w)
        .def_readonly("drop_simulator", &WellModelResult::drop_simulator)
        .def_readonly("drop_correct", &WellModelResult::drop_correct);

    m.def("summarize", &well::summarize, py::arg("fluid"),
          py::arg("delta_spacing"), py::arg("well"), py::arg("p0"),
          py::arg("tol") = 1e-13);

    // Finite-difference reference solver.
    py::class_<PressureField>(m, "PressureField")
        .def("at", &PressureField::at, py::arg("i"), py::arg("j"))
        .def("grid", &PressureField::grid)
        .def("residual_norm", &PressureField::residual_norm)
        .def("iterations", &PressureField::iterations)
        .def("values", [](const PressureField& f) {
            auto v = f.values();
            return std::vector<double>(v.begin(), v.end());
        });

    m.def(
        "solve_field",
        [](const GridSpec& grid, const FluidRockParams& fluid, double q,
           double tol) { return fd::solve(fd::assemble(grid, fluid, q), tol); },
        py::arg("grid"), py::arg("fluid"), py::arg("q"),
        py::arg("tol") = 1e-11,
        "Assemble and solve the homogeneous-boundary well-block problem.");

    py::class_<fd::BlockPressures>(m, "BlockPressures")
        .def_readonly("p0", &fd::BlockPressures::p0)
        .def_readonly("p1", &fd::BlockPressures::p1)
        .def_readonly("symmetry_defect", &fd::BlockPressures::symmetry_defect);

    m.def("block_pressures", &fd::block_pressures, py::arg("field"));

    py::class_<fd::FitWindow>(m, "FitWindow")
        .def(py::init([](double r_min_blocks, double r_max_fraction) {
                 return fd::FitWindow{r_min_blocks, r_max_fraction};
             }),
             py::arg("r_min_blocks") = 1.0, py::arg("r_max_fraction") = 0.25)
        .def_readwrite("r_min_blocks", &fd::FitWindow::r_min_blocks)
        .def_readwrite("r_max_fraction", &fd::FitWindow::r_max_fraction);

    py::class_<fd::R0Estimate>(m, "R0Estimate")
        .def_readonly("r0_over_delta", &fd::R0Estimate::r0_over_delta)
        .def_readonly("slope", &fd::R0Estimate::slope)
        .def_readonly("intercept", &fd::R0Estimate::intercept)
        .def_readonly("n_points", &fd::R0Estimate::n_points)
        .def_readonly("fit_rms", &fd::R0Estimate::fit_rms);

    m.def("estimate_r0_numeric", &fd::estimate_r0_numeric, py::arg("field"),
          py::arg("fluid"), py::arg("q"),
          py::arg("window") = fd::FitWindow{});
    m.def("contour_flux", &fd::contour_flux, py::arg("field"),
          py::arg("fluid"), py::arg("ring"));

    py::class_<fd::RefinementRow>(m, "RefinementRow")
        .def_readonly("M", &fd::RefinementRow::M)
        .def_readonly("delta", &fd::RefinementRow::delta)
        .def_readonly("p_probe", &fd::RefinementRow::p_probe)
        .def_readonly("diff_prev", &fd::RefinementRow::diff_prev)
        .def_readonly("contour_flux", &fd::RefinementRow::contour_flux);

    py::class_<fd::ConvergenceTable>(m, "ConvergenceTable")
        .def_readonly("rows", &fd::ConvergenceTable::rows);

    m.def(
        "green_refinement_study",
        [](const std::vector<int>& grid_sequence, double L,
           const FluidRockParams& fluid, double q, double tol) {
            return fd::green_refinement_study(grid_sequence, L, fluid, q, tol);
        },
        py::arg("grid_sequence"), py::arg("L"), py::arg("fluid"), py::arg("q"),
        py::arg("tol") = 1e-11);

    py::class_<fd::OscillationCheck>(m, "OscillationCheck")
        .def_readonly("value", &fd::OscillationCheck::value)
        .def_readonly("r0_used", &fd::OscillationCheck::r0_used);

    m.def("green_oscillation_check", &fd::green_oscillation_check,
          py::arg("R_e"), py::arg("delta"));
    m.def("green_oscillation_check_fd", &fd::green_oscillation_check_fd,
          py::arg("field"), py::arg("fluid"), py::arg("q"), py::arg("delta"));
}
