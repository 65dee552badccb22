#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phasefront/analysis.hpp"
#include "phasefront/coexistence.hpp"
#include "phasefront/eos.hpp"
#include "phasefront/errors.hpp"
#include "phasefront/fit.hpp"
#include "phasefront/pearcey.hpp"
#include "phasefront/shock.hpp"
#include "phasefront/version.hpp"
#include "phasefront/viscous.hpp"

namespace py = pybind11;
using namespace phasefront;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Equations of state as nonlinear-wave solutions: isotherm roots, Maxwell "
              "fronts, the universal critical profile and shock kinematics";
    m.attr("__version__") = PHASEFRONT_VERSION;

    const auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ConfigError>(m, "ConfigError", base);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", base);

    py::class_<VdwParams>(m, "VdwParams")
        .def(py::init([](double a, double b, double n, double R) {
                 return VdwParams{a, b, n, R};
             }),
             py::arg("a"), py::arg("b"), py::arg("n"), py::arg("R"))
        .def_readwrite("a", &VdwParams::a)
        .def_readwrite("b", &VdwParams::b)
        .def_readwrite("n", &VdwParams::n)
        .def_readwrite("R", &VdwParams::R);

    py::class_<CriticalPoint>(m, "CriticalPoint")
        .def_readonly("V_c", &CriticalPoint::V_c)
        .def_readonly("P_c", &CriticalPoint::P_c)
        .def_readonly("T_c", &CriticalPoint::T_c);

    py::class_<CubicCoeffs>(m, "CubicCoeffs")
        .def_readonly("c1", &CubicCoeffs::c1)
        .def_readonly("c3", &CubicCoeffs::c3);

    py::class_<EosSpec>(m, "EosSpec")
        .def_readonly("name", &EosSpec::name)
        .def_property_readonly("is_vdw", [](const EosSpec& e) { return bool(e.vdw); })
        .def("residual", &EosSpec::residual, py::arg("P"), py::arg("T"), py::arg("V"))
        .def("alpha", [](const EosSpec& e, double V) { return e.alpha(V); }, py::arg("V"))
        .def("f", [](const EosSpec& e, double V) { return e.f(V); }, py::arg("V"))
        .def("__repr__",
             [](const EosSpec& e) { return "<EosSpec " + e.name + ">"; });

    m.def("hydrogen_params", &hydrogen_params);
    m.def("vdw_spec", &vdw_spec, py::arg("params"));
    m.def("vdw_reduced", &vdw_reduced);
    m.def("tabulated_spec", &tabulated_spec, py::arg("V"), py::arg("alpha"), py::arg("f"));
    m.def("isotherm_pressure", &isotherm_pressure, py::arg("V"), py::arg("T"), py::arg("eos"));
    m.def(
        "solve_volumes",
        [](double P, double T, const EosSpec& eos) { return solve_volumes(P, T, eos); },
        py::arg("P"), py::arg("T"), py::arg("eos"));
    m.def("critical_point", &critical_point, py::arg("eos"));
    m.def("local_cubic_coeffs", &local_cubic_coeffs, py::arg("eos"), py::arg("cp"));

    py::class_<SaturationPoint>(m, "SaturationPoint")
        .def_readonly("T", &SaturationPoint::T)
        .def_readonly("P_sat", &SaturationPoint::P_sat)
        .def_readonly("V_l", &SaturationPoint::V_l)
        .def_readonly("V_g", &SaturationPoint::V_g)
        .def_readonly("delta_S", &SaturationPoint::delta_S)
        .def_readonly("delta_V", &SaturationPoint::delta_V)
        .def_readonly("latent_heat", &SaturationPoint::latent_heat)
        .def_readonly("area_residual", &SaturationPoint::area_residual);

    m.def(
        "maxwell_pressure",
        [](double T, const EosSpec& eos) { return maxwell_pressure(T, eos); }, py::arg("T"),
        py::arg("eos"));
    m.def("gibbs_difference", &gibbs_difference, py::arg("P"), py::arg("T"), py::arg("eos"));
    m.def(
        "coexistence_curve",
        [](double T_lo, double T_hi, int steps, const EosSpec& eos) {
            return coexistence_curve(T_lo, T_hi, steps, eos).points;
        },
        py::arg("T_lo"), py::arg("T_hi"), py::arg("steps"), py::arg("eos"));
    m.def(
        "clapeyron_speed",
        [](const SaturationPoint& sp, const EosSpec& eos) {
            const auto ves = eos.vdw ? VolumeEntropySpec::vdw(*eos.vdw)
                                     : VolumeEntropySpec::from_eos(eos, 0.5 * (sp.V_l + sp.V_g));
            return clapeyron_speed(sp, ves);
        },
        py::arg("sp"), py::arg("eos"));

    py::class_<PearceyValue>(m, "PearceyValue")
        .def_readonly("X", &PearceyValue::X)
        .def_readonly("Y", &PearceyValue::Y)
        .def_readonly("Lambda", &PearceyValue::Lambda)
        .def_readonly("dLambda_dX", &PearceyValue::dLambda_dX)
        .def_readonly("dLambda_dY", &PearceyValue::dLambda_dY)
        .def_readonly("d2Lambda_dX2", &PearceyValue::d2Lambda_dX2)
        .def_readonly("u", &PearceyValue::u)
        .def_readonly("du_dX", &PearceyValue::du_dX)
        .def_readonly("d2u_dX2", &PearceyValue::d2u_dX2)
        .def_readonly("du_dY", &PearceyValue::du_dY)
        .def_readonly("log_scale", &PearceyValue::log_scale);

    m.def("pearcey_moments", &pearcey_moments, py::arg("X"), py::arg("Y"),
          py::arg("rel_tol") = 1e-11);
    m.def("heat_residual", &heat_residual, py::arg("X"), py::arg("Y"));
    m.def("burgers_residual", &burgers_residual, py::arg("X"), py::arg("Y"));
    m.def("ode_residual", &ode_residual, py::arg("X"), py::arg("Y"));
    m.def("cubic_limit", &cubic_limit, py::arg("X"), py::arg("Y"));
    m.def("sigma_matching", &sigma_matching, py::arg("eos"), py::arg("cp"), py::arg("gamma0"));

    py::class_<ScalingMap>(m, "ScalingMap")
        .def_readonly("cp", &ScalingMap::cp)
        .def_readonly("alpha0", &ScalingMap::alpha0)
        .def_readonly("alpha1", &ScalingMap::alpha1)
        .def_readonly("gamma0", &ScalingMap::gamma0)
        .def_readonly("sigma", &ScalingMap::sigma)
        .def_readonly("nu", &ScalingMap::nu)
        .def("xy", &ScalingMap::xy, py::arg("P"), py::arg("T"))
        .def("in_window", &ScalingMap::in_window, py::arg("P"), py::arg("T"),
             py::arg("cap") = 50.0);

    m.def("make_scaling_map", &make_scaling_map, py::arg("eos"), py::arg("cp"),
          py::arg("gamma0"), py::arg("nu"));
    m.def("universal_volume", &universal_volume, py::arg("P"), py::arg("T"), py::arg("map"));
    m.def("with_nu", &with_nu, py::arg("map"), py::arg("nu"));
    m.def("critical_compressibility", &critical_compressibility, py::arg("map"));

    py::class_<FieldSolution>(m, "FieldSolution")
        .def_readonly("P", &FieldSolution::P)
        .def_readonly("T", &FieldSolution::T)
        .def_readonly("V", &FieldSolution::V)
        .def_readonly("max_flux_residual", &FieldSolution::max_flux_residual)
        .def_readonly("steps_taken", &FieldSolution::steps_taken)
        .def("value", &FieldSolution::value, py::arg("i"), py::arg("j"))
        .def("row", &FieldSolution::row, py::arg("i"));

    m.def(
        "evolve_characteristic",
        [](const EosSpec& eos, double c, double nu, double P0, double P1, double T_lo,
           double T_hi, const std::string& branch, int nt, double cfl, int snapshots) {
            if (!eos.vdw)
                throw ConfigError("evolve_characteristic: requires a vdw spec");
            Branch br = Branch::unique;
            if (branch == "smallest")
                br = Branch::smallest;
            else if (branch == "largest")
                br = Branch::largest;
            else if (branch != "unique")
                throw ConfigError("branch must be smallest, largest or unique");
            GridSpec grid;
            grid.nt = nt;
            grid.cfl = cfl;
            grid.snapshots = snapshots;
            BoundarySpec bc{characteristic_boundary(eos, T_lo, br),
                            characteristic_boundary(eos, T_hi, br)};
            auto V0 = [&eos, P0, br](double T) {
                const auto roots = solve_volumes(P0, T, eos);
                return br == Branch::largest ? roots.back() : roots.front();
            };
            return evolve_viscous(vdw_viscous_coeffs(*eos.vdw, c, nu), V0, P0, P1, T_lo, T_hi,
                                  bc, grid);
        },
        py::arg("eos"), py::arg("c"), py::arg("nu"), py::arg("P0"), py::arg("P1"),
        py::arg("T_lo"), py::arg("T_hi"), py::arg("branch") = "unique", py::arg("nt") = 512,
        py::arg("cfl") = 0.4, py::arg("snapshots") = 5);

    py::class_<BurgersColeHopf>(m, "BurgersColeHopf")
        .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("xi"), py::arg("u0"))
        .def("initial", &BurgersColeHopf::initial, py::arg("X"))
        .def("value", &BurgersColeHopf::value, py::arg("X"), py::arg("Y"));

    m.def(
        "fit_alpha_f",
        [](double T1, std::vector<double> V1, std::vector<double> P1, double T2,
           std::vector<double> V2, std::vector<double> P2, bool smooth) {
            IsothermDataset d1{T1, std::move(V1), std::move(P1)};
            IsothermDataset d2{T2, std::move(V2), std::move(P2)};
            FitOptions opt;
            opt.smooth = smooth;
            return fit_alpha_f(d1, d2, opt);
        },
        py::arg("T1"), py::arg("V1"), py::arg("P1"), py::arg("T2"), py::arg("V2"),
        py::arg("P2"), py::arg("smooth") = false);
    m.def(
        "predict_isotherm",
        [](const EosSpec& fitted, double T) {
            const auto curve = predict_isotherm(fitted, T);
            return std::make_pair(curve.V, curve.P);
        },
        py::arg("fitted"), py::arg("T"));
}
