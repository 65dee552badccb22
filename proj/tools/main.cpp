#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "phasefront/analysis.hpp"
#include "phasefront/coexistence.hpp"
#include "phasefront/eos.hpp"
#include "phasefront/errors.hpp"
#include "phasefront/fit.hpp"
#include "phasefront/io.hpp"
#include "phasefront/pearcey.hpp"
#include "phasefront/shock.hpp"
#include "phasefront/version.hpp"
#include "phasefront/viscous.hpp"

using namespace phasefront;

namespace {

std::string hash_hex(const std::string& s) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(num::fnv1a(s)));
    return buf;
}

EosSpec resolve_eos(const std::string& src) {
    if (src == "vdw-hydrogen") return vdw_spec(hydrogen_params());
    if (src == "vdw-reduced") return vdw_reduced();
    return io::load_eos(src);
}

std::string trim_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

VolumeEntropySpec entropy_for(const EosSpec& eos, const CriticalPoint& cp) {
    if (eos.vdw) return VolumeEntropySpec::vdw(*eos.vdw);
    return VolumeEntropySpec::from_eos(eos, cp.V_c);
}

PhaseState eos_phase(const EosSpec& eos, const VolumeEntropySpec& ves, const std::string& label,
                     bool largest) {
    PhaseState st;
    st.label = label;
    st.V = [eos, largest](double P, double T) {
        const auto roots = solve_volumes(P, T, eos);
        return largest ? roots.back() : roots.front();
    };
    st.S = [eos, ves, largest](double P, double T) {
        const auto roots = solve_volumes(P, T, eos);
        return ves.S0(largest ? roots.back() : roots.front());
    };
    return st;
}

Branch parse_branch(const std::string& name) {
    if (name == "smallest") return Branch::smallest;
    if (name == "largest") return Branch::largest;
    if (name == "unique") return Branch::unique;
    throw ConfigError("--branch must be smallest, largest or unique");
}

struct IsothermArgs {
    std::vector<double> T;
    bool reduced = false;
    int points = 200;
    double v_lo = 0.0, v_hi = 0.0;
    std::string out = "isotherm";
};

void run_isotherm(const IsothermArgs& a, const EosSpec& eos, const io::Meta& meta) {
    if (a.points < 8) throw ConfigError("isotherm: --points must be at least 8");
    const CriticalPoint cp = critical_point(eos);
    double lo = a.v_lo, hi = a.v_hi;
    if (lo == 0.0 && hi == 0.0) {
        lo = eos.vdw ? eos.vdw->n * eos.vdw->b * 1.1 : eos.V_lo;
        hi = 4.0 * cp.V_c;
    }
    if (!(lo > eos.V_lo && hi > lo))
        throw ConfigError("isotherm: volume window --vmin/--vmax is invalid");
    const auto Vs = num::linspace(lo, hi, a.points);
    for (double Tin : a.T) {
        if (!(Tin > 0.0))
            throw ConfigError("isotherm: --T values must be positive (got " + trim_num(Tin) +
                              ")");
        const double T = a.reduced ? Tin * cp.T_c : Tin;
        IsothermDataset raw;
        raw.T = T;
        raw.V = Vs;
        for (double v : Vs) raw.P.push_back(isotherm_pressure(v, T, eos));
        IsothermDataset corrected = raw;
        if (T < cp.T_c * (1.0 - 1e-6)) {
            const auto sp = maxwell_pressure(T, eos, &cp);
            for (std::size_t i = 0; i < corrected.V.size(); ++i)
                if (corrected.V[i] >= sp.V_l && corrected.V[i] <= sp.V_g)
                    corrected.P[i] = sp.P_sat;
        }
        const std::string stem = a.out + "_T" + trim_num(Tin);
        io::write_isotherm_csv(stem + "_raw.csv", raw, meta);
        io::write_isotherm_csv(stem + "_maxwell.csv", corrected, meta);
        std::cout << "wrote " << stem << "_raw.csv and " << stem << "_maxwell.csv\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonlinear-wave construction of equations of state: isotherms, Maxwell "
                 "fronts, the universal critical profile and shock-based phase diagrams"};
    app.set_version_flag("--version", PHASEFRONT_VERSION);
    app.set_config("--config", "", "key=value run configuration file (flags win)");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.require_subcommand(1);

    std::string eos_src = "vdw-hydrogen";
    app.add_option("--eos", eos_src,
                   "built-in vdw-hydrogen | vdw-reduced, or a path to an EOS JSON document")
        ->capture_default_str();

    // isotherm
    IsothermArgs iso;
    auto* c_iso = app.add_subcommand("isotherm", "Sample raw and Maxwell-corrected isotherms");
    c_iso->add_option("--T", iso.T, "temperature list")->required()->delimiter(',');
    c_iso->add_flag("--reduced", iso.reduced, "interpret temperatures as T / T_c");
    c_iso->add_option("--points", iso.points, "samples per curve")->capture_default_str();
    c_iso->add_option("--vmin", iso.v_lo, "volume window start");
    c_iso->add_option("--vmax", iso.v_hi, "volume window end");
    c_iso->add_option("--out", iso.out, "output file prefix")->capture_default_str();

    // critical-point
    std::string cp_out;
    auto* c_cp = app.add_subcommand("critical-point", "Locate the critical point");
    c_cp->add_option("--out", cp_out, "JSON output path (stdout when omitted)");

    // maxwell
    double mx_T = 0.0;
    bool mx_reduced = false;
    std::string mx_out;
    auto* c_mx = app.add_subcommand("maxwell", "Equal-areas saturation state at one temperature");
    c_mx->add_option("--T", mx_T, "temperature")->required();
    c_mx->add_flag("--reduced", mx_reduced, "interpret --T as T / T_c");
    c_mx->add_option("--out", mx_out, "JSON output path (stdout when omitted)");

    // coexistence
    double cx_lo = 0.0, cx_hi = 0.0;
    int cx_steps = 40;
    bool cx_reduced = false;
    std::string cx_out = "coexistence.csv";
    auto* c_cx = app.add_subcommand("coexistence", "Saturation curve over a temperature range");
    c_cx->add_option("--Tmin", cx_lo, "range start")->required();
    c_cx->add_option("--Tmax", cx_hi, "range end")->required();
    c_cx->add_option("--steps", cx_steps, "number of points")->capture_default_str();
    c_cx->add_flag("--reduced", cx_reduced, "interpret the range as T / T_c");
    c_cx->add_option("--out", cx_out, "CSV output path")->capture_default_str();

    // clapeyron
    double cl_T = 0.0;
    bool cl_reduced = false;
    std::string cl_out;
    auto* c_cl = app.add_subcommand("clapeyron", "Front speed dP/dT at one saturation point");
    c_cl->add_option("--T", cl_T, "temperature")->required();
    c_cl->add_flag("--reduced", cl_reduced, "interpret --T as T / T_c");
    c_cl->add_option("--out", cl_out, "JSON output path (stdout when omitted)");

    // pearcey
    double pc_xlo = -10.0, pc_xhi = 10.0, pc_ylo = -10.0, pc_yhi = 10.0;
    int pc_nx = 41, pc_ny = 41;
    std::string pc_out = "pearcey.csv";
    auto* c_pc = app.add_subcommand("pearcey", "Universal profile grid on the (X, Y) plane");
    c_pc->add_option("--xmin", pc_xlo)->capture_default_str();
    c_pc->add_option("--xmax", pc_xhi)->capture_default_str();
    c_pc->add_option("--ymin", pc_ylo)->capture_default_str();
    c_pc->add_option("--ymax", pc_yhi)->capture_default_str();
    c_pc->add_option("--nx", pc_nx, "grid points in X")->capture_default_str();
    c_pc->add_option("--ny", pc_ny, "grid points in Y")->capture_default_str();
    c_pc->add_option("--out", pc_out, "CSV output path")->capture_default_str();

    // universal
    double un_gamma0 = 1.0, un_nu = 0.0, un_xcap = 8.0, un_ycap = 8.0;
    int un_nx = 21, un_ny = 9;
    std::string un_out = "universal.csv";
    auto* c_un = app.add_subcommand("universal",
                                    "Near-critical volume surface from the universal profile");
    c_un->add_option("--gamma0", un_gamma0, "gamma(V_c) of the viscosity model")
        ->capture_default_str();
    c_un->add_option("--nu", un_nu, "viscosity parameter")->required();
    c_un->add_option("--xcap", un_xcap, "half-width of the X window")->capture_default_str();
    c_un->add_option("--ycap", un_ycap, "half-width of the Y window")->capture_default_str();
    c_un->add_option("--nx", un_nx)->capture_default_str();
    c_un->add_option("--ny", un_ny)->capture_default_str();
    c_un->add_option("--out", un_out, "CSV output path")->capture_default_str();

    // exponents
    double ex_gamma0 = 1.0, ex_nu_lo = 1e-6, ex_nu_hi = 1e-3, ex_dpd = 1.0;
    int ex_n = 7;
    std::string ex_out = "exponents";
    auto* c_ex = app.add_subcommand("exponents", "Critical-exponent fits over a viscosity sweep");
    c_ex->add_option("--gamma0", ex_gamma0)->capture_default_str();
    c_ex->add_option("--nu-lo", ex_nu_lo)->capture_default_str();
    c_ex->add_option("--nu-hi", ex_nu_hi)->capture_default_str();
    c_ex->add_option("--n", ex_n, "sweep points")->capture_default_str();
    c_ex->add_option("--delta-p", ex_dpd, "pressure-domain size prefactor")
        ->capture_default_str();
    c_ex->add_option("--out", ex_out, "output file prefix")->capture_default_str();

    // pde
    double pde_nu = 0.0, pde_c = 1.0, pde_P0 = 0.0, pde_P1 = 0.0, pde_Tlo = 0.0, pde_Thi = 0.0;
    double pde_cfl = 0.4, pde_const_gamma = 0.0;
    int pde_nt = 1024, pde_snapshots = 9;
    std::string pde_branch = "unique", pde_out = "pde";
    auto* c_pde = app.add_subcommand("pde", "March the viscous conservation law in pressure");
    c_pde->add_option("--nu", pde_nu, "viscosity parameter")->required();
    c_pde->add_option("--c", pde_c, "constant entropy gradient coefficient S1")
        ->capture_default_str();
    auto* opt_cg = c_pde->add_option("--const-gamma", pde_const_gamma,
                                     "use a constant diffusion coefficient instead of c*alpha");
    c_pde->add_option("--P0", pde_P0, "initial pressure level")->required();
    c_pde->add_option("--P1", pde_P1, "final pressure level")->required();
    c_pde->add_option("--Tmin", pde_Tlo, "temperature window start")->required();
    c_pde->add_option("--Tmax", pde_Thi, "temperature window end")->required();
    c_pde->add_option("--nt", pde_nt, "spatial nodes")->capture_default_str();
    c_pde->add_option("--cfl", pde_cfl)->capture_default_str();
    c_pde->add_option("--snapshots", pde_snapshots)->capture_default_str();
    c_pde->add_option("--branch", pde_branch, "characteristic branch for IC/BC")
        ->capture_default_str();
    c_pde->add_option("--out", pde_out, "output file prefix")->capture_default_str();

    // shocks
    double sh_T0 = 0.0, sh_Tend = 0.0, sh_step = 0.0;
    bool sh_reduced = false;
    std::string sh_out = "shock_vapor.csv";
    auto* c_sh = app.add_subcommand("shocks", "Vapor-branch front trajectory from the EOS");
    c_sh->add_option("--T0", sh_T0, "start temperature")->required();
    c_sh->add_option("--Tend", sh_Tend, "end temperature")->required();
    c_sh->add_option("--step", sh_step, "RK4 step (default range/400)");
    c_sh->add_flag("--reduced", sh_reduced, "interpret temperatures as T / T_c");
    c_sh->add_option("--out", sh_out, "CSV output path")->capture_default_str();

    // fit
    std::string ft_d1, ft_d2, ft_out = "fitted_eos.json";
    bool ft_smooth = false;
    double ft_lambda = 0.0;
    int ft_grid = 0;
    std::vector<double> ft_predict;
    auto* c_ft = app.add_subcommand("fit", "Reconstruct the state surface from two isotherms");
    c_ft->add_option("--d1", ft_d1, "first isotherm CSV")->required();
    c_ft->add_option("--d2", ft_d2, "second isotherm CSV")->required();
    c_ft->add_flag("--smooth", ft_smooth, "noise-calibrated smoothing before the solve");
    c_ft->add_option("--lambda", ft_lambda, "fixed smoothing penalty (<= 0: noise-calibrated)")
        ->capture_default_str();
    c_ft->add_option("--grid-points", ft_grid, "shared-grid size (0: union of samples)")
        ->capture_default_str();
    c_ft->add_option("--predict", ft_predict, "emit predicted isotherms at these temperatures")
        ->delimiter(',');
    c_ft->add_option("--out", ft_out, "EOS JSON output path")->capture_default_str();

    // phase-diagram
    double pd_T0 = 0.0, pd_Tend = 0.0, pd_step = 0.0;
    bool pd_reduced = false;
    std::string pd_fusion, pd_out = "phase_diagram.json";
    auto* c_pd = app.add_subcommand("phase-diagram",
                                    "Vapor curve, optional fusion curve and their confluence");
    c_pd->add_option("--T0", pd_T0, "vapor curve start temperature")->required();
    c_pd->add_option("--Tend", pd_Tend, "vapor curve end temperature")->required();
    c_pd->add_option("--step", pd_step, "RK4 step (default range/400)");
    c_pd->add_flag("--reduced", pd_reduced, "interpret temperatures as T / T_c");
    c_pd->add_option("--fusion", pd_fusion,
                     "JSON with solid-state constants {V_s, S_s, T0, P0[, Tend, step]}");
    c_pd->add_option("--out", pd_out, "JSON output path")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    io::Meta meta;
    meta.config_hash = hash_hex(app.config_to_str(true, false));

    try {
        const EosSpec eos = resolve_eos(eos_src);

        if (*c_iso) run_isotherm(iso, eos, meta);

        if (*c_cp) {
            const CriticalPoint cp = critical_point(eos);
            const CubicCoeffs cc = local_cubic_coeffs(eos, cp);
            io::json j;
            j["meta"] = io::meta_json(meta);
            j["V_c"] = cp.V_c;
            j["P_c"] = cp.P_c;
            j["T_c"] = cp.T_c;
            j["c1"] = cc.c1;
            j["c3"] = cc.c3;
            if (cp_out.empty())
                std::cout << j.dump(2) << "\n";
            else {
                io::save_json(cp_out, j);
                std::cout << "wrote " << cp_out << "\n";
            }
        }

        if (*c_mx || *c_cl) {
            const bool reduced = *c_mx ? mx_reduced : cl_reduced;
            const double Tin = *c_mx ? mx_T : cl_T;
            const std::string out = *c_mx ? mx_out : cl_out;
            const CriticalPoint cp = critical_point(eos);
            const double T = reduced ? Tin * cp.T_c : Tin;
            const auto sp = maxwell_pressure(T, eos, &cp);
            io::json j;
            j["meta"] = io::meta_json(meta);
            j["T"] = sp.T;
            j["P_sat"] = sp.P_sat;
            j["V_l"] = sp.V_l;
            j["V_g"] = sp.V_g;
            j["delta_S"] = sp.delta_S;
            j["delta_V"] = sp.delta_V;
            j["latent_heat"] = sp.latent_heat;
            j["area_residual"] = sp.area_residual;
            if (*c_cl) j["dP_dT"] = clapeyron_speed(sp, entropy_for(eos, cp));
            if (out.empty())
                std::cout << j.dump(2) << "\n";
            else {
                io::save_json(out, j);
                std::cout << "wrote " << out << "\n";
            }
        }

        if (*c_cx) {
            const CriticalPoint cp = critical_point(eos);
            const double lo = cx_reduced ? cx_lo * cp.T_c : cx_lo;
            const double hi = cx_reduced ? cx_hi * cp.T_c : cx_hi;
            const auto curve = coexistence_curve(lo, hi, cx_steps, eos);
            io::write_coexistence_csv(cx_out, curve, meta);
            std::cout << "wrote " << cx_out << "\n";
        }

        if (*c_pc) {
            if (pc_nx < 2 || pc_ny < 2) throw ConfigError("pearcey: --nx/--ny must be >= 2");
            std::vector<PearceyValue> grid;
            grid.reserve(static_cast<std::size_t>(pc_nx) * pc_ny);
            for (double y : num::linspace(pc_ylo, pc_yhi, pc_ny))
                for (double x : num::linspace(pc_xlo, pc_xhi, pc_nx))
                    grid.push_back(pearcey_moments(x, y));
            io::write_pearcey_csv(pc_out, grid, meta);
            std::cout << "wrote " << pc_out << "\n";
        }

        if (*c_un) {
            const CriticalPoint cp = critical_point(eos);
            const auto map = make_scaling_map(eos, cp, un_gamma0, un_nu);
            std::vector<std::vector<double>> rows;
            for (double Y : num::linspace(-un_ycap, un_ycap, un_ny))
                for (double X : num::linspace(-un_xcap, un_xcap, un_nx)) {
                    const double Pbar = -map.gamma0 / (map.alpha1 * map.alpha1) * Y;
                    const double Tbar = -map.gamma0 / map.alpha1 * X;
                    const double P = cp.P_c + Pbar * std::sqrt(map.nu);
                    const double T =
                        cp.T_c + map.alpha0 * Pbar * std::sqrt(map.nu) +
                        Tbar * std::pow(map.nu, 0.75);
                    rows.push_back({P, T, X, Y, universal_volume(P, T, map)});
                }
            io::write_csv(un_out, io::header_lines(meta), {"P", "T", "X", "Y", "V"}, rows);
            std::cout << "wrote " << un_out << "\n";
        }

        if (*c_ex) {
            const CriticalPoint cp = critical_point(eos);
            const auto map = make_scaling_map(eos, cp, ex_gamma0, 1.0);
            const auto nus = num::logspace(ex_nu_lo, ex_nu_hi, ex_n);
            const auto g = compressibility_scaling(map, nus);
            const auto b = volume_jump_scaling(map, nus, ex_dpd);
            io::write_exponent_csv(ex_out + "_gamma.csv", g, meta);
            io::write_exponent_csv(ex_out + "_beta.csv", b, meta);
            io::json j;
            j["meta"] = io::meta_json(meta);
            j["gamma"] = io::exponent_to_json(g);
            j["beta"] = io::exponent_to_json(b);
            io::save_json(ex_out + ".json", j);
            std::cout << "gamma = " << io::format_double(g.value) << " +- "
                      << io::format_double(g.std_err) << "\n";
            std::cout << "beta  = " << io::format_double(b.value) << " +- "
                      << io::format_double(b.std_err) << "\n";
            std::cout << "wrote " << ex_out << "_gamma.csv, " << ex_out << "_beta.csv, "
                      << ex_out << ".json\n";
        }

        if (*c_pde) {
            if (!eos.vdw)
                throw ConfigError("pde: the marching coefficients require a vdw EOS");
            const Branch branch = parse_branch(pde_branch);
            const ViscousCoeffs coeffs = opt_cg->count()
                                             ? constant_gamma_coeffs(*eos.vdw, pde_const_gamma,
                                                                     pde_nu)
                                             : vdw_viscous_coeffs(*eos.vdw, pde_c, pde_nu);
            GridSpec grid;
            grid.nt = pde_nt;
            grid.cfl = pde_cfl;
            grid.snapshots = pde_snapshots;
            BoundarySpec bc{characteristic_boundary(eos, pde_Tlo, branch),
                            characteristic_boundary(eos, pde_Thi, branch)};
            auto V0 = [&eos, pde_P0, branch](double T) {
                const auto roots = solve_volumes(pde_P0, T, eos);
                if (branch == Branch::largest) return roots.back();
                if (branch == Branch::unique && roots.size() != 1)
                    throw ConvergenceError("pde: surface multivalued at the initial level");
                return roots.front();
            };
            const auto sol =
                evolve_viscous(coeffs, V0, pde_P0, pde_P1, pde_Tlo, pde_Thi, bc, grid);
            io::write_field_csv(pde_out + ".csv", sol, meta);
            io::write_field_binary(pde_out + ".bin", sol, meta);
            std::cout << "steps " << sol.steps_taken << ", max flux residual "
                      << io::format_double(sol.max_flux_residual) << "\n";
            std::cout << "wrote " << pde_out << ".csv and " << pde_out << ".bin\n";
        }

        if (*c_sh || *c_pd) {
            const bool reduced = *c_sh ? sh_reduced : pd_reduced;
            double T0 = *c_sh ? sh_T0 : pd_T0;
            double Tend = *c_sh ? sh_Tend : pd_Tend;
            double step = *c_sh ? sh_step : pd_step;
            const CriticalPoint cp = critical_point(eos);
            if (reduced) {
                T0 *= cp.T_c;
                Tend *= cp.T_c;
                step *= cp.T_c;
            }
            if (step == 0.0) step = std::abs(Tend - T0) / 400.0;
            const auto ves = entropy_for(eos, cp);
            const PhaseState liquid = eos_phase(eos, ves, "liquid", false);
            const PhaseState gas = eos_phase(eos, ves, "gas", true);
            const double P0 = maxwell_pressure(T0, eos, &cp).P_sat;
            const auto vapor = propagate_shock(liquid, gas, T0, P0, Tend, step);

            if (*c_sh) {
                io::write_trajectory_csv(sh_out, vapor, meta);
                std::cout << "wrote " << sh_out << "\n";
            }
            if (*c_pd) {
                std::vector<ShockTrajectory> curves{vapor};
                std::vector<ConfluenceEvent> triples;
                if (!pd_fusion.empty()) {
                    const auto fj = io::load_json(pd_fusion);
                    PhaseState solid;
                    solid.label = "solid";
                    const double Vs = fj.at("V_s").get<double>();
                    const double Ss = fj.at("S_s").get<double>();
                    solid.V = [Vs](double, double) { return Vs; };
                    solid.S = [Ss](double, double) { return Ss; };
                    const double fT0 = fj.at("T0").get<double>();
                    const double fP0 = fj.at("P0").get<double>();
                    const double fTend = fj.value("Tend", Tend);
                    const double fstep = fj.value("step", step);
                    const auto fusion =
                        propagate_shock(solid, liquid, fT0, fP0, fTend, fstep);
                    curves.push_back(fusion);
                    try {
                        triples.push_back(detect_confluence(vapor, fusion));
                    } catch (const ConvergenceError&) {
                        // no intersection in range: emit the curves alone
                    }
                }
                io::save_json(pd_out, io::phase_diagram_to_json(curves, triples, meta));
                std::cout << "wrote " << pd_out << "\n";
                const std::string stem =
                    pd_out.size() > 5 && pd_out.substr(pd_out.size() - 5) == ".json"
                        ? pd_out.substr(0, pd_out.size() - 5)
                        : pd_out;
                io::write_trajectory_csv(stem + "_vapor.csv", curves[0], meta);
                std::cout << "wrote " << stem << "_vapor.csv\n";
                if (curves.size() > 1) {
                    io::write_trajectory_csv(stem + "_fusion.csv", curves[1], meta);
                    std::cout << "wrote " << stem << "_fusion.csv\n";
                }
                if (!triples.empty() && !triples[0].degenerate) {
                    io::write_trajectory_csv(stem + "_outgoing.csv", triples[0].outgoing, meta);
                    std::cout << "wrote " << stem << "_outgoing.csv\n";
                }
            }
        }

        if (*c_ft) {
            const auto d1 = io::read_isotherm_csv(ft_d1);
            const auto d2 = io::read_isotherm_csv(ft_d2);
            FitOptions opt;
            opt.smooth = ft_smooth;
            opt.lambda = ft_lambda;
            opt.grid_points = ft_grid;
            const EosSpec fitted = fit_alpha_f(d1, d2, opt);
            io::json j = io::eos_to_json(fitted);
            j["meta"] = io::meta_json(meta);
            io::save_json(ft_out, j);
            std::cout << "wrote " << ft_out << "\n";
            for (double T : ft_predict) {
                const auto curve = predict_isotherm(fitted, T);
                IsothermDataset d;
                d.T = T;
                d.V = curve.V;
                d.P = curve.P;
                const std::string path = "predicted_T" + trim_num(T) + ".csv";
                io::write_isotherm_csv(path, d, meta);
                std::cout << "wrote " << path << "\n";
            }
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return 3;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
