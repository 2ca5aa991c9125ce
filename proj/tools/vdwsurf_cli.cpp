// Command-line front end: scenario-driven sweeps, figure presets, the
// enhancement report and the force evaluator. All physics lives in the
// library; this file only parses flags, wires scenarios and formats output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vdwsurf/vdwsurf.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read scenario file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CommonOpts {
    std::string scenario_path;
    std::string out_path;
    int points = 0;       // 0 = keep scenario value
    double tol = 0.0;     // 0 = keep scenario value
    unsigned threads = 0; // 0 = hardware concurrency
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_out = true) {
    cmd->add_option("--scenario", o.scenario_path,
                    "Scenario file (key = value lines); defaults apply for missing keys");
    if (with_out) cmd->add_option("--out", o.out_path, "Output CSV path");
    cmd->add_option("--points", o.points, "Override the sweep grid size")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol", o.tol, "Override the quadrature relative tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
}

vdwsurf::Scenario load_scenario(const CommonOpts& o,
                                const vdwsurf::Scenario& base = {}) {
    vdwsurf::Scenario s = base;
    if (!o.scenario_path.empty()) s = vdwsurf::parse_scenario(slurp(o.scenario_path), base);
    if (o.points > 0) s.points = o.points;
    if (o.tol > 0.0) s.rel_tol = o.tol;
    vdwsurf::validate_scenario(s);
    return s;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

void report_gaps(const vdwsurf::SweepResult& r) {
    for (double w : r.gaps)
        std::cerr << "note: gap at omega_a_rel = " << fmt(w)
                  << " (undamped crossing)\n";
}

int cmd_sweep(const CommonOpts& o, const std::string& quantity) {
    vdwsurf::Scenario s = load_scenario(o);
    vdwsurf::SweepResult r =
        vdwsurf::run_sweep(s, vdwsurf::parse_quantity(quantity), o.threads);
    report_gaps(r);
    if (o.out_path.empty())
        vdwsurf::write_csv(r, std::cout);
    else
        vdwsurf::write_csv_file(r, o.out_path);
    return 0;
}

int cmd_figure(const CommonOpts& o, int figure_id) {
    vdwsurf::Scenario s = load_scenario(o);
    if (o.points == 0) s.points = 600;  // presets default to the documented grid
    vdwsurf::SweepResult r = vdwsurf::figure_sweep(figure_id, s, o.threads);
    report_gaps(r);
    if (o.out_path.empty())
        vdwsurf::write_csv(r, std::cout);
    else
        vdwsurf::write_csv_file(r, o.out_path);
    return 0;
}

int cmd_enhancement(const CommonOpts& o, double omega_a) {
    vdwsurf::Scenario s = load_scenario(o);
    vdwsurf::MediumModel medium = vdwsurf::scenario_medium(s);
    vdwsurf::AtomSpec atom_b = vdwsurf::scenario_atom_B(s);
    vdwsurf::AtomSpec atom_a = vdwsurf::scenario_atom_A(s, omega_a);
    vdwsurf::PairGeometry geom = vdwsurf::scenario_geometry(s);
    vdwsurf::HostModel host = vdwsurf::HostModel::vacuum();

    vdwsurf::ResonantDecomposition dec = vdwsurf::resonant_decomposition(medium);
    double exact =
        vdwsurf::enhancement_exact(atom_b, geom, medium, host, omega_a);
    double estimate = vdwsurf::enhancement_estimate(
        dec.sigma_sq, dec.omega_S, dec.Gamma, geom.z_A, geom.z_B, geom.R());
    vdwsurf::PotentialBreakdown u = vdwsurf::u_ab_breakdown(
        atom_a, atom_b, geom, medium, host, omega_a, vdwsurf::scenario_quadrature(s));

    std::cout << "omega_a_rel          = " << fmt(omega_a) << "\n";
    std::cout << "enhancement_exact    = " << fmt(exact) << "\n";
    std::cout << "enhancement_estimate = " << fmt(estimate) << "\n";
    std::cout << "u_off_resonant       = " << fmt(u.off_resonant) << "\n";
    std::cout << "u_resonant           = " << fmt(u.resonant) << "\n";
    std::cout << "u_total              = " << fmt(u.total) << "\n";
    std::cout << "u0_reference         = " << fmt(u.u0_reference) << "\n";
    std::cout << "ratio_resonant       = " << fmt(u.ratio_resonant) << "\n";
    if (s.omega_s_hz > 0.0)
        std::cout << "omega_s_hz           = " << fmt(s.omega_s_hz) << "\n";
    return 0;
}

int cmd_force(const CommonOpts& o, double omega_a, bool check_gradient, double step) {
    vdwsurf::Scenario s = load_scenario(o);
    vdwsurf::MediumModel medium = vdwsurf::scenario_medium(s);
    vdwsurf::AtomSpec atom_b = vdwsurf::scenario_atom_B(s);
    vdwsurf::AtomSpec atom_a = vdwsurf::scenario_atom_A(s, omega_a);
    vdwsurf::PairGeometry geom = vdwsurf::scenario_geometry(s);

    vdwsurf::ForceResult f =
        vdwsurf::resonant_force(atom_a, atom_b, geom, medium, omega_a);
    std::cout << "omega_a_rel    = " << fmt(omega_a) << "\n";
    std::cout << "f_par_x        = " << fmt(f.F_parallel[0]) << "\n";
    std::cout << "f_z            = " << fmt(f.F_z) << "\n";
    std::cout << "f0             = " << fmt(f.normalization) << "\n";
    std::cout << "f_par_x_ratio  = " << fmt(f.F_parallel_ratio()[0]) << "\n";
    std::cout << "f_z_ratio      = " << fmt(f.F_z_ratio()) << "\n";

    if (check_gradient) {
        vdwsurf::GradientCheckReport rep =
            vdwsurf::gradient_force_check(atom_a, atom_b, geom, medium, omega_a, step);
        std::cout << "gradient_step  = " << fmt(rep.step) << "\n";
        const char* axis[] = {"x", "y", "z"};
        for (int k = 0; k < 3; ++k)
            std::cout << "gradient_" << axis[k] << "      = " << fmt(rep.analytic[k])
                      << "  fd = " << fmt(rep.finite_diff[k]) << "\n";
        std::cout << "gradient_rel_mismatch = " << fmt(rep.max_rel_mismatch) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Surface-enhanced atom-atom dispersion interaction toolkit"};
    app.require_subcommand(1);

    CommonOpts sweep_opts;
    std::string quantity = "u_ratio";
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Sweep one quantity over omega_A and emit CSV");
    add_common(sweep, sweep_opts);
    sweep->add_option("--quantity", quantity,
                      "u_ratio | force_z | force_par | cp_potential");

    CommonOpts figure_opts;
    int figure_id = 0;
    CLI::App* figure = app.add_subcommand(
        "figure", "Emit one of the preset sweeps (2, 3, 4 or 5) as CSV");
    add_common(figure, figure_opts);
    figure->add_option("id", figure_id, "Preset id")->required()->check(CLI::Range(2, 5));

    CommonOpts enh_opts;
    double enh_omega_a = 1.0;
    CLI::App* enh = app.add_subcommand(
        "enhancement", "Report exact and estimated surface enhancement");
    add_common(enh, enh_opts, /*with_out=*/false);
    enh->add_option("--omega-a", enh_omega_a,
                    "Atom A transition frequency (units of omega_S)")
        ->check(CLI::PositiveNumber);

    CommonOpts force_opts;
    double force_omega_a = 1.0;
    bool check_gradient = false;
    double step = 1e-5;
    CLI::App* force = app.add_subcommand(
        "force", "Evaluate the resonant force on atom A");
    add_common(force, force_opts, /*with_out=*/false);
    force->add_option("--omega-a", force_omega_a,
                      "Atom A transition frequency (units of omega_S)")
        ->check(CLI::PositiveNumber);
    force->add_flag("--check-gradient", check_gradient,
                    "Validate the closed form against finite differences");
    force->add_option("--step", step, "Finite-difference step (reduced lengths)")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) return cmd_sweep(sweep_opts, quantity);
        if (figure->parsed()) return cmd_figure(figure_opts, figure_id);
        if (enh->parsed()) return cmd_enhancement(enh_opts, enh_omega_a);
        if (force->parsed()) return cmd_force(force_opts, force_omega_a,
                                              check_gradient, step);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
