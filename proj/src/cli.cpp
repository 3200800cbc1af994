#include "gmg/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gmg/config.hpp"
#include "gmg/cycle.hpp"
#include "gmg/study.hpp"

namespace gmg {

namespace {

std::string fmt_e(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct CliOptions {
    SolverConfig cfg;
    std::string coarse_n = "1";
    std::string coords = "cartesian";
    std::string smoother = "gauss_seidel";
    std::string cycle = "F";
    std::string correction_omega = "adaptive";
    std::string start = "zero";
    std::string sweep;
    std::string values;
    std::string out_path;
};

void finalize(CliOptions& o) {
    parse_coarse_n(o.coarse_n, o.cfg.coarse_nx, o.cfg.coarse_ny);
    o.cfg.coords = parse_coordinate_system(o.coords);
    o.cfg.smoother.kind = parse_smoother_kind(o.smoother);
    o.cfg.cycle = parse_cycle_type(o.cycle);
    parse_correction_omega(o.correction_omega, o.cfg.adaptive_correction, o.cfg.correction_omega);
    o.cfg.start = parse_start_vector(o.start);
    o.cfg.validate();
}

int cmd_solve(const CliOptions& o, std::ostream& out, std::ostream& err) {
    const GridHierarchy hierarchy = o.cfg.build_hierarchy();
    const MultilevelProblem prob(hierarchy, o.cfg.aniso);
    const CycleSpec spec = o.cfg.cycle_spec();
    const int levels = prob.num_levels();
    const GridFunction b = apply(prob.op(levels), manufactured_solution(prob.grid(levels)));
    GridFunction x = resolve_start_vector(o.cfg, prob, spec, b);

    SolveReport report;
    bool diverged = false;
    try {
        report = solve(prob, b, spec, x);
    } catch (const DivergenceError& e) {
        report = e.report();
        diverged = true;
    }

    for (std::size_t k = 0; k < report.residual_history.size(); ++k) {
        out << "cycle " << k << " residual " << fmt_e(report.residual_history[k]) << " rate ";
        if (k == 0)
            out << "-";
        else
            out << fmt_e(report.convergence_factors[k - 1]);
        out << "\n";
    }
    if (!o.out_path.empty()) {
        StudyRow row;
        row.history = report.residual_history;
        std::ofstream hist(o.out_path, std::ios::binary);
        if (!hist) {
            err << "out: cannot write " << o.out_path << "\n";
            return 1;
        }
        hist << history_csv(row);
    }
    if (diverged) {
        err << "diverged after " << report.residual_history.size() - 1 << " cycles\n";
        return 3;
    }
    if (!report.converged) {
        err << "stopped at max_cycles without reaching tol\n";
        return 2;
    }
    out << "converged in " << report.iterations << " cycles, "
        << fmt_e(report.wall_seconds * 1e3) << " ms\n";
    return 0;
}

int cmd_study(const CliOptions& o, std::ostream& out, std::ostream& err) {
    if (o.sweep.empty()) {
        err << "sweep: required for the study command\n";
        return 1;
    }
    StudyConfig sc;
    sc.axis = parse_sweep_axis(o.sweep);
    sc.values = split_csv(o.values);
    sc.base = o.cfg;
    sc.output_csv = o.out_path.empty() ? std::string("study_") + to_string(sc.axis) + ".csv"
                                       : o.out_path;
    const StudyResult result = run_study(sc);
    out << study_csv(result);
    out << "wrote " << sc.output_csv.string() << "\n";
    return 0;
}

int cmd_probe(const CliOptions& o, std::ostream& out, std::ostream& err) {
    const GridHierarchy hierarchy = o.cfg.build_hierarchy();
    const MultilevelProblem prob(hierarchy, o.cfg.aniso);
    const int levels = prob.num_levels();
    const SmootherState state = setup(o.cfg.smoother, prob.op(levels));
    if (state.spec().kind == SmootherKind::richardson && state.richardson_clamped()) {
        err << "warning: smoother_omega clamped to " << fmt_e(state.richardson_omega())
            << " (1/lambda_max = " << fmt_e(1.0 / state.richardson_lambda_max()) << ")\n";
    }
    const double rho = estimate_contraction(state, o.cfg.omega, 300);
    out << "contraction " << fmt_e(rho) << "\n";
    return rho < 1.0 ? 0 : 4;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"2-D anisotropic Poisson multigrid solver and benchmark harness"};
    app.require_subcommand(1);

    CliOptions o;
    app.set_config("--config", "", "key = value file with the flags below as keys");
    app.allow_config_extras(false);

    app.add_option("--levels", o.cfg.levels, "grid levels in the hierarchy, >= 1")
        ->check(CLI::Range(1, 14));
    app.add_option("--coarse_n", o.coarse_n,
                   "coarsest-level interior points per direction, N or NxM, >= 1");
    app.add_option("--grading_x", o.cfg.grading.factor_x, "x cell-width ratio, > 0")
        ->check(CLI::PositiveNumber);
    app.add_option("--grading_y", o.cfg.grading.factor_y, "y cell-width ratio, > 0")
        ->check(CLI::PositiveNumber);
    app.add_option("--coords", o.coords, "cartesian | cylindrical | spherical");
    app.add_option("--alpha", o.cfg.aniso.alpha, "x diffusion coefficient, > 0")
        ->check(CLI::PositiveNumber);
    app.add_option("--beta", o.cfg.aniso.beta, "y diffusion coefficient, > 0")
        ->check(CLI::PositiveNumber);
    app.add_option("--smoother", o.smoother,
                   "richardson | jacobi | gauss_seidel | sor | ilu0 | tri_x | tri_y | adi | "
                   "gstri_x | gstri_y | gsadi");
    app.add_option("--omega", o.cfg.omega, "outer damping of each smoothing step, > 0")
        ->check(CLI::PositiveNumber);
    app.add_option("--smoother_omega", o.cfg.smoother.omega,
                   "preconditioner construction parameter; (0,2) for gauss_seidel/sor, (0,1] "
                   "for line smoothers, > 0 otherwise")
        ->check(CLI::PositiveNumber);
    app.add_option("--cycle", o.cycle, "V | W | F");
    app.add_option("--pre_steps", o.cfg.pre_steps, "pre-smoothing steps, >= 0")
        ->check(CLI::Range(0, 64));
    app.add_option("--post_steps", o.cfg.post_steps, "post-smoothing steps, >= 0")
        ->check(CLI::Range(0, 64));
    app.add_option("--correction_omega", o.correction_omega,
                   "coarse-correction damping, a number > 0 or 'adaptive'");
    app.add_option("--tol", o.cfg.tol, "relative residual target, > 0")
        ->check(CLI::PositiveNumber);
    app.add_option("--max_cycles", o.cfg.max_cycles, "outer cycle budget, >= 1")
        ->check(CLI::Range(1, 100000));
    app.add_option("--start", o.start, "zero | nested | continuation");
    app.add_option("--sweep", o.sweep,
                   "study axis: anisotropy | levels | smoothing_steps | coordinates | smoother "
                   "| start_vector");
    app.add_option("--values", o.values, "comma-separated sweep values");
    app.add_option("--out", o.out_path, "output CSV path");

    CLI::App* solve_cmd = app.add_subcommand("solve", "run one multigrid solve");
    CLI::App* study_cmd = app.add_subcommand("study", "run a parameter sweep");
    CLI::App* probe_cmd = app.add_subcommand("probe", "estimate the smoother contraction factor");
    for (CLI::App* sub : {solve_cmd, study_cmd, probe_cmd}) sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("gmg2d");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        finalize(o);
        if (solve_cmd->parsed()) return cmd_solve(o, out, err);
        if (study_cmd->parsed()) return cmd_study(o, out, err);
        return cmd_probe(o, out, err);
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace gmg
