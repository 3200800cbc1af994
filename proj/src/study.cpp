#include "gmg/study.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace gmg {

const char* to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::anisotropy: return "anisotropy";
        case SweepAxis::levels: return "levels";
        case SweepAxis::smoothing_steps: return "smoothing_steps";
        case SweepAxis::coordinates: return "coordinates";
        case SweepAxis::smoother: return "smoother";
        case SweepAxis::start_vector: return "start_vector";
    }
    return "?";
}

SweepAxis parse_sweep_axis(const std::string& name) {
    for (SweepAxis a : {SweepAxis::anisotropy, SweepAxis::levels, SweepAxis::smoothing_steps,
                        SweepAxis::coordinates, SweepAxis::smoother, SweepAxis::start_vector})
        if (name == to_string(a)) return a;
    throw std::invalid_argument("sweep: unknown axis '" + name + "'");
}

double convergence_rate(const std::vector<double>& history) {
    if (history.size() < 2) throw std::invalid_argument("convergence_rate: need >= 2 entries");
    const double r0 = history.front();
    const double rk = history.back();
    for (double r : history)
        if (r == 0.0) return 0.0;
    const double k = static_cast<double>(history.size() - 1);
    return std::pow(rk / r0, 1.0 / k);
}

GridFunction make_start_vector(const StartVectorStrategy& strategy, const MultilevelProblem& prob,
                               const CycleSpec& spec, const GridFunction& b) {
    const int levels = prob.num_levels();
    switch (strategy.kind) {
        case StartVectorKind::zero:
            return GridFunction::zeros(prob.grid(levels));

        case StartVectorKind::nested: {
            if (levels == 1) return prob.coarse_solver().solve(b);
            std::vector<GridFunction> rhs(levels + 1);
            rhs[levels] = b;
            for (int l = levels; l >= 2; --l) rhs[l - 1] = restriction(rhs[l], prob.grid(l - 1));
            const std::vector<SmootherState> smoothers = setup_smoothers(prob, spec.smoother);
            GridFunction u = prob.coarse_solver().solve(rhs[1]);
            for (int l = 2; l <= levels; ++l) {
                u = prolongation(u, prob.grid(l));
                u = smooth_step(smoothers[l - 1], u, rhs[l], spec.smoothing_omega);
            }
            return u;
        }

        case StartVectorKind::continuation: {
            const GridFunction* src = strategy.continuation_source;
            if (src == nullptr)
                throw std::invalid_argument("start: continuation requires a source solution");
            const LevelGrid& finest = prob.grid(levels);
            if (src->nx() != finest.nx || src->ny() != finest.ny)
                throw std::invalid_argument("start: continuation source shape does not match");
            GridFunction u = GridFunction::zeros(finest);
            u.v = src->v;
            return u;
        }
    }
    throw std::logic_error("make_start_vector: unreachable");
}

namespace {

// The grid-levels sweep keeps the finest grid fixed and truncates the
// hierarchy from below. Truncated runs whose coarsest system is larger than
// this are not solved exactly there; they fall back to smoothing sweeps.
constexpr std::size_t kLevelsStudyCoarseCap = 100;

SolverConfig config_for_value(const StudyConfig& study, const std::string& value) {
    SolverConfig cfg = study.base;
    switch (study.axis) {
        case SweepAxis::anisotropy:
            cfg.aniso.alpha = std::stod(value);
            break;
        case SweepAxis::levels: {
            const int L = std::stoi(value);
            if (L < 1) throw std::invalid_argument("values: levels must be >= 1");
            const int cells_x = (study.base.coarse_nx + 1) << (study.base.levels - 1);
            const int cells_y = (study.base.coarse_ny + 1) << (study.base.levels - 1);
            const int shift = L - 1;
            if (L > study.base.levels || (cells_x >> shift) << shift != cells_x ||
                (cells_x >> shift) < 2 || (cells_y >> shift) < 2)
                throw std::invalid_argument(
                    "values: level count incompatible with the base finest grid");
            cfg.levels = L;
            cfg.coarse_nx = (cells_x >> shift) - 1;
            cfg.coarse_ny = (cells_y >> shift) - 1;
            break;
        }
        case SweepAxis::smoothing_steps: {
            const int steps = std::stoi(value);
            if (steps < 1) throw std::invalid_argument("values: smoothing steps must be >= 1");
            cfg.pre_steps = steps;
            cfg.post_steps = steps;
            break;
        }
        case SweepAxis::coordinates:
            cfg.coords = parse_coordinate_system(value);
            break;
        case SweepAxis::smoother:
            cfg.smoother.kind = parse_smoother_kind(value);
            break;
        case SweepAxis::start_vector:
            cfg.start = parse_start_vector(value);
            break;
    }
    cfg.validate();
    return cfg;
}

std::string fmt_e(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9e", v);
    return buf;
}

std::string sanitize(const std::string& s) {
    std::string out = s;
    for (char& c : out)
        if (c == '/' || c == '\\' || c == ' ') c = '_';
    return out;
}

}  // namespace

GridFunction resolve_start_vector(const SolverConfig& cfg, const MultilevelProblem& prob,
                                  const CycleSpec& spec, const GridFunction& b) {
    if (cfg.start != StartVectorKind::continuation)
        return make_start_vector({cfg.start, nullptr}, prob, spec, b);

    // Parameter continuation: start from the solved problem with a ten
    // times weaker x-diffusion.
    SolverConfig scfg = cfg;
    scfg.aniso.alpha = cfg.aniso.alpha / 10.0;
    scfg.start = StartVectorKind::zero;
    const GridHierarchy sh = scfg.build_hierarchy();
    const MultilevelProblem sprob(sh, scfg.aniso);
    const int levels = sprob.num_levels();
    const GridFunction sb = apply(sprob.op(levels), manufactured_solution(sprob.grid(levels)));
    GridFunction sx = GridFunction::zeros(sprob.grid(levels));
    try {
        solve(sprob, sb, scfg.cycle_spec(), sx);
    } catch (const DivergenceError&) {
        // keep whatever iterate the source solve reached
    }
    return make_start_vector({StartVectorKind::continuation, &sx}, prob, spec, b);
}

static StudyRow run_one(const SolverConfig& cfg, const std::string& value, bool cap_coarse) {
    const GridHierarchy hierarchy = cfg.build_hierarchy();
    const MultilevelProblem prob(hierarchy, cfg.aniso);
    CycleSpec spec = cfg.cycle_spec();
    if (cap_coarse) spec.coarse_direct_max_neq = kLevelsStudyCoarseCap;

    const int levels = prob.num_levels();
    const GridFunction b = apply(prob.op(levels), manufactured_solution(prob.grid(levels)));

    GridFunction x = resolve_start_vector(cfg, prob, spec, b);

    StudyRow row;
    row.sweep_value = value;
    SolveReport report;
    try {
        report = solve(prob, b, spec, x);
        row.cycles = report.converged ? report.iterations : cfg.max_cycles;
        row.converged = report.converged;
    } catch (const DivergenceError& e) {
        report = e.report();
        row.cycles = cfg.max_cycles;
        row.converged = false;
    }
    row.history = report.residual_history;
    const double r0 = report.residual_history.front();
    row.final_rel_residual = r0 == 0.0 ? 0.0 : report.residual_history.back() / r0;
    row.mean_rate =
        report.residual_history.size() < 2 ? 1.0 : convergence_rate(report.residual_history);
    row.wall_ms = report.wall_seconds * 1000.0;
    return row;
}

StudyResult run_study(const StudyConfig& config) {
    if (config.values.empty()) throw std::invalid_argument("values: sweep values must be nonempty");
    config.base.validate();

    StudyResult result;
    for (const std::string& value : config.values) {
        const SolverConfig cfg = config_for_value(config, value);
        result.rows.push_back(run_one(cfg, value, config.axis == SweepAxis::levels));
    }

    if (!config.output_csv.empty()) {
        std::ofstream out(config.output_csv, std::ios::binary);
        if (!out) throw std::runtime_error("out: cannot write " + config.output_csv.string());
        out << study_csv(result);
        const auto dir = config.output_csv.parent_path();
        for (const StudyRow& row : result.rows) {
            const auto path = dir / ("history_" + sanitize(row.sweep_value) + ".csv");
            std::ofstream hist(path, std::ios::binary);
            if (!hist) throw std::runtime_error("out: cannot write " + path.string());
            hist << history_csv(row);
        }
    }
    return result;
}

std::string study_csv(const StudyResult& result) {
    std::string out = "sweep_value,cycles,final_rel_residual,mean_rate,converged,wall_ms\n";
    for (const StudyRow& r : result.rows) {
        out += r.sweep_value;
        out += ',';
        out += std::to_string(r.cycles);
        out += ',';
        out += fmt_e(r.final_rel_residual);
        out += ',';
        out += fmt_e(r.mean_rate);
        out += ',';
        out += r.converged ? '1' : '0';
        out += ',';
        out += fmt_e(r.wall_ms);
        out += '\n';
    }
    return out;
}

std::string history_csv(const StudyRow& row) {
    std::string out = "cycle,residual\n";
    for (std::size_t k = 0; k < row.history.size(); ++k) {
        out += std::to_string(k);
        out += ',';
        out += fmt_e(row.history[k]);
        out += '\n';
    }
    return out;
}

}  // namespace gmg
