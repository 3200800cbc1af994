#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gmg/config.hpp"
#include "gmg/cycle.hpp"

namespace gmg {

struct StartVectorStrategy {
    StartVectorKind kind = StartVectorKind::zero;
    const GridFunction* continuation_source = nullptr;  // required for continuation
};

/// Start vector on the finest level: zeros, a full-multigrid-style nested
/// ascent (direct level-1 solve, then prolong and smooth once per level), or
/// an injected solution of a related problem with the same finest shape.
GridFunction make_start_vector(const StartVectorStrategy& strategy, const MultilevelProblem& prob,
                               const CycleSpec& spec, const GridFunction& b);

/// Start vector for a configured run. For continuation the source is the
/// solved configuration with alpha reduced tenfold (parameter continuation
/// in the diffusion ratio).
GridFunction resolve_start_vector(const SolverConfig& cfg, const MultilevelProblem& prob,
                                  const CycleSpec& spec, const GridFunction& b);

enum class SweepAxis { anisotropy, levels, smoothing_steps, coordinates, smoother, start_vector };

const char* to_string(SweepAxis axis);
SweepAxis parse_sweep_axis(const std::string& name);

struct StudyConfig {
    SweepAxis axis = SweepAxis::smoothing_steps;
    std::vector<std::string> values;
    SolverConfig base;
    std::filesystem::path output_csv;  // empty: no files written
};

struct StudyRow {
    std::string sweep_value;
    int cycles = 0;
    double final_rel_residual = 0.0;
    double mean_rate = 0.0;
    bool converged = false;
    double wall_ms = 0.0;
    std::vector<double> history;
};

struct StudyResult {
    std::vector<StudyRow> rows;
};

/// Geometric-mean per-cycle factor (r_K / r_0)^(1/K); 0 if the residual hits
/// zero mid-history.
double convergence_rate(const std::vector<double>& history);

/// Runs one solve per sweep value in order. A diverging run is recorded in
/// its row (cycles = max, converged = false) and never aborts the sweep.
/// Writes the result CSV plus one history_<value>.csv per run when
/// output_csv is set.
StudyResult run_study(const StudyConfig& config);

/// Exact CSV bytes of a result (header row included, "%.9e" reals).
std::string study_csv(const StudyResult& result);
std::string history_csv(const StudyRow& row);

}  // namespace gmg
