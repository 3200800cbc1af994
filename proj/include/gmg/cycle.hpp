#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gmg/mesh.hpp"
#include "gmg/smoother.hpp"
#include "gmg/stencil.hpp"
#include "gmg/transfer.hpp"

namespace gmg {

enum class CycleType { V, W, F };

const char* to_string(CycleType t);
CycleType parse_cycle_type(const std::string& name);

struct CycleSpec {
    CycleType cycle = CycleType::F;
    int pre_steps = 2;
    int post_steps = 2;
    /// Correction damping: energy-norm minimizer when adaptive, otherwise
    /// the fixed value below.
    bool adaptive_correction = true;
    double correction_omega = 1.0;
    SmootherSpec smoother;
    double smoothing_omega = 0.7;
    double tolerance = 1e-4;
    int max_cycles = 50;
    /// Level-1 systems larger than this are approximated with smoothing
    /// sweeps instead of a banded factorization. Unlimited by default; the
    /// grid-levels study caps it to emulate truncated hierarchies.
    std::size_t coarse_direct_max_neq = std::numeric_limits<std::size_t>::max();
};

struct SolveReport {
    int iterations = 0;
    std::vector<double> residual_history;   // ||b - A x||_2 per cycle, entry 0 included
    std::vector<double> convergence_factors;
    bool converged = false;
    double wall_seconds = 0.0;
};

class DivergenceError : public std::runtime_error {
  public:
    DivergenceError(const std::string& msg, SolveReport partial)
        : std::runtime_error(msg), report_(std::move(partial)) {}
    const SolveReport& report() const { return report_; }

  private:
    SolveReport report_;
};

/// Operators for every level of a hierarchy plus the eager level-1
/// factorization. Immutable after construction; independent solves may
/// share one instance.
class MultilevelProblem {
  public:
    MultilevelProblem(const GridHierarchy& hierarchy, const AnisotropySpec& aniso);

    const GridHierarchy& hierarchy() const { return *hierarchy_; }
    const AnisotropySpec& anisotropy() const { return aniso_; }
    int num_levels() const { return hierarchy_->num_levels(); }
    const LevelGrid& grid(int level) const { return hierarchy_->level(level); }
    const StencilOperator& op(int level) const { return ops_.at(level - 1); }
    const BandedCholesky& coarse_solver() const { return *coarse_; }

  private:
    const GridHierarchy* hierarchy_;
    AnisotropySpec aniso_;
    std::vector<StencilOperator> ops_;
    std::unique_ptr<BandedCholesky> coarse_;
};

/// One smoother state per level for the given spec.
std::vector<SmootherState> setup_smoothers(const MultilevelProblem& prob,
                                           const SmootherSpec& spec);

/// Energy-norm minimizer (d, c) / (A c, c) along the correction direction c;
/// returns 1 for a zero correction.
double adaptive_omega(const GridFunction& defect, const GridFunction& correction,
                      const StencilOperator& op);

/// The recursive cycle: level 1 solves directly, higher levels pre-smooth,
/// restrict the defect, recurse (once for V, twice for W) from a zero coarse
/// start, add the damped prolonged correction, and post-smooth.
GridFunction mg_cycle(int level, const GridFunction& u0, const GridFunction& g,
                      const CycleSpec& spec, const MultilevelProblem& prob,
                      const std::vector<SmootherState>& smoothers);

/// Level-visit plan of one F-cycle: restrict to the coarsest, solve there,
/// then per level coarse to fine prolong the result up and run a V-cycle.
/// Pairs are (level, recursion count); the level-1 direct visits carry 0.
std::vector<std::pair<int, int>> fcycle_schedule(int num_levels);

/// Outer iteration on the finest level until ||r_k|| <= tolerance * ||b||
/// or max_cycles (for b = 0 the start residual is the reference). x carries
/// the start vector in and the solution out. Residual growth beyond 1e6
/// times the reference throws DivergenceError with the partial report.
SolveReport solve(const MultilevelProblem& prob, const GridFunction& b, const CycleSpec& spec,
                  GridFunction& x);

}  // namespace gmg
