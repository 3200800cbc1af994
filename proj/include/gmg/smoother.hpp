#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gmg/grid_function.hpp"
#include "gmg/stencil.hpp"

namespace gmg {

/// Preconditioner choices for the damped Richardson step
/// x <- x - omega C^{-1} (A x - b).
enum class SmootherKind {
    richardson,
    jacobi,
    gauss_seidel,
    sor,
    ilu0,
    tri_x,
    tri_y,
    adi,
    gstri_x,
    gstri_y,
    gsadi,
};

const char* to_string(SmootherKind k);
SmootherKind parse_smoother_kind(const std::string& name);
std::vector<SmootherKind> all_smoother_kinds();

/// Which C to build and the parameter that enters its construction:
/// C = D + omega L for gauss_seidel/sor, C = omega (D + line tridiagonal)
/// for the line kinds. The outer damping of the Richardson step is a
/// separate knob passed to smooth_step.
struct SmootherSpec {
    SmootherKind kind = SmootherKind::gauss_seidel;
    double omega = 1.0;
};

/// Immutable preconditioner data, factorized eagerly at setup. Workspace
/// sizes in doubles: jacobi and the point relaxations 0, tri_x/tri_y and
/// gstri_x/gstri_y 3*NEQ, adi and gsadi 6*NEQ, ilu0 five factored diagonals.
class SmootherState {
  public:
    const SmootherSpec& spec() const { return spec_; }
    const StencilOperator& op() const { return *op_; }
    std::size_t workspace_size() const { return ws_.size(); }

    /// Step size actually used by the richardson kind, capped at setup by
    /// the estimated largest eigenvalue of A.
    double richardson_omega() const { return rich_omega_; }
    bool richardson_clamped() const { return rich_clamped_; }
    double richardson_lambda_max() const { return rich_lambda_; }

  private:
    friend SmootherState setup(const SmootherSpec& spec, const StencilOperator& op);
    friend GridFunction apply_preconditioner(const SmootherState& state, const GridFunction& r);

    SmootherSpec spec_;
    const StencilOperator* op_ = nullptr;
    std::vector<double> ws_;
    double rich_omega_ = 0.0;
    double rich_lambda_ = 0.0;
    bool rich_clamped_ = false;
};

/// Validates omega against the kind's admissible range and performs every
/// factorization up front (Thomas factors per grid line, zero-fill ILU,
/// the richardson eigenvalue estimate).
SmootherState setup(const SmootherSpec& spec, const StencilOperator& op);

/// z = C^{-1} r
GridFunction apply_preconditioner(const SmootherState& state, const GridFunction& r);

/// x - omega_damp * C^{-1} (A x - b)
GridFunction smooth_step(const SmootherState& state, const GridFunction& x,
                         const GridFunction& b, double omega_damp);

/// Power-iteration estimate of the spectral radius of I - omega C^{-1} A:
/// repeated smooth_step with b = 0 from a fixed pseudo-random start, tracking
/// the ratio of successive norms. Returns the last ratio.
double estimate_contraction(const SmootherState& state, double omega_damp, int iterations);

}  // namespace gmg
