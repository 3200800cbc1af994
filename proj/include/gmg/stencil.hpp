#pragma once

#include <vector>

#include "gmg/grid_function.hpp"
#include "gmg/mesh.hpp"

namespace gmg {

/// Diffusion coefficients of -alpha u_xx - beta u_yy.
struct AnisotropySpec {
    double alpha = 1.0;
    double beta = 1.0;
};

/// Five-point operator stored as one coefficient array per stencil leg,
/// row-major over interior nodes. Off-diagonal entries next to the boundary
/// are zero; their flux contribution stays in the diagonal, which makes rows
/// adjacent to the boundary strictly diagonally dominant.
struct StencilOperator {
    const LevelGrid* grid_ref = nullptr;
    std::vector<double> c;  // diagonal
    std::vector<double> n;  // coupling to (i, j+1)
    std::vector<double> s;  // coupling to (i, j-1)
    std::vector<double> e;  // coupling to (i+1, j)
    std::vector<double> w;  // coupling to (i-1, j)
    bool diagonally_dominant = false;

    const LevelGrid& grid() const { return *grid_ref; }
    int nx() const { return grid_ref->nx; }
    int ny() const { return grid_ref->ny; }
    int level() const { return grid_ref->level; }
    std::size_t size() const { return c.size(); }
};

/// Conservative flux-form discretization on the (possibly graded) tensor
/// grid. Fluxes carry the coordinate metric evaluated at cell faces
/// (cylindrical: r, spherical: r^2 sin(theta)); the transverse cell measure
/// is integrated exactly. The assembled matrix is symmetric positive
/// definite on every grid.
StencilOperator assemble(const LevelGrid& grid, const AnisotropySpec& aniso);

/// y = A x with zero Dirichlet boundary.
GridFunction apply(const StencilOperator& op, const GridFunction& x);

/// b - A x
GridFunction residual(const StencilOperator& op, const GridFunction& x, const GridFunction& b);

/// Cholesky factorization of the banded SPD system, built eagerly; solve()
/// is const and safe to share across threads.
class BandedCholesky {
  public:
    explicit BandedCholesky(const StencilOperator& op);
    GridFunction solve(const GridFunction& b) const;

  private:
    const LevelGrid* grid_ = nullptr;
    int n_ = 0;
    int bw_ = 0;                 // half bandwidth (= nx)
    std::vector<double> band_;   // band_[d * n_ + k] = L(k, k-d)
};

/// One-shot banded direct solve (level-1 systems are small).
GridFunction direct_solve(const StencilOperator& op, const GridFunction& b);

/// sin(pi x) sin(pi y) on the computational unit square; together with
/// b = A u* this provides the discrete exact solution at every resolution.
GridFunction manufactured_solution(const LevelGrid& grid);

}  // namespace gmg
