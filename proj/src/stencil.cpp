#include "gmg/stencil.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gmg {

double norm_l2(const GridFunction& f) {
    double s = 0.0;
    for (double x : f.v) s += x * x;
    return std::sqrt(s);
}

double norm_inf(const GridFunction& f) {
    double m = 0.0;
    for (double x : f.v) m = std::max(m, std::abs(x));
    return m;
}

double dot(const GridFunction& a, const GridFunction& b) {
    require_same_shape(a, b, "dot");
    double s = 0.0;
    for (std::size_t k = 0; k < a.v.size(); ++k) s += a.v[k] * b.v[k];
    return s;
}

void axpy(double alpha, const GridFunction& x, GridFunction& y) {
    require_same_shape(x, y, "axpy");
    for (std::size_t k = 0; k < x.v.size(); ++k) y.v[k] += alpha * x.v[k];
}

void require_same_shape(const GridFunction& a, const GridFunction& b, const char* what) {
    if (a.grid == nullptr || b.grid == nullptr || a.level() != b.level() ||
        a.nx() != b.nx() || a.ny() != b.ny())
        throw std::logic_error(std::string(what) + ": grid functions live on different levels");
}

namespace {

// Flux coefficients after flattening the metric into the operator:
// cartesian  -a u_xx - b u_yy            x-flux a dy/dx,          y-flux b dx/dy
// cylindrical -a (r u_r)_r - b r u_zz    x-flux a r_f dz/dr,      y-flux b (int r dr)/dz
// spherical  -a sin(t) (r^2 u_r)_r - b (sin(t) u_t)_t
//                                        x-flux a r_f^2 (int sin)/dr, y-flux b sin(t_f) dr/dt
// The face carries the metric weight; the transverse factor is integrated
// over the cell. In the spherical theta flux the r^2 of the volume element
// cancels against the 1/r^2 of the operator, leaving the plain radial width.
double face_weight_x(CoordinateSystem cs, double x) {
    switch (cs) {
        case CoordinateSystem::cartesian: return 1.0;
        case CoordinateSystem::cylindrical: return x;
        case CoordinateSystem::spherical: return x * x;
    }
    return 1.0;
}

double face_weight_y(CoordinateSystem cs, double y) {
    return cs == CoordinateSystem::spherical ? std::sin(y) : 1.0;
}

double cell_measure_x(CoordinateSystem cs, double xlo, double xhi) {
    switch (cs) {
        case CoordinateSystem::cartesian: return xhi - xlo;
        case CoordinateSystem::cylindrical: return 0.5 * (xhi * xhi - xlo * xlo);
        case CoordinateSystem::spherical: return xhi - xlo;
    }
    return xhi - xlo;
}

double cell_measure_y(CoordinateSystem cs, double ylo, double yhi) {
    return cs == CoordinateSystem::spherical ? std::cos(ylo) - std::cos(yhi) : yhi - ylo;
}

}  // namespace

StencilOperator assemble(const LevelGrid& grid, const AnisotropySpec& aniso) {
    if (!(aniso.alpha > 0.0) || !(aniso.beta > 0.0))
        throw std::invalid_argument("alpha/beta must be > 0");
    const int nx = grid.nx, ny = grid.ny;
    const CoordinateSystem cs = grid.coords;
    const std::size_t neq = static_cast<std::size_t>(nx) * ny;

    StencilOperator op;
    op.grid_ref = &grid;
    op.c.assign(neq, 0.0);
    op.n.assign(neq, 0.0);
    op.s.assign(neq, 0.0);
    op.e.assign(neq, 0.0);
    op.w.assign(neq, 0.0);

    // Face positions are node-pair midpoints so that neighboring rows
    // evaluate the identical expression and the matrix is exactly symmetric.
    for (int j = 0; j < ny; ++j) {
        const double fys = 0.5 * (grid.y[j] + grid.y[j + 1]);
        const double fyn = 0.5 * (grid.y[j + 1] + grid.y[j + 2]);
        const double hs = grid.y[j + 1] - grid.y[j];
        const double hn = grid.y[j + 2] - grid.y[j + 1];
        const double my = cell_measure_y(cs, fys, fyn);
        for (int i = 0; i < nx; ++i) {
            const double fxw = 0.5 * (grid.x[i] + grid.x[i + 1]);
            const double fxe = 0.5 * (grid.x[i + 1] + grid.x[i + 2]);
            const double hw = grid.x[i + 1] - grid.x[i];
            const double he = grid.x[i + 2] - grid.x[i + 1];
            const double mx = cell_measure_x(cs, fxw, fxe);

            const double ce = aniso.alpha * face_weight_x(cs, fxe) * my / he;
            const double cw = aniso.alpha * face_weight_x(cs, fxw) * my / hw;
            const double cn = aniso.beta * face_weight_y(cs, fyn) * mx / hn;
            const double csouth = aniso.beta * face_weight_y(cs, fys) * mx / hs;

            const std::size_t k = static_cast<std::size_t>(j) * nx + i;
            op.c[k] = ce + cw + cn + csouth;
            if (i + 1 < nx) op.e[k] = -ce;
            if (i > 0) op.w[k] = -cw;
            if (j + 1 < ny) op.n[k] = -cn;
            if (j > 0) op.s[k] = -csouth;
        }
    }

    op.diagonally_dominant = true;
    for (std::size_t k = 0; k < neq; ++k) {
        const double off = -(op.n[k] + op.s[k] + op.e[k] + op.w[k]);
        if (op.c[k] < off * (1.0 - 1e-14)) op.diagonally_dominant = false;
    }
    return op;
}

GridFunction apply(const StencilOperator& op, const GridFunction& x) {
    if (x.grid == nullptr || x.level() != op.level() || x.nx() != op.nx() || x.ny() != op.ny())
        throw std::logic_error("apply: grid function does not match operator level");
    const int nx = op.nx(), ny = op.ny();
    GridFunction y = GridFunction::zeros(op.grid());
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const std::size_t k = static_cast<std::size_t>(j) * nx + i;
            double acc = op.c[k] * x.v[k];
            if (i > 0) acc += op.w[k] * x.v[k - 1];
            if (i + 1 < nx) acc += op.e[k] * x.v[k + 1];
            if (j > 0) acc += op.s[k] * x.v[k - nx];
            if (j + 1 < ny) acc += op.n[k] * x.v[k + nx];
            y.v[k] = acc;
        }
    }
    return y;
}

GridFunction residual(const StencilOperator& op, const GridFunction& x, const GridFunction& b) {
    require_same_shape(x, b, "residual");
    GridFunction r = apply(op, x);
    for (std::size_t k = 0; k < r.v.size(); ++k) r.v[k] = b.v[k] - r.v[k];
    return r;
}

BandedCholesky::BandedCholesky(const StencilOperator& op)
    : grid_(op.grid_ref), n_(static_cast<int>(op.size())), bw_(op.nx()) {
    band_.assign(static_cast<std::size_t>(bw_ + 1) * n_, 0.0);
    const int nx = op.nx();

    auto entry = [&](int d, int k) -> double& { return band_[static_cast<std::size_t>(d) * n_ + k]; };

    // Load the lower band of A: diagonal, west (d = 1 within a grid row),
    // south (d = nx).
    for (int k = 0; k < n_; ++k) {
        entry(0, k) = op.c[k];
        if (k % nx != 0) entry(1, k) = op.w[k];
        if (k >= nx) entry(bw_, k) = op.s[k];
    }

    // In-place banded Cholesky, L stored in the same layout.
    for (int jcol = 0; jcol < n_; ++jcol) {
        double d = entry(0, jcol);
        for (int m = std::max(0, jcol - bw_); m < jcol; ++m) {
            const double ljm = entry(jcol - m, jcol);
            d -= ljm * ljm;
        }
        if (!(d > 0.0)) throw std::runtime_error("BandedCholesky: matrix not positive definite");
        const double ljj = std::sqrt(d);
        entry(0, jcol) = ljj;
        for (int irow = jcol + 1; irow <= std::min(n_ - 1, jcol + bw_); ++irow) {
            double a = entry(irow - jcol, irow);
            for (int m = std::max(0, irow - bw_); m < jcol; ++m) {
                a -= entry(irow - m, irow) * entry(jcol - m, jcol);
            }
            entry(irow - jcol, irow) = a / ljj;
        }
    }
}

GridFunction BandedCholesky::solve(const GridFunction& b) const {
    if (b.grid == nullptr || b.grid->level != grid_->level || b.nx() != grid_->nx ||
        b.ny() != grid_->ny)
        throw std::logic_error("BandedCholesky::solve: rhs does not match factored level");
    auto entry = [&](int d, int k) -> double { return band_[static_cast<std::size_t>(d) * n_ + k]; };

    GridFunction x = GridFunction::zeros(*grid_);
    // forward substitution L y = b
    for (int k = 0; k < n_; ++k) {
        double acc = b.v[k];
        for (int d = 1; d <= std::min(bw_, k); ++d) acc -= entry(d, k) * x.v[k - d];
        x.v[k] = acc / entry(0, k);
    }
    // back substitution L^T x = y
    for (int k = n_ - 1; k >= 0; --k) {
        double acc = x.v[k];
        for (int d = 1; d <= std::min(bw_, n_ - 1 - k); ++d) acc -= entry(d, k + d) * x.v[k + d];
        x.v[k] = acc / entry(0, k);
    }
    return x;
}

GridFunction direct_solve(const StencilOperator& op, const GridFunction& b) {
    return BandedCholesky(op).solve(b);
}

GridFunction manufactured_solution(const LevelGrid& grid) {
    GridFunction u = GridFunction::zeros(grid);
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            u.at(i, j) = std::sin(std::numbers::pi * grid.unit_x(i)) *
                         std::sin(std::numbers::pi * grid.unit_y(j));
        }
    }
    return u;
}

}  // namespace gmg
