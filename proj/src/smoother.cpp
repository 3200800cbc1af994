#include "gmg/smoother.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace gmg {

const char* to_string(SmootherKind k) {
    switch (k) {
        case SmootherKind::richardson: return "richardson";
        case SmootherKind::jacobi: return "jacobi";
        case SmootherKind::gauss_seidel: return "gauss_seidel";
        case SmootherKind::sor: return "sor";
        case SmootherKind::ilu0: return "ilu0";
        case SmootherKind::tri_x: return "tri_x";
        case SmootherKind::tri_y: return "tri_y";
        case SmootherKind::adi: return "adi";
        case SmootherKind::gstri_x: return "gstri_x";
        case SmootherKind::gstri_y: return "gstri_y";
        case SmootherKind::gsadi: return "gsadi";
    }
    return "?";
}

std::vector<SmootherKind> all_smoother_kinds() {
    return {SmootherKind::richardson, SmootherKind::jacobi,  SmootherKind::gauss_seidel,
            SmootherKind::sor,        SmootherKind::ilu0,    SmootherKind::tri_x,
            SmootherKind::tri_y,      SmootherKind::adi,     SmootherKind::gstri_x,
            SmootherKind::gstri_y,    SmootherKind::gsadi};
}

SmootherKind parse_smoother_kind(const std::string& name) {
    for (SmootherKind k : all_smoother_kinds())
        if (name == to_string(k)) return k;
    throw std::invalid_argument("smoother: unknown kind '" + name + "'");
}

namespace {

bool uses_x_lines(SmootherKind k) {
    return k == SmootherKind::tri_x || k == SmootherKind::adi || k == SmootherKind::gstri_x ||
           k == SmootherKind::gsadi;
}

bool uses_y_lines(SmootherKind k) {
    return k == SmootherKind::tri_y || k == SmootherKind::adi || k == SmootherKind::gstri_y ||
           k == SmootherKind::gsadi;
}

void check_omega(const SmootherSpec& spec) {
    const double w = spec.omega;
    switch (spec.kind) {
        case SmootherKind::richardson:
        case SmootherKind::jacobi:
        case SmootherKind::ilu0:
            if (!(w > 0.0)) throw std::invalid_argument("smoother_omega: must be > 0");
            return;
        case SmootherKind::gauss_seidel:
        case SmootherKind::sor:
            if (!(w > 0.0 && w < 2.0))
                throw std::invalid_argument("smoother_omega: must be in (0, 2) for gauss_seidel/sor");
            return;
        default:
            if (!(w > 0.0 && w <= 1.0))
                throw std::invalid_argument("smoother_omega: must be in (0, 1] for line smoothers");
            return;
    }
}

// Thomas factorization of the tridiagonal systems omega*(D + sub + sup)
// taken along every grid row (x lines). Layout: one entry per unknown in
// each of sub (multipliers), diag (pivots), sup.
void factor_lines_x(const StencilOperator& A, double omega, double* sub, double* diag,
                    double* sup) {
    const int nx = A.nx(), ny = A.ny();
    for (int j = 0; j < ny; ++j) {
        const std::size_t base = static_cast<std::size_t>(j) * nx;
        for (int i = 0; i < nx; ++i) {
            diag[base + i] = omega * A.c[base + i];
            sub[base + i] = omega * A.w[base + i];
            sup[base + i] = omega * A.e[base + i];
        }
        for (int i = 1; i < nx; ++i) {
            const std::size_t k = base + i;
            if (diag[k - 1] == 0.0) throw std::runtime_error("tri factorization: zero pivot");
            const double m = sub[k] / diag[k - 1];
            diag[k] -= m * sup[k - 1];
            sub[k] = m;
        }
    }
}

// Same along grid columns (y lines), stride nx: the defect is virtually
// transposed by switching strides instead of moving data.
void factor_lines_y(const StencilOperator& A, double omega, double* sub, double* diag,
                    double* sup) {
    const int nx = A.nx(), ny = A.ny();
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            const std::size_t k = static_cast<std::size_t>(j) * nx + i;
            diag[k] = omega * A.c[k];
            sub[k] = omega * A.s[k];
            sup[k] = omega * A.n[k];
        }
        for (int j = 1; j < ny; ++j) {
            const std::size_t k = static_cast<std::size_t>(j) * nx + i;
            const std::size_t km = k - nx;
            if (diag[km] == 0.0) throw std::runtime_error("tri factorization: zero pivot");
            const double m = sub[k] / diag[km];
            diag[k] -= m * sup[km];
            sub[k] = m;
        }
    }
}

void solve_one_line_x(int j, int nx, const double* sub, const double* diag, const double* sup,
                      double* z) {
    const std::size_t base = static_cast<std::size_t>(j) * nx;
    for (int i = 1; i < nx; ++i) z[base + i] -= sub[base + i] * z[base + i - 1];
    z[base + nx - 1] /= diag[base + nx - 1];
    for (int i = nx - 2; i >= 0; --i)
        z[base + i] = (z[base + i] - sup[base + i] * z[base + i + 1]) / diag[base + i];
}

void solve_one_line_y(int i, int nx, int ny, const double* sub, const double* diag,
                      const double* sup, double* z) {
    for (int j = 1; j < ny; ++j) {
        const std::size_t k = static_cast<std::size_t>(j) * nx + i;
        z[k] -= sub[k] * z[k - nx];
    }
    const std::size_t last = static_cast<std::size_t>(ny - 1) * nx + i;
    z[last] /= diag[last];
    for (int j = ny - 2; j >= 0; --j) {
        const std::size_t k = static_cast<std::size_t>(j) * nx + i;
        z[k] = (z[k] - sup[k] * z[k + nx]) / diag[k];
    }
}

void solve_lines_x(int nx, int ny, const double* sub, const double* diag, const double* sup,
                   const double* r, double* z) {
    const std::size_t neq = static_cast<std::size_t>(nx) * ny;
    for (std::size_t k = 0; k < neq; ++k) z[k] = r[k];
    for (int j = 0; j < ny; ++j) solve_one_line_x(j, nx, sub, diag, sup, z);
}

void solve_lines_y(int nx, int ny, const double* sub, const double* diag, const double* sup,
                   const double* r, double* z) {
    const std::size_t neq = static_cast<std::size_t>(nx) * ny;
    for (std::size_t k = 0; k < neq; ++k) z[k] = r[k];
    for (int i = 0; i < nx; ++i) solve_one_line_y(i, nx, ny, sub, diag, sup, z);
}

// Line Gauss-Seidel sweeps: C = omega*(D + Tx + S), solved row by row with
// the already-computed southern neighbors folded into the right-hand side.
void solve_gstri_x(const StencilOperator& A, double omega, const double* sub, const double* diag,
                   const double* sup, const double* r, double* z) {
    const int nx = A.nx(), ny = A.ny();
    for (int j = 0; j < ny; ++j) {
        const std::size_t base = static_cast<std::size_t>(j) * nx;
        for (int i = 0; i < nx; ++i) {
            double rhs = r[base + i];
            if (j > 0) rhs -= omega * A.s[base + i] * z[base + i - nx];
            z[base + i] = rhs;
        }
        solve_one_line_x(j, nx, sub, diag, sup, z);
    }
}

void solve_gstri_y(const StencilOperator& A, double omega, const double* sub, const double* diag,
                   const double* sup, const double* r, double* z) {
    const int nx = A.nx(), ny = A.ny();
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            const std::size_t k = static_cast<std::size_t>(j) * nx + i;
            double rhs = r[k];
            if (i > 0) rhs -= omega * A.w[k] * z[k - 1];
            z[k] = rhs;
        }
        solve_one_line_y(i, nx, ny, sub, diag, sup, z);
    }
}

// Zero-fill incomplete factorization on the five-diagonal pattern,
// A = L'U' + R. Stored diagonals: multipliers lw, ls, pivots d, and copies
// of the upper couplings e, n.
void factor_ilu0(const StencilOperator& A, double* lw, double* ls, double* d, double* ue,
                 double* un) {
    const int nx = A.nx(), ny = A.ny();
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const std::size_t k = static_cast<std::size_t>(j) * nx + i;
            double piv = A.c[k];
            lw[k] = 0.0;
            ls[k] = 0.0;
            if (i > 0) {
                lw[k] = A.w[k] / d[k - 1];
                piv -= lw[k] * ue[k - 1];
            }
            if (j > 0) {
                ls[k] = A.s[k] / d[k - nx];
                piv -= ls[k] * un[k - nx];
            }
            if (piv <= 0.0) throw std::runtime_error("ilu0 factorization: nonpositive pivot");
            d[k] = piv;
            ue[k] = A.e[k];
            un[k] = A.n[k];
        }
    }
}

GridFunction power_apply_A(const StencilOperator& A, int iterations, double* lambda_out) {
    GridFunction x = GridFunction::zeros(A.grid());
    std::mt19937 rng(0x2d5a11u);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (double& v : x.v) v = dist(rng);
    double lambda = 0.0;
    for (int t = 0; t < iterations; ++t) {
        GridFunction y = apply(A, x);
        lambda = norm_l2(y);
        if (lambda == 0.0) break;
        for (std::size_t k = 0; k < y.v.size(); ++k) y.v[k] /= lambda;
        x = std::move(y);
    }
    *lambda_out = lambda;
    return x;
}

}  // namespace

SmootherState setup(const SmootherSpec& spec, const StencilOperator& op) {
    check_omega(spec);

    SmootherState st;
    st.spec_ = spec;
    st.op_ = &op;
    const std::size_t neq = op.size();

    switch (spec.kind) {
        case SmootherKind::richardson: {
            double lambda = 0.0;
            power_apply_A(op, 20, &lambda);
            st.rich_lambda_ = lambda;
            if (lambda > 0.0 && spec.omega > 1.0 / lambda) {
                st.rich_omega_ = 0.9 / lambda;
                st.rich_clamped_ = true;
            } else {
                st.rich_omega_ = spec.omega;
            }
            break;
        }
        case SmootherKind::jacobi:
        case SmootherKind::gauss_seidel:
        case SmootherKind::sor:
            break;
        case SmootherKind::ilu0: {
            st.ws_.assign(5 * neq, 0.0);
            double* p = st.ws_.data();
            factor_ilu0(op, p, p + neq, p + 2 * neq, p + 3 * neq, p + 4 * neq);
            break;
        }
        default: {
            const bool fx = uses_x_lines(spec.kind);
            const bool fy = uses_y_lines(spec.kind);
            st.ws_.assign(3 * neq * (static_cast<std::size_t>(fx) + fy), 0.0);
            double* p = st.ws_.data();
            if (fx) {
                factor_lines_x(op, spec.omega, p, p + neq, p + 2 * neq);
                p += 3 * neq;
            }
            if (fy) factor_lines_y(op, spec.omega, p, p + neq, p + 2 * neq);
            break;
        }
    }
    return st;
}

GridFunction apply_preconditioner(const SmootherState& state, const GridFunction& r) {
    const StencilOperator& A = state.op();
    if (r.grid == nullptr || r.level() != A.level() || r.nx() != A.nx() || r.ny() != A.ny())
        throw std::logic_error("apply_preconditioner: defect does not match operator level");

    const int nx = A.nx(), ny = A.ny();
    const std::size_t neq = A.size();
    const double omega = state.spec().omega;
    GridFunction z = GridFunction::zeros(A.grid());

    switch (state.spec().kind) {
        case SmootherKind::richardson:
            for (std::size_t k = 0; k < neq; ++k) z.v[k] = state.richardson_omega() * r.v[k];
            break;

        case SmootherKind::jacobi:
            for (std::size_t k = 0; k < neq; ++k) z.v[k] = r.v[k] / A.c[k];
            break;

        case SmootherKind::gauss_seidel:
        case SmootherKind::sor:
            // forward substitution with C = D + omega L
            for (int j = 0; j < ny; ++j) {
                for (int i = 0; i < nx; ++i) {
                    const std::size_t k = static_cast<std::size_t>(j) * nx + i;
                    double acc = r.v[k];
                    if (i > 0) acc -= omega * A.w[k] * z.v[k - 1];
                    if (j > 0) acc -= omega * A.s[k] * z.v[k - nx];
                    z.v[k] = acc / A.c[k];
                }
            }
            break;

        case SmootherKind::ilu0: {
            const double* lw = state.ws_.data();
            const double* ls = lw + neq;
            const double* d = lw + 2 * neq;
            const double* ue = lw + 3 * neq;
            const double* un = lw + 4 * neq;
            // L'y = r (unit lower), then U'z = y
            for (int j = 0; j < ny; ++j) {
                for (int i = 0; i < nx; ++i) {
                    const std::size_t k = static_cast<std::size_t>(j) * nx + i;
                    double acc = r.v[k];
                    if (i > 0) acc -= lw[k] * z.v[k - 1];
                    if (j > 0) acc -= ls[k] * z.v[k - nx];
                    z.v[k] = acc;
                }
            }
            for (int j = ny - 1; j >= 0; --j) {
                for (int i = nx - 1; i >= 0; --i) {
                    const std::size_t k = static_cast<std::size_t>(j) * nx + i;
                    double acc = z.v[k];
                    if (i + 1 < nx) acc -= ue[k] * z.v[k + 1];
                    if (j + 1 < ny) acc -= un[k] * z.v[k + nx];
                    z.v[k] = acc / d[k];
                }
            }
            break;
        }

        case SmootherKind::tri_x: {
            const double* p = state.ws_.data();
            solve_lines_x(nx, ny, p, p + neq, p + 2 * neq, r.v.data(), z.v.data());
            break;
        }

        case SmootherKind::tri_y: {
            const double* p = state.ws_.data();
            solve_lines_y(nx, ny, p, p + neq, p + 2 * neq, r.v.data(), z.v.data());
            break;
        }

        case SmootherKind::adi: {
            // x-line solve, then y-line solve on the updated defect
            const double* px = state.ws_.data();
            const double* py = px + 3 * neq;
            solve_lines_x(nx, ny, px, px + neq, px + 2 * neq, r.v.data(), z.v.data());
            GridFunction t = residual(A, z, r);  // r - A z1
            GridFunction z2 = GridFunction::zeros(A.grid());
            solve_lines_y(nx, ny, py, py + neq, py + 2 * neq, t.v.data(), z2.v.data());
            for (std::size_t k = 0; k < neq; ++k) z.v[k] += z2.v[k];
            break;
        }

        case SmootherKind::gstri_x: {
            const double* p = state.ws_.data();
            solve_gstri_x(A, omega, p, p + neq, p + 2 * neq, r.v.data(), z.v.data());
            break;
        }

        case SmootherKind::gstri_y: {
            const double* p = state.ws_.data();
            solve_gstri_y(A, omega, p, p + neq, p + 2 * neq, r.v.data(), z.v.data());
            break;
        }

        case SmootherKind::gsadi: {
            const double* px = state.ws_.data();
            const double* py = px + 3 * neq;
            solve_gstri_x(A, omega, px, px + neq, px + 2 * neq, r.v.data(), z.v.data());
            GridFunction t = residual(A, z, r);
            GridFunction z2 = GridFunction::zeros(A.grid());
            solve_gstri_y(A, omega, py, py + neq, py + 2 * neq, t.v.data(), z2.v.data());
            for (std::size_t k = 0; k < neq; ++k) z.v[k] += z2.v[k];
            break;
        }
    }
    return z;
}

GridFunction smooth_step(const SmootherState& state, const GridFunction& x, const GridFunction& b,
                         double omega_damp) {
    if (!(omega_damp > 0.0)) throw std::invalid_argument("omega: damping must be > 0");
    require_same_shape(x, b, "smooth_step");
    GridFunction defect = apply(state.op(), x);
    for (std::size_t k = 0; k < defect.v.size(); ++k) defect.v[k] -= b.v[k];
    GridFunction z = apply_preconditioner(state, defect);
    GridFunction out = x;
    for (std::size_t k = 0; k < out.v.size(); ++k) out.v[k] -= omega_damp * z.v[k];
    return out;
}

double estimate_contraction(const SmootherState& state, double omega_damp, int iterations) {
    if (iterations < 10) throw std::invalid_argument("estimate_contraction: iterations must be >= 10");
    const StencilOperator& A = state.op();
    GridFunction x = GridFunction::zeros(A.grid());
    std::mt19937 rng(0x9e3779b9u);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (double& v : x.v) v = dist(rng);
    const double n0 = norm_l2(x);
    for (double& v : x.v) v /= n0;

    const GridFunction zero_rhs = GridFunction::zeros(A.grid());
    double ratio = 0.0;
    for (int t = 0; t < iterations; ++t) {
        GridFunction xn = smooth_step(state, x, zero_rhs, omega_damp);
        ratio = norm_l2(xn);
        if (ratio == 0.0) return 0.0;
        for (double& v : xn.v) v /= ratio;
        x = std::move(xn);
    }
    return ratio;
}

}  // namespace gmg
