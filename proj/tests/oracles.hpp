// Test-only dense linear algebra used as independent references. Everything
// here is built directly from definitions (dense matrices, Gaussian
// elimination, explicit interpolation weights) and never calls back into the
// solver paths it checks.
#pragma once

#include <cmath>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

#include "gmg/mesh.hpp"
#include "gmg/smoother.hpp"
#include "gmg/stencil.hpp"

namespace oracle {

struct Dense {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Dense() = default;
    Dense(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}
    double& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    double operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

inline Dense dense_from_operator(const gmg::StencilOperator& op) {
    const int nx = op.nx(), ny = op.ny(), n = nx * ny;
    Dense m(n, n);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const int k = j * nx + i;
            m(k, k) = op.c[k];
            if (i > 0) m(k, k - 1) = op.w[k];
            if (i + 1 < nx) m(k, k + 1) = op.e[k];
            if (j > 0) m(k, k - nx) = op.s[k];
            if (j + 1 < ny) m(k, k + nx) = op.n[k];
        }
    }
    return m;
}

inline std::vector<double> matvec(const Dense& m, const std::vector<double>& x) {
    std::vector<double> y(m.rows, 0.0);
    for (int r = 0; r < m.rows; ++r) {
        double acc = 0.0;
        for (int c = 0; c < m.cols; ++c) acc += m(r, c) * x[c];
        y[r] = acc;
    }
    return y;
}

inline Dense transpose(const Dense& m) {
    Dense t(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) t(c, r) = m(r, c);
    return t;
}

// Gaussian elimination with partial pivoting.
inline std::vector<double> ge_solve(Dense m, std::vector<double> b) {
    const int n = m.rows;
    std::vector<int> perm(n);
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int r = k + 1; r < n; ++r)
            if (std::abs(m(r, k)) > std::abs(m(piv, k))) piv = r;
        if (piv != k) {
            for (int c = 0; c < n; ++c) std::swap(m(k, c), m(piv, c));
            std::swap(b[k], b[piv]);
        }
        if (m(k, k) == 0.0) throw std::runtime_error("ge_solve: singular matrix");
        for (int r = k + 1; r < n; ++r) {
            const double f = m(r, k) / m(k, k);
            if (f == 0.0) continue;
            for (int c = k; c < n; ++c) m(r, c) -= f * m(k, c);
            b[r] -= f * b[k];
        }
    }
    std::vector<double> x(n, 0.0);
    for (int k = n - 1; k >= 0; --k) {
        double acc = b[k];
        for (int c = k + 1; c < n; ++c) acc -= m(k, c) * x[c];
        x[k] = acc / m(k, k);
    }
    return x;
}

// Dense bilinear prolongation matrix built from node coordinates alone.
inline Dense dense_prolongation(const gmg::LevelGrid& coarse, const gmg::LevelGrid& fine) {
    const int nf = fine.nx * fine.ny;
    const int nc = coarse.nx * coarse.ny;
    Dense p(nf, nc);
    // 1-D weight of fine node (node index pf) toward coarse node qc
    auto weight1d = [](const std::vector<double>& xf, const std::vector<double>& xc, int pf,
                       int qc) -> double {
        if (pf % 2 == 0) return pf / 2 == qc ? 1.0 : 0.0;
        const int left = (pf - 1) / 2;
        if (qc == left) return (xc[left + 1] - xf[pf]) / (xc[left + 1] - xc[left]);
        if (qc == left + 1) return (xf[pf] - xc[left]) / (xc[left + 1] - xc[left]);
        return 0.0;
    };
    for (int j = 1; j <= fine.ny; ++j) {
        for (int i = 1; i <= fine.nx; ++i) {
            for (int qj = 1; qj <= coarse.ny; ++qj) {
                for (int qi = 1; qi <= coarse.nx; ++qi) {
                    const double wx = weight1d(fine.x, coarse.x, i, qi);
                    const double wy = weight1d(fine.y, coarse.y, j, qj);
                    if (wx != 0.0 && wy != 0.0)
                        p((j - 1) * fine.nx + (i - 1), (qj - 1) * coarse.nx + (qi - 1)) = wx * wy;
                }
            }
        }
    }
    return p;
}

// Transpose of the prolongation with rows rescaled so each sums to one.
inline Dense dense_restriction(const gmg::LevelGrid& fine, const gmg::LevelGrid& coarse) {
    Dense r = transpose(dense_prolongation(coarse, fine));
    for (int q = 0; q < r.rows; ++q) {
        double sum = 0.0;
        for (int c = 0; c < r.cols; ++c) sum += r(q, c);
        for (int c = 0; c < r.cols; ++c) r(q, c) /= sum;
    }
    return r;
}

// Dense C for the directly expressible preconditioners.
inline Dense dense_preconditioner(gmg::SmootherKind kind, const gmg::StencilOperator& op,
                                  double omega) {
    const Dense a = dense_from_operator(op);
    const int n = a.rows, nx = op.nx();
    Dense c(n, n);
    switch (kind) {
        case gmg::SmootherKind::jacobi:
            for (int k = 0; k < n; ++k) c(k, k) = a(k, k);
            return c;
        case gmg::SmootherKind::gauss_seidel:
        case gmg::SmootherKind::sor:
            for (int k = 0; k < n; ++k) {
                c(k, k) = a(k, k);
                for (int m = 0; m < k; ++m) c(k, m) = omega * a(k, m);
            }
            return c;
        case gmg::SmootherKind::tri_x:
            for (int k = 0; k < n; ++k) {
                c(k, k) = omega * a(k, k);
                if (k % nx != 0) c(k, k - 1) = omega * a(k, k - 1);
                if ((k + 1) % nx != 0) c(k, k + 1) = omega * a(k, k + 1);
            }
            return c;
        case gmg::SmootherKind::tri_y:
            for (int k = 0; k < n; ++k) {
                c(k, k) = omega * a(k, k);
                if (k - nx >= 0) c(k, k - nx) = omega * a(k, k - nx);
                if (k + nx < n) c(k, k + nx) = omega * a(k, k + nx);
            }
            return c;
        case gmg::SmootherKind::gstri_x:
            // x-line tridiagonal plus the full lower y coupling
            for (int k = 0; k < n; ++k) {
                c(k, k) = omega * a(k, k);
                if (k % nx != 0) c(k, k - 1) = omega * a(k, k - 1);
                if ((k + 1) % nx != 0) c(k, k + 1) = omega * a(k, k + 1);
                if (k - nx >= 0) c(k, k - nx) = omega * a(k, k - nx);
            }
            return c;
        case gmg::SmootherKind::gstri_y:
            // y-line tridiagonal plus the lower x coupling in column order
            for (int k = 0; k < n; ++k) {
                c(k, k) = omega * a(k, k);
                if (k - nx >= 0) c(k, k - nx) = omega * a(k, k - nx);
                if (k + nx < n) c(k, k + nx) = omega * a(k, k + nx);
                if (k % nx != 0) c(k, k - 1) = omega * a(k, k - 1);
            }
            return c;
        default:
            throw std::logic_error("dense_preconditioner: composed or scaled kind");
    }
}

// Masked dense ILU(0): eliminate with multipliers only where A is nonzero
// and drop every fill entry.
inline void dense_ilu0(const gmg::StencilOperator& op, Dense& l, Dense& u) {
    const Dense a = dense_from_operator(op);
    const int n = a.rows;
    Dense work = a;
    l = Dense(n, n);
    u = Dense(n, n);
    for (int k = 0; k < n; ++k) l(k, k) = 1.0;
    for (int k = 0; k < n; ++k) {
        for (int r = k + 1; r < n; ++r) {
            if (a(r, k) == 0.0) continue;
            const double f = work(r, k) / work(k, k);
            l(r, k) = f;
            for (int c = k; c < n; ++c) {
                if (r != c && a(r, c) == 0.0) continue;  // zero-fill mask
                work(r, c) -= f * work(k, c);
            }
        }
    }
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) u(r, c) = work(r, c);
}

// z = C^{-1} r for every kind, via dense solves only.
inline std::vector<double> dense_apply_preconditioner(const gmg::SmootherState& state,
                                                      const std::vector<double>& r) {
    const gmg::StencilOperator& op = state.op();
    const gmg::SmootherKind kind = state.spec().kind;
    const double omega = state.spec().omega;
    const Dense a = dense_from_operator(op);

    switch (kind) {
        case gmg::SmootherKind::richardson: {
            std::vector<double> z = r;
            for (double& v : z) v *= state.richardson_omega();
            return z;
        }
        case gmg::SmootherKind::ilu0: {
            Dense l, u;
            dense_ilu0(op, l, u);
            return ge_solve(u, ge_solve(l, r));
        }
        case gmg::SmootherKind::adi:
        case gmg::SmootherKind::gsadi: {
            const auto cx = dense_preconditioner(
                kind == gmg::SmootherKind::adi ? gmg::SmootherKind::tri_x
                                               : gmg::SmootherKind::gstri_x,
                op, omega);
            const auto cy = dense_preconditioner(
                kind == gmg::SmootherKind::adi ? gmg::SmootherKind::tri_y
                                               : gmg::SmootherKind::gstri_y,
                op, omega);
            std::vector<double> z1 = ge_solve(cx, r);
            std::vector<double> az1 = matvec(a, z1);
            std::vector<double> t(r.size());
            for (std::size_t k = 0; k < r.size(); ++k) t[k] = r[k] - az1[k];
            std::vector<double> z2 = ge_solve(cy, t);
            for (std::size_t k = 0; k < r.size(); ++k) z1[k] += z2[k];
            return z1;
        }
        default:
            return ge_solve(dense_preconditioner(kind, op, omega), r);
    }
}

inline std::vector<double> random_vector(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

inline double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace oracle
