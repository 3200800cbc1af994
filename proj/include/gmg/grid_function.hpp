#pragma once

#include <cstddef>
#include <vector>

#include "gmg/mesh.hpp"

namespace gmg {

/// Scalar field on the interior nodes of one level, row-major with x fastest.
/// The boundary is implicitly zero (homogeneous Dirichlet).
struct GridFunction {
    const LevelGrid* grid = nullptr;
    std::vector<double> v;

    static GridFunction zeros(const LevelGrid& g) {
        return GridFunction{&g, std::vector<double>(static_cast<std::size_t>(g.nx) * g.ny, 0.0)};
    }

    int nx() const { return grid->nx; }
    int ny() const { return grid->ny; }
    int level() const { return grid->level; }
    std::size_t size() const { return v.size(); }

    double& at(int i, int j) { return v[static_cast<std::size_t>(j) * grid->nx + i]; }
    double at(int i, int j) const { return v[static_cast<std::size_t>(j) * grid->nx + i]; }
};

double norm_l2(const GridFunction& f);
double norm_inf(const GridFunction& f);
double dot(const GridFunction& a, const GridFunction& b);

/// y += alpha * x
void axpy(double alpha, const GridFunction& x, GridFunction& y);

/// Throws std::logic_error unless a and b live on the same level and shape.
void require_same_shape(const GridFunction& a, const GridFunction& b, const char* what);

}  // namespace gmg
