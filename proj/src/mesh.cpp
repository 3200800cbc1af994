#include "gmg/mesh.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gmg {

const char* to_string(CoordinateSystem cs) {
    switch (cs) {
        case CoordinateSystem::cartesian: return "cartesian";
        case CoordinateSystem::cylindrical: return "cylindrical";
        case CoordinateSystem::spherical: return "spherical";
    }
    return "?";
}

CoordinateSystem parse_coordinate_system(const std::string& name) {
    if (name == "cartesian") return CoordinateSystem::cartesian;
    if (name == "cylindrical") return CoordinateSystem::cylindrical;
    if (name == "spherical") return CoordinateSystem::spherical;
    throw std::invalid_argument("coords: unknown coordinate system '" + name + "'");
}

AxisRange axis_range(CoordinateSystem cs, int axis) {
    switch (cs) {
        case CoordinateSystem::cartesian:
            return {0.0, 1.0};
        case CoordinateSystem::cylindrical:
            return axis == 0 ? AxisRange{kRadialMin, 1.0} : AxisRange{0.0, 1.0};
        case CoordinateSystem::spherical:
            return axis == 0 ? AxisRange{kRadialMin, 1.0}
                             : AxisRange{kPolarMargin, std::numbers::pi - kPolarMargin};
    }
    return {0.0, 1.0};
}

double LevelGrid::unit_x(int i) const {
    const AxisRange r = axis_range(coords, 0);
    return (x[i + 1] - r.lo) / (r.hi - r.lo);
}

double LevelGrid::unit_y(int j) const {
    const AxisRange r = axis_range(coords, 1);
    return (y[j + 1] - r.lo) / (r.hi - r.lo);
}

std::vector<double> grade_axis(int n, double factor) {
    if (n < 1) throw std::invalid_argument("grade_axis: n must be >= 1");
    if (!(factor > 0.0)) throw std::invalid_argument("grade_axis: factor must be > 0");

    const int cells = n + 1;
    // First width from the geometric sum w0 * (factor^cells - 1)/(factor - 1) = 1.
    double w0;
    if (factor == 1.0) {
        w0 = 1.0 / cells;
    } else {
        w0 = (factor - 1.0) / (std::pow(factor, cells) - 1.0);
    }

    std::vector<double> coords(n + 2);
    coords[0] = 0.0;
    double width = w0;
    for (int i = 1; i <= n; ++i) {
        coords[i] = coords[i - 1] + width;
        width *= factor;
    }
    coords[n + 1] = 1.0;

    for (int i = 0; i <= n; ++i) {
        if (!(coords[i] < coords[i + 1]))
            throw std::invalid_argument("grade_axis: factor too extreme for n points");
    }
    return coords;
}

namespace {

std::vector<double> physical_axis(int n, double factor, AxisRange range) {
    std::vector<double> u = grade_axis(n, factor);
    std::vector<double> p(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) p[i] = range.lo + (range.hi - range.lo) * u[i];
    p.front() = range.lo;
    p.back() = range.hi;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        // graded widths can fall below the spacing representable around
        // range.lo; reject instead of producing zero-width cells
        if (!(p[i] < p[i + 1]))
            throw std::invalid_argument(
                "grading: factor too extreme for this resolution and axis range");
    }
    return p;
}

std::vector<double> every_second_node(const std::vector<double>& fine) {
    std::vector<double> coarse((fine.size() - 1) / 2 + 1);
    for (std::size_t q = 0; q < coarse.size(); ++q) coarse[q] = fine[2 * q];
    return coarse;
}

}  // namespace

GridHierarchy build_hierarchy(int num_levels, int coarse_nx, int coarse_ny,
                              const GradingSpec& grading, CoordinateSystem coords) {
    if (num_levels < 1) throw std::invalid_argument("levels: must be >= 1");
    if (coarse_nx < 1 || coarse_ny < 1)
        throw std::invalid_argument("coarse_n: interior counts must be >= 1");
    if (!(grading.factor_x > 0.0) || !(grading.factor_y > 0.0))
        throw std::invalid_argument("grading: factors must be > 0");

    const int fine_nx = ((coarse_nx + 1) << (num_levels - 1)) - 1;
    const int fine_ny = ((coarse_ny + 1) << (num_levels - 1)) - 1;

    GridHierarchy h;
    h.grading = grading;
    h.coords = coords;
    h.levels.resize(num_levels);

    LevelGrid& finest = h.levels[num_levels - 1];
    finest.level = num_levels;
    finest.nx = fine_nx;
    finest.ny = fine_ny;
    finest.x = physical_axis(fine_nx, grading.factor_x, axis_range(coords, 0));
    finest.y = physical_axis(fine_ny, grading.factor_y, axis_range(coords, 1));
    finest.coords = coords;

    for (int l = num_levels - 1; l >= 1; --l) {
        const LevelGrid& fine = h.levels[l];
        LevelGrid& coarse = h.levels[l - 1];
        coarse.level = l;
        coarse.nx = (fine.nx - 1) / 2;
        coarse.ny = (fine.ny - 1) / 2;
        coarse.x = every_second_node(fine.x);
        coarse.y = every_second_node(fine.y);
        coarse.coords = coords;
    }
    return h;
}

}  // namespace gmg
