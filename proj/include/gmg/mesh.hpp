#pragma once

#include <string>
#include <vector>

namespace gmg {

enum class CoordinateSystem { cartesian, cylindrical, spherical };

const char* to_string(CoordinateSystem cs);
CoordinateSystem parse_coordinate_system(const std::string& name);

/// Ratio between adjacent cell widths along each axis; 1 means equidistant.
struct GradingSpec {
    double factor_x = 1.0;
    double factor_y = 1.0;
};

/// Radial axes start away from r = 0 and polar axes away from sin(theta) = 0
/// so the metric coefficients stay positive and bounded.
inline constexpr double kRadialMin = 0.1;
inline constexpr double kPolarMargin = 0.1;

struct AxisRange {
    double lo = 0.0;
    double hi = 1.0;
};

/// Physical extent of an axis: the computational unit square maps to
/// [0,1]x[0,1] (cartesian), [r_min,1]x[0,1] (cylindrical, x = r), or
/// [r_min,1]x[theta_min,pi-theta_min] (spherical, x = r, y = theta).
AxisRange axis_range(CoordinateSystem cs, int axis);

/// One structured tensor-product grid. Node coordinate arrays include the
/// two boundary nodes, so x has nx+2 entries and y has ny+2; interior node
/// (i,j) with 0 <= i < nx sits at (x[i+1], y[j+1]).
struct LevelGrid {
    int level = 1;
    int nx = 0;
    int ny = 0;
    std::vector<double> x;
    std::vector<double> y;
    CoordinateSystem coords = CoordinateSystem::cartesian;

    /// Interior node position mapped back to the computational unit square.
    double unit_x(int i) const;
    double unit_y(int j) const;
};

/// Nested grids ordered coarsest (level 1) to finest. Every node of level k
/// coincides with a node of level k+1.
struct GridHierarchy {
    std::vector<LevelGrid> levels;
    GradingSpec grading;
    CoordinateSystem coords = CoordinateSystem::cartesian;

    int num_levels() const { return static_cast<int>(levels.size()); }
    const LevelGrid& level(int l) const { return levels.at(l - 1); }
    const LevelGrid& finest() const { return levels.back(); }
};

/// Node coordinates over [0,1] for n interior points whose n+1 cell widths
/// form a geometric sequence with the given ratio. factor = 1 gives the
/// equidistant spacing 1/(n+1).
std::vector<double> grade_axis(int n, double factor);

/// Builds num_levels nested grids: level k has 2^(k-1)*(n0+1)-1 interior
/// points per direction. The finest level is graded with grade_axis and each
/// coarser level keeps every second node, so all levels share one geometry.
GridHierarchy build_hierarchy(int num_levels, int coarse_nx, int coarse_ny,
                              const GradingSpec& grading, CoordinateSystem coords);

}  // namespace gmg
