#pragma once

#include "gmg/grid_function.hpp"
#include "gmg/mesh.hpp"

namespace gmg {

/// Bilinear interpolation of a coarse function onto the next finer grid,
/// weighted by the actual node coordinates on graded grids. Fine nodes
/// co-located with coarse nodes copy the coarse value; nodes next to the
/// physical boundary interpolate against the Dirichlet value 0.
GridFunction prolongation(const GridFunction& coarse, const LevelGrid& fine_grid);

/// Full-weighting restriction: the transpose of the prolongation weights,
/// normalized per coarse node so constants map to constants. On uniform
/// grids this is the 9-point (1/4, 1/8, 1/16) stencil.
GridFunction restriction(const GridFunction& fine, const LevelGrid& coarse_grid);

}  // namespace gmg
