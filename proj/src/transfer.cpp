#include "gmg/transfer.hpp"

#include <cmath>
#include <stdexcept>

namespace gmg {

namespace {

void require_nested(const LevelGrid& coarse, const LevelGrid& fine, const char* what) {
    if (fine.level != coarse.level + 1 || fine.nx != 2 * coarse.nx + 1 ||
        fine.ny != 2 * coarse.ny + 1)
        throw std::logic_error(std::string(what) + ": levels are not parent and child");
    for (int q = 0; q < coarse.nx + 2; ++q) {
        if (std::abs(coarse.x[q] - fine.x[2 * q]) > 1e-14)
            throw std::logic_error(std::string(what) + ": grids are not nested");
    }
    for (int q = 0; q < coarse.ny + 2; ++q) {
        if (std::abs(coarse.y[q] - fine.y[2 * q]) > 1e-14)
            throw std::logic_error(std::string(what) + ": grids are not nested");
    }
}

// 1-D interpolation weight of the odd fine node p = 2q+1 toward coarse node
// q+1 (the right neighbor); 1-theta goes to q. Node arrays include boundary.
double odd_weight(const std::vector<double>& xf, const std::vector<double>& xc, int q) {
    return (xf[2 * q + 1] - xc[q]) / (xc[q + 1] - xc[q]);
}

}  // namespace

GridFunction prolongation(const GridFunction& coarse, const LevelGrid& fine_grid) {
    const LevelGrid& cg = *coarse.grid;
    require_nested(cg, fine_grid, "prolongation");

    // coarse node value with boundary nodes treated as 0; q is a node index
    auto cval = [&](int qx, int qy) -> double {
        if (qx < 1 || qx > cg.nx || qy < 1 || qy > cg.ny) return 0.0;
        return coarse.at(qx - 1, qy - 1);
    };

    GridFunction fine = GridFunction::zeros(fine_grid);
    for (int j = 0; j < fine_grid.ny; ++j) {
        const int pj = j + 1;
        for (int i = 0; i < fine_grid.nx; ++i) {
            const int pi = i + 1;
            double val;
            if (pi % 2 == 0 && pj % 2 == 0) {
                val = cval(pi / 2, pj / 2);
            } else if (pi % 2 == 1 && pj % 2 == 0) {
                const int qx = (pi - 1) / 2;
                const double t = odd_weight(fine_grid.x, cg.x, qx);
                val = (1.0 - t) * cval(qx, pj / 2) + t * cval(qx + 1, pj / 2);
            } else if (pi % 2 == 0 && pj % 2 == 1) {
                const int qy = (pj - 1) / 2;
                const double t = odd_weight(fine_grid.y, cg.y, qy);
                val = (1.0 - t) * cval(pi / 2, qy) + t * cval(pi / 2, qy + 1);
            } else {
                const int qx = (pi - 1) / 2;
                const int qy = (pj - 1) / 2;
                const double tx = odd_weight(fine_grid.x, cg.x, qx);
                const double ty = odd_weight(fine_grid.y, cg.y, qy);
                val = (1.0 - tx) * (1.0 - ty) * cval(qx, qy) + tx * (1.0 - ty) * cval(qx + 1, qy) +
                      (1.0 - tx) * ty * cval(qx, qy + 1) + tx * ty * cval(qx + 1, qy + 1);
            }
            fine.at(i, j) = val;
        }
    }
    return fine;
}

GridFunction restriction(const GridFunction& fine, const LevelGrid& coarse_grid) {
    const LevelGrid& fg = *fine.grid;
    require_nested(coarse_grid, fg, "restriction");

    GridFunction coarse = GridFunction::zeros(coarse_grid);
    for (int qj = 1; qj <= coarse_grid.ny; ++qj) {
        // weights of the odd fine neighbors toward coarse node qj, and the
        // column sum of the 1-D prolongation (used for normalization)
        const double wys = odd_weight(fg.y, coarse_grid.y, qj - 1);        // node 2qj-1
        const double wyn = 1.0 - odd_weight(fg.y, coarse_grid.y, qj);      // node 2qj+1
        const double sy = wys + 1.0 + wyn;
        for (int qi = 1; qi <= coarse_grid.nx; ++qi) {
            const double wxw = odd_weight(fg.x, coarse_grid.x, qi - 1);
            const double wxe = 1.0 - odd_weight(fg.x, coarse_grid.x, qi);
            const double sx = wxw + 1.0 + wxe;

            const double wx[3] = {wxw, 1.0, wxe};
            const double wy[3] = {wys, 1.0, wyn};
            double acc = 0.0;
            for (int dj = -1; dj <= 1; ++dj) {
                for (int di = -1; di <= 1; ++di) {
                    // fine node (2qi+di, 2qj+dj) is always interior
                    acc += wx[di + 1] * wy[dj + 1] * fine.at(2 * qi + di - 1, 2 * qj + dj - 1);
                }
            }
            coarse.at(qi - 1, qj - 1) = acc / (sx * sy);
        }
    }
    return coarse;
}

}  // namespace gmg
