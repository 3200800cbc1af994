#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gmg/transfer.hpp"
#include "oracles.hpp"

using namespace gmg;

TEST_CASE("prolongation: uniform delta spreads with bilinear weights") {
    const auto h = build_hierarchy(2, 1, 1, {}, CoordinateSystem::cartesian);
    GridFunction coarse = GridFunction::zeros(h.level(1));
    coarse.v[0] = 1.0;
    const auto fine = prolongation(coarse, h.level(2));
    const double expect[3][3] = {{0.25, 0.5, 0.25}, {0.5, 1.0, 0.5}, {0.25, 0.5, 0.25}};
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) CHECK(fine.at(i, j) == doctest::Approx(expect[j][i]));
}

TEST_CASE("prolongation: constants survive away from the boundary") {
    const auto h = build_hierarchy(2, 3, 3, {}, CoordinateSystem::cartesian);
    GridFunction coarse = GridFunction::zeros(h.level(1));
    for (double& v : coarse.v) v = 1.0;
    const auto fine = prolongation(coarse, h.level(2));
    for (int j = 1; j < fine.ny() - 1; ++j)
        for (int i = 1; i < fine.nx() - 1; ++i)
            CHECK(fine.at(i, j) == doctest::Approx(1.0).epsilon(1e-14));
    // nodes next to the boundary interpolate against the Dirichlet zero
    CHECK(fine.at(0, 3) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(fine.at(0, 0) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("prolongation: graded grids match the dense coordinate-ratio oracle") {
    GradingSpec g;
    g.factor_x = 4.0;
    g.factor_y = 0.5;
    const auto h = build_hierarchy(2, 3, 3, g, CoordinateSystem::cartesian);
    GridFunction coarse = GridFunction::zeros(h.level(1));
    coarse.v = oracle::random_vector(coarse.size(), 17u);

    const auto fine = prolongation(coarse, h.level(2));
    const auto p = oracle::dense_prolongation(h.level(1), h.level(2));
    const auto fd = oracle::matvec(p, coarse.v);
    for (std::size_t k = 0; k < fine.size(); ++k)
        CHECK(fine.v[k] == doctest::Approx(fd[k]).epsilon(1e-13));
}

TEST_CASE("restriction: constants map to constants on every grid tried") {
    GradingSpec g;
    g.factor_x = 3.0;
    for (auto cs : {CoordinateSystem::cartesian, CoordinateSystem::spherical}) {
        const auto h = build_hierarchy(3, 1, 2, g, cs);
        for (int l = 1; l < 3; ++l) {
            GridFunction fine = GridFunction::zeros(h.level(l + 1));
            for (double& v : fine.v) v = 1.0;
            const auto coarse = restriction(fine, h.level(l));
            for (double v : coarse.v) CHECK(v == doctest::Approx(1.0).epsilon(1e-13));
        }
    }
}

TEST_CASE("restriction: co-located delta lands with weight 1/4") {
    const auto h = build_hierarchy(2, 3, 3, {}, CoordinateSystem::cartesian);
    GridFunction fine = GridFunction::zeros(h.level(2));
    fine.at(3, 3) = 1.0;  // fine node (4,4) = coarse node (2,2)
    const auto coarse = restriction(fine, h.level(1));
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i)
            CHECK(coarse.at(i, j) == doctest::Approx(i == 1 && j == 1 ? 0.25 : 0.0));
}

TEST_CASE("restriction: random field matches the dense transpose oracle") {
    GradingSpec g;
    g.factor_y = 4.0;
    const auto h = build_hierarchy(2, 3, 3, g, CoordinateSystem::cylindrical);
    GridFunction fine = GridFunction::zeros(h.level(2));
    fine.v = oracle::random_vector(fine.size(), 23u);

    const auto coarse = restriction(fine, h.level(1));
    const auto r = oracle::dense_restriction(h.level(2), h.level(1));
    const auto cd = oracle::matvec(r, fine.v);
    for (std::size_t k = 0; k < coarse.size(); ++k)
        CHECK(coarse.v[k] == doctest::Approx(cd[k]).epsilon(1e-13));
}

TEST_CASE("transpose relation: uniform restriction equals P^T / 4 exactly") {
    const auto h = build_hierarchy(2, 3, 3, {}, CoordinateSystem::cartesian);
    const int nf = h.level(2).nx * h.level(2).ny;
    const int nc = h.level(1).nx * h.level(1).ny;

    // dense matrices of both library operators, column by column
    oracle::Dense p(nf, nc), r(nc, nf);
    for (int q = 0; q < nc; ++q) {
        GridFunction e = GridFunction::zeros(h.level(1));
        e.v[q] = 1.0;
        const auto col = prolongation(e, h.level(2));
        for (int k = 0; k < nf; ++k) p(k, q) = col.v[k];
    }
    for (int k = 0; k < nf; ++k) {
        GridFunction e = GridFunction::zeros(h.level(2));
        e.v[k] = 1.0;
        const auto col = restriction(e, h.level(1));
        for (int q = 0; q < nc; ++q) r(q, k) = col.v[q];
    }
    for (int q = 0; q < nc; ++q)
        for (int k = 0; k < nf; ++k) CHECK(r(q, k) == p(k, q) / 4.0);
}

TEST_CASE("linearity of both transfers") {
    GradingSpec g;
    g.factor_x = 2.0;
    const auto h = build_hierarchy(2, 2, 3, g, CoordinateSystem::cartesian);

    GridFunction a = GridFunction::zeros(h.level(1));
    GridFunction b = GridFunction::zeros(h.level(1));
    a.v = oracle::random_vector(a.size(), 31u);
    b.v = oracle::random_vector(b.size(), 32u);
    GridFunction lin = GridFunction::zeros(h.level(1));
    for (std::size_t k = 0; k < lin.size(); ++k) lin.v[k] = 2.0 * a.v[k] - 3.0 * b.v[k];

    const auto pa = prolongation(a, h.level(2));
    const auto pb = prolongation(b, h.level(2));
    const auto plin = prolongation(lin, h.level(2));
    for (std::size_t k = 0; k < plin.size(); ++k)
        CHECK(plin.v[k] == doctest::Approx(2.0 * pa.v[k] - 3.0 * pb.v[k]).epsilon(1e-14));

    GridFunction fa = GridFunction::zeros(h.level(2));
    GridFunction fb = GridFunction::zeros(h.level(2));
    fa.v = oracle::random_vector(fa.size(), 33u);
    fb.v = oracle::random_vector(fb.size(), 34u);
    GridFunction flin = GridFunction::zeros(h.level(2));
    for (std::size_t k = 0; k < flin.size(); ++k) flin.v[k] = 0.5 * fa.v[k] + 4.0 * fb.v[k];

    const auto ra = restriction(fa, h.level(1));
    const auto rb = restriction(fb, h.level(1));
    const auto rlin = restriction(flin, h.level(1));
    for (std::size_t k = 0; k < rlin.size(); ++k)
        CHECK(rlin.v[k] == doctest::Approx(0.5 * ra.v[k] + 4.0 * rb.v[k]).epsilon(1e-14));
}

TEST_CASE("transfers reject non-nested levels") {
    const auto h = build_hierarchy(3, 1, 1, {}, CoordinateSystem::cartesian);
    const auto f = GridFunction::zeros(h.level(3));
    CHECK_THROWS_AS(restriction(f, h.level(1)), std::logic_error);  // skips a level
    const auto c = GridFunction::zeros(h.level(1));
    CHECK_THROWS_AS(prolongation(c, h.level(3)), std::logic_error);
}
