#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gmg/mesh.hpp"

using namespace gmg;

TEST_CASE("grade_axis: equidistant") {
    const auto c = grade_axis(3, 1.0);
    REQUIRE(c.size() == 5);
    const double expect[5] = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (int i = 0; i < 5; ++i) CHECK(c[i] == doctest::Approx(expect[i]).epsilon(1e-15));
}

TEST_CASE("grade_axis: n=1 factor=2 puts the node at 1/3") {
    // widths w and 2w must sum to 1
    const auto c = grade_axis(1, 2.0);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == 0.0);
    CHECK(c[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(c[2] == 1.0);
}

TEST_CASE("grade_axis: n=3 factor=4 against the geometric-sum equation") {
    // solve w * (1 + 4 + 16 + 64) = 1 independently
    double sum = 0.0, f = 1.0;
    for (int i = 0; i < 4; ++i) {
        sum += f;
        f *= 4.0;
    }
    const double w = 1.0 / sum;
    CHECK(w == doctest::Approx(1.0 / 85.0).epsilon(1e-15));

    const auto c = grade_axis(3, 4.0);
    CHECK(c[1] == doctest::Approx(w).epsilon(1e-14));
    CHECK(c[2] == doctest::Approx(5.0 * w).epsilon(1e-14));
    CHECK(c[3] == doctest::Approx(21.0 * w).epsilon(1e-14));
    CHECK(c[4] == 1.0);
}

TEST_CASE("grade_axis: widths form a geometric sequence with the given ratio") {
    for (double factor : {0.5, 1.0, 1.7, 4.0}) {
        const auto c = grade_axis(7, factor);
        for (int i = 0; i + 2 < static_cast<int>(c.size()); ++i) {
            const double r = (c[i + 2] - c[i + 1]) / (c[i + 1] - c[i]);
            CHECK(r == doctest::Approx(factor).epsilon(1e-12));
        }
    }
}

TEST_CASE("grade_axis: invalid arguments") {
    CHECK_THROWS_AS(grade_axis(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(grade_axis(3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(grade_axis(3, -2.0), std::invalid_argument);
}

TEST_CASE("build_hierarchy: single level") {
    const auto h = build_hierarchy(1, 3, 3, {}, CoordinateSystem::cartesian);
    REQUIRE(h.num_levels() == 1);
    CHECK(h.finest().nx == 3);
    CHECK(h.finest().ny == 3);
    CHECK(h.finest().x[1] == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("build_hierarchy: three levels from 1x1 nest") {
    const auto h = build_hierarchy(3, 1, 1, {}, CoordinateSystem::cartesian);
    REQUIRE(h.num_levels() == 3);
    CHECK(h.level(1).nx == 1);
    CHECK(h.level(2).nx == 3);
    CHECK(h.level(3).nx == 7);
    CHECK(h.level(1).x[1] == doctest::Approx(0.5).epsilon(1e-15));
    // every node of a level appears on the next finer one
    for (int l = 1; l < 3; ++l) {
        const auto& coarse = h.level(l);
        const auto& fine = h.level(l + 1);
        for (int q = 0; q < coarse.nx + 2; ++q)
            CHECK(std::abs(coarse.x[q] - fine.x[2 * q]) <= 1e-14);
    }
}

TEST_CASE("build_hierarchy: graded coarse level takes every second finest node") {
    GradingSpec g;
    g.factor_x = 4.0;
    const auto h = build_hierarchy(2, 1, 1, g, CoordinateSystem::cartesian);
    const auto fine_axis = grade_axis(3, 4.0);
    for (int p = 0; p < 5; ++p)
        CHECK(h.finest().x[p] == doctest::Approx(fine_axis[p]).epsilon(1e-15));
    CHECK(h.level(1).x[1] == h.finest().x[2]);
}

TEST_CASE("hierarchy invariants: nestedness, grading ratio, boundaries") {
    GradingSpec g;
    g.factor_x = 4.0;
    g.factor_y = 0.5;
    for (auto cs : {CoordinateSystem::cartesian, CoordinateSystem::cylindrical,
                    CoordinateSystem::spherical}) {
        const auto h = build_hierarchy(3, 2, 1, g, cs);
        for (int l = 1; l < h.num_levels(); ++l) {
            const auto& coarse = h.level(l);
            const auto& fine = h.level(l + 1);
            for (int q = 0; q < coarse.nx + 2; ++q)
                CHECK(std::abs(coarse.x[q] - fine.x[2 * q]) <= 1e-14);
            for (int q = 0; q < coarse.ny + 2; ++q)
                CHECK(std::abs(coarse.y[q] - fine.y[2 * q]) <= 1e-14);
        }
        const auto& f = h.finest();
        // the affine map onto a metric range adds absolute rounding of order
        // eps(range.lo) to the smallest widths, so the ratio check is looser
        // here than on the unit interval
        const double ratio_tol = cs == CoordinateSystem::cartesian ? 1e-12 : 1e-9;
        for (int i = 0; i + 2 < f.nx + 2; ++i) {
            const double r = (f.x[i + 2] - f.x[i + 1]) / (f.x[i + 1] - f.x[i]);
            CHECK(r == doctest::Approx(4.0).epsilon(ratio_tol));
        }
        for (int i = 0; i + 1 < f.nx + 2; ++i) CHECK(f.x[i] < f.x[i + 1]);
        for (int j = 0; j + 1 < f.ny + 2; ++j) CHECK(f.y[j] < f.y[j + 1]);

        const auto rx = axis_range(cs, 0);
        const auto ry = axis_range(cs, 1);
        CHECK(f.x.front() == rx.lo);
        CHECK(f.x.back() == rx.hi);
        CHECK(f.y.front() == ry.lo);
        CHECK(f.y.back() == ry.hi);
    }
}

TEST_CASE("axis ranges avoid the coordinate singularities") {
    CHECK(axis_range(CoordinateSystem::cylindrical, 0).lo == kRadialMin);
    CHECK(axis_range(CoordinateSystem::spherical, 0).lo == kRadialMin);
    CHECK(axis_range(CoordinateSystem::spherical, 1).lo == kPolarMargin);
    CHECK(axis_range(CoordinateSystem::spherical, 1).hi ==
          doctest::Approx(std::numbers::pi - kPolarMargin));
    CHECK(axis_range(CoordinateSystem::cartesian, 0).lo == 0.0);
}

TEST_CASE("build_hierarchy: invalid arguments") {
    CHECK_THROWS_AS(build_hierarchy(0, 1, 1, {}, CoordinateSystem::cartesian),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_hierarchy(2, 0, 1, {}, CoordinateSystem::cartesian),
                    std::invalid_argument);
    GradingSpec extreme;
    extreme.factor_x = 4.0;
    CHECK_THROWS_AS(build_hierarchy(6, 1, 1, extreme, CoordinateSystem::cylindrical),
                    std::invalid_argument);
}

TEST_CASE("coordinate system names round-trip") {
    for (auto cs : {CoordinateSystem::cartesian, CoordinateSystem::cylindrical,
                    CoordinateSystem::spherical})
        CHECK(parse_coordinate_system(to_string(cs)) == cs);
    CHECK_THROWS_AS(parse_coordinate_system("polar"), std::invalid_argument);
}
