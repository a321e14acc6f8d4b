#include <doctest.h>

#include <vector>

#include "mmt/direction.hpp"

using namespace mmt;

namespace {
Rational norm_sq(const Point& p) { return p.x * p.x + p.y * p.y; }
} // namespace

TEST_CASE("perpendicular and direction equality") {
    CHECK(perp_ccw({1, 0}) == Point(0, 1));
    CHECK(perp_ccw({0, 1}) == Point(-1, 0));
    CHECK(same_direction({1, 2}, {2, 4}));
    CHECK(!same_direction({1, 2}, {-1, -2})); // opposite, not same
    CHECK(!same_direction({1, 2}, {2, 1}));
}

TEST_CASE("angular order is a strict total order on distinct directions") {
    const std::vector<Point> dirs = {{1, 0},  {2, 1},  {0, 1},  {-1, 1},
                                     {-3, 0}, {-1, -2}, {0, -1}, {1, -1}};
    for (size_t i = 0; i < dirs.size(); ++i)
        for (size_t j = 0; j < dirs.size(); ++j) {
            if (i == j) continue;
            CHECK(dir_less(dirs[i], dirs[j]) != dir_less(dirs[j], dirs[i]));
        }
    // listed counterclockwise from just above the positive x-axis
    for (size_t i = 0; i + 1 < dirs.size(); ++i) CHECK(dir_less(dirs[i], dirs[i + 1]));
}

TEST_CASE("strict betweenness in ccw gaps") {
    CHECK(ccw_strictly_between({1, 0}, {1, 1}, {0, 1}));
    CHECK(!ccw_strictly_between({1, 0}, {1, -1}, {0, 1}));
    CHECK(!ccw_strictly_between({1, 0}, {1, 0}, {0, 1}));
    CHECK(!ccw_strictly_between({1, 0}, {0, 1}, {0, 1}));
    // wide gap (reflex): everything except the excluded wedge
    CHECK(ccw_strictly_between({0, 1}, {0, -1}, {1, 0}));
}

TEST_CASE("rational unit directions lie exactly on the unit circle") {
    const std::vector<Point> targets = {{1, 1}, {-2, 5}, {3, -4}, {7, 1}, {-1, -1}};
    for (const Point& w : targets) {
        const Point u = unit_dir_near(w, 24);
        CHECK(norm_sq(u) == Rational(1));
        CHECK(dot(u, w).sign() > 0); // same half-plane as the request
    }
}

TEST_CASE("gap directions are unit, strictly inside, and ordered") {
    const Point a{1, 0}, b{0, 1};
    const Point mid = unit_dir_in_gap(a, b);
    CHECK(norm_sq(mid) == Rational(1));
    CHECK(ccw_strictly_between(a, mid, b));

    const auto spread = unit_dirs_in_gap(a, b, 3);
    REQUIRE(spread.size() == 3);
    for (const Point& u : spread) {
        CHECK(norm_sq(u) == Rational(1));
        CHECK(ccw_strictly_between(a, u, b));
    }
    CHECK(ccw_strictly_between(spread[0], spread[1], spread[2]));
    for (size_t i = 0; i < spread.size(); ++i)
        for (size_t j = i + 1; j < spread.size(); ++j)
            CHECK(!same_direction(spread[i], spread[j]));
}

TEST_CASE("same-direction bounds mean the full circle gap") {
    const Point u = unit_dir_in_gap({1, 0}, {2, 0});
    CHECK(norm_sq(u) == Rational(1));
    CHECK(!same_direction(u, {1, 0}));
}
