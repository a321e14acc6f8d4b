#include <doctest.h>

#include <vector>

#include "mmt/geometry.hpp"

using namespace mmt;

TEST_CASE("orientation follows the determinant sign") {
    CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == Orient::CounterClockwise);
    CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == Orient::Collinear);
    CHECK(orientation({0, 0}, {2, 0}, {1, -1}) == Orient::Clockwise);
}

TEST_CASE("orientation is antisymmetric under argument swaps") {
    std::vector<Point> grid;
    for (long x = 0; x < 3; ++x)
        for (long y = 0; y < 3; ++y) grid.emplace_back(x, y);
    const auto flipped = [](Orient o) {
        return o == Orient::Collinear
                   ? o
                   : (o == Orient::Clockwise ? Orient::CounterClockwise : Orient::Clockwise);
    };
    for (const Point& p : grid)
        for (const Point& q : grid)
            for (const Point& r : grid) {
                if (p == q || q == r || p == r) continue;
                const Orient o = orientation(p, q, r);
                CHECK(orientation(q, p, r) == flipped(o));
                CHECK(orientation(p, r, q) == flipped(o));
            }
}

TEST_CASE("proper crossings are interior and transversal") {
    const auto hit = segments_properly_cross({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}});
    REQUIRE(hit.has_value());
    CHECK(*hit == Point(1, 1));
    CHECK(!segments_properly_cross({{0, 0}, {1, 0}}, {{2, 1}, {3, 1}}).has_value());
    // endpoint touch is not proper
    CHECK(!segments_properly_cross({{0, 0}, {2, 0}}, {{2, 0}, {3, 1}}).has_value());
    // collinear overlap has no single crossing point
    CHECK(!segments_properly_cross({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}}).has_value());
}

TEST_CASE("conflicts cover crossings, touches, and overlaps") {
    CHECK(segments_conflict({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}));
    CHECK(!segments_conflict({{0, 0}, {1, 0}}, {{2, 1}, {3, 1}}));
    CHECK(segments_conflict({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}}));
    CHECK(segments_conflict({{0, 0}, {2, 0}}, {{2, 0}, {3, 1}}));
}

TEST_CASE("crossing implies conflict and both are symmetric") {
    const std::vector<Segment> segs = {{{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}, {{3, 0}, {3, 2}},
                                       {{0, 0}, {2, 0}}, {{1, 0}, {3, 0}}, {{0, 1}, {2, 1}}};
    for (const Segment& s : segs)
        for (const Segment& t : segs) {
            if (s == t) continue;
            const auto hit = segments_properly_cross(s, t);
            CHECK(hit.has_value() == segments_properly_cross(t, s).has_value());
            CHECK(segments_conflict(s, t) == segments_conflict(t, s));
            if (hit) CHECK(segments_conflict(s, t));
        }
}

TEST_CASE("point on closed segment is exact") {
    CHECK(point_on_segment({1, 1}, {{0, 0}, {2, 2}}));
    CHECK(!point_on_segment({3, 3}, {{0, 0}, {2, 2}}));
    CHECK(!point_on_segment({1, 0}, {{0, 0}, {2, 2}}));
    CHECK(point_on_segment({0, 0}, {{0, 0}, {2, 2}}));
    CHECK(point_on_segment({Rational(1, 3), Rational(1, 3)}, {{0, 0}, {2, 2}}));
}

TEST_CASE("side of line classification") {
    const Segment s{{0, 0}, {1, 0}};
    CHECK(side_of_line({0, 1}, s) == Side::Left);
    CHECK(side_of_line({0, -1}, s) == Side::Right);
    CHECK(side_of_line({5, 0}, s) == Side::On);
}

TEST_CASE("squared distances are exact") {
    CHECK(dist_sq({0, 0}, {1, 0}) == Rational(1));
    CHECK(dist_sq({0, 0}, {1, 1}) == Rational(2));
    CHECK(dist_sq({0, 0}, {3, 4}) == Rational(25));
    CHECK(point_segment_dist_sq({1, 1}, {{0, 0}, {2, 0}}) == Rational(1));
    CHECK(point_segment_dist_sq({3, 1}, {{0, 0}, {2, 0}}) == Rational(2));
    CHECK(point_segment_dist_sq({1, 0}, {{0, 0}, {2, 0}}) == Rational(0));
}

TEST_CASE("zero segment distance coincides with membership") {
    std::vector<Point> grid;
    for (long x = 0; x < 4; ++x)
        for (long y = 0; y < 3; ++y) grid.emplace_back(x, y);
    const Segment s{{0, 0}, {3, 1}};
    for (const Point& p : grid)
        CHECK(point_on_segment(p, s) == point_segment_dist_sq(p, s).is_zero());
}
