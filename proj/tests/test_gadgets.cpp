#include <doctest.h>

#include <vector>

#include "mmt/error.hpp"
#include "mmt/gadgets.hpp"

using namespace mmt;

namespace {

// Every consecutive pair of sides must cross exactly at its corner; all other
// pairs must be fully disjoint; incidence ray j must cross its assigned side
// and nothing else.
void audit_cycle(const Point& center, const std::vector<CycleIncidence>& inc,
                 const BuiltCycle& cyc) {
    const int m = (int)cyc.sides.size();
    REQUIRE(m == 2 * (int)inc.size());
    if (m == 2) {
        REQUIRE(cyc.corners.size() == 1);
        auto hit = segments_properly_cross(cyc.sides[0], cyc.sides[1]);
        REQUIRE(hit.has_value());
        CHECK(*hit == cyc.corners[0]);
    } else {
        REQUIRE((int)cyc.corners.size() == m);
        for (int k = 0; k < m; ++k) {
            auto hit = segments_properly_cross(cyc.sides[k], cyc.sides[(k + 1) % m]);
            REQUIRE(hit.has_value());
            CHECK(*hit == cyc.corners[k]);
        }
        for (int a = 0; a < m; ++a)
            for (int b = a + 2; b < m; ++b) {
                if (a == 0 && b == m - 1) continue;
                CHECK(!segments_conflict(cyc.sides[a], cyc.sides[b]));
            }
    }
    for (size_t j = 0; j < inc.size(); ++j) {
        const Segment ray{center, inc[j].toward};
        for (int k = 0; k < m; ++k) {
            const bool crossed = segments_properly_cross(ray, cyc.sides[k]).has_value();
            CHECK(crossed == (k == cyc.assigned_side[j]));
        }
        // positive literals cross even sides, negated ones odd sides
        CHECK(cyc.assigned_side[j] % 2 == (inc[j].positive ? 0 : 1));
    }
}

} // namespace

TEST_CASE("one incidence builds the two-segment lens") {
    const Point center{0, 0};
    const std::vector<CycleIncidence> inc = {{{20, 0}, true}};
    const BuiltCycle cyc = build_variable_cycle(center, Rational(2), inc);
    CHECK(cyc.sides.size() == 2);
    CHECK(cyc.corners.size() == 1);
    audit_cycle(center, inc, cyc);

    const std::vector<CycleIncidence> neg = {{{-20, 4}, false}};
    audit_cycle(center, neg, build_variable_cycle(center, Rational(2), neg));
}

TEST_CASE("three incidences build a six-segment cycle with six corners") {
    const Point center{0, 0};
    const std::vector<CycleIncidence> inc = {
        {{40, 0}, true}, {{-30, 30}, false}, {{6, -50}, true}};
    const BuiltCycle cyc = build_variable_cycle(center, Rational(3), inc);
    CHECK(cyc.sides.size() == 6);
    CHECK(cyc.corners.size() == 6);
    audit_cycle(center, inc, cyc);
}

TEST_CASE("all-positive and all-negative cycles keep every parity assignment") {
    const Point center{5, -3};
    const std::vector<CycleIncidence> pos = {
        {{60, -3}, true}, {{5, 44}, true}, {{-41, -30}, true}};
    audit_cycle(center, pos, build_variable_cycle(center, Rational(3), pos));
    const std::vector<CycleIncidence> neg = {
        {{60, 0}, false}, {{5, 44}, false}, {{-41, -30}, false}};
    audit_cycle(center, neg, build_variable_cycle(center, Rational(3), neg));
}

TEST_CASE("two incidences work for every sign pattern") {
    const Point center{0, 0};
    for (int mask = 0; mask < 4; ++mask) {
        const std::vector<CycleIncidence> inc = {{{33, 7}, (mask & 1) != 0},
                                                 {{-20, -28}, (mask & 2) != 0}};
        audit_cycle(center, inc, build_variable_cycle(center, Rational(2), inc));
    }
}

TEST_CASE("coinciding incidence directions are rejected") {
    const std::vector<CycleIncidence> inc = {{{20, 0}, true}, {{40, 0}, false}};
    try {
        build_variable_cycle({0, 0}, Rational(2), inc);
        FAIL("must reject equal angles");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateDirections);
    }
}

TEST_CASE("clause shift keeps the crossing and interiorizes the clause vertex") {
    const Point center{0, 0};
    const std::vector<CycleIncidence> inc = {{{20, 0}, true}};
    const BuiltCycle cyc = build_variable_cycle(center, Rational(2), inc);
    const Segment ray{center, inc[0].toward};
    const Segment side = cyc.sides[cyc.assigned_side[0]];
    const Point crossing = *segments_properly_cross(ray, side);

    const Segment shifted = shift_clause_segment(ray, side);
    const auto still = segments_properly_cross(shifted, side);
    REQUIRE(still.has_value());
    CHECK(*still == crossing);
    CHECK(point_on_segment(inc[0].toward, shifted));
    CHECK(inc[0].toward != shifted.a);
    CHECK(inc[0].toward != shifted.b);
    // translation along the carrier: endpoints stay on the original line
    CHECK(side_of_line(shifted.a, ray) == Side::On);
    CHECK(side_of_line(shifted.b, ray) == Side::On);
}
