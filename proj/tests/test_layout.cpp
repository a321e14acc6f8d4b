#include <doctest.h>

#include "mmt/cnf.hpp"
#include "mmt/error.hpp"
#include "mmt/layout.hpp"

using namespace mmt;

TEST_CASE("single clause lays out as a comb above the spine") {
    const Cnf3 cnf = parse_dimacs("p cnf 3 1\n1 2 -3 0\n");
    const IncidenceLayout l = layout_incidence_graph(cnf);
    CHECK(layout_defects(l).empty());
    REQUIRE(l.var_pos.size() == 3);
    REQUIRE(l.clause_pos.size() == 1);
    REQUIRE(l.incidence.size() == 1);
    REQUIRE(l.incidence[0].size() == 3);
    // spine is horizontal, clause off it
    CHECK(l.var_pos[0].y == l.var_pos[1].y);
    CHECK(l.var_pos[1].y == l.var_pos[2].y);
    CHECK(l.clause_pos[0].y != l.var_pos[0].y);
    // legs run variable -> clause vertex
    for (int k = 0; k < 3; ++k) {
        CHECK(l.incidence[0][k].a == l.var_pos[cnf.clauses[0].lits[k].var]);
        CHECK(l.incidence[0][k].b == l.clause_pos[0]);
    }
}

TEST_CASE("interleaved clauses resolve by switching sides") {
    // spans [x0,x2] and [x1,x3] overlap: same side forces a leg crossing
    const Cnf3 cnf = parse_dimacs("p cnf 4 2\n1 3 0\n2 4 0\n");
    const IncidenceLayout l = layout_incidence_graph(cnf);
    CHECK(layout_defects(l).empty());
    const int side0 = l.clause_pos[0].y > l.var_pos[0].y ? 1 : -1;
    const int side1 = l.clause_pos[1].y > l.var_pos[0].y ? 1 : -1;
    CHECK(side0 != side1);
}

TEST_CASE("hints pinning both interleaved clauses to one side fail loudly") {
    LayoutHints hints;
    const Cnf3 cnf = parse_dimacs("c layout clause 0 side=above\n"
                                  "c layout clause 1 side=above\n"
                                  "p cnf 4 2\n1 3 0\n2 4 0\n",
                                  &hints);
    try {
        layout_incidence_graph(cnf, hints);
        FAIL("crossing layout must be rejected");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPlanarWithHints);
    }
}

TEST_CASE("scaling multiplies all coordinates by K times n squared") {
    const Cnf3 cnf = parse_dimacs("p cnf 3 1\n1 2 3 0\n");
    const IncidenceLayout l = layout_incidence_graph(cnf);
    const IncidenceLayout s = scale_layout(l, 4);
    const Rational factor(4 * 4 * 4); // K=4, n=4
    for (size_t v = 0; v < l.var_pos.size(); ++v) {
        CHECK(s.var_pos[v].x == l.var_pos[v].x * factor);
        CHECK(s.var_pos[v].y == l.var_pos[v].y * factor);
    }
    // unit-spaced spine: scaled vertices at least K*n^2 apart
    const Rational min_gap_sq = factor * factor;
    for (size_t a = 0; a < s.var_pos.size(); ++a)
        for (size_t b = a + 1; b < s.var_pos.size(); ++b)
            CHECK(dist_sq(s.var_pos[a], s.var_pos[b]) >= min_gap_sq);
    CHECK(layout_defects(s).empty());
}

TEST_CASE("empty formula lays out empty") {
    const IncidenceLayout l = layout_incidence_graph(Cnf3{});
    CHECK(l.var_pos.empty());
    CHECK(l.clause_pos.empty());
    CHECK(l.incidence.empty());
    CHECK(layout_defects(l).empty());
    const IncidenceLayout s = scale_layout(l, 2);
    CHECK(s.var_pos.empty());
}

TEST_CASE("the three-clause demo formula lays out planar with nine legs") {
    const Cnf3 cnf = parse_dimacs("p cnf 4 3\n1 2 -3 0\n-2 3 -4 0\n-1 2 4 0\n");
    const IncidenceLayout l = layout_incidence_graph(cnf);
    CHECK(layout_defects(l).empty());
    int legs = 0;
    for (const auto& c : l.incidence) legs += (int)c.size();
    CHECK(legs == 9);
}
