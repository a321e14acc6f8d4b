#pragma once

#include <string>
#include <vector>

#include "mmt/cnf.hpp"
#include "mmt/geometry.hpp"

namespace mmt {

// Straight-line drawing of the variable-clause incidence graph: variables on
// a horizontal spine, clause vertices above or below, one segment per
// incidence (incidence[c][k] runs from the k-th literal's variable to clause
// c's vertex). All coordinates are integers.
struct IncidenceLayout {
    std::vector<Point> var_pos;
    std::vector<Point> clause_pos;
    std::vector<std::vector<Segment>> incidence;
};

// Exact audit: distinct vertices, no vertex on a non-incident edge, edge
// pairs meet at shared endpoints only, and per-variable incidence directions
// pairwise distinct. Empty result means the drawing is planar and usable.
std::vector<std::string> layout_defects(const IncidenceLayout& l);

// Spine layout. Clause sides are chosen by exhaustive search over side
// assignments (hints pin individual clauses); clause heights follow the
// laminar nesting depth of same-side variable spans. Throws
// NotPlanarWithHints when no assignment passes the audit.
IncidenceLayout layout_incidence_graph(const Cnf3& cnf, const LayoutHints& hints = {});

// Multiplies every coordinate by K*n^2, leaving room for radius-Theta(n)
// gadgets around each vertex.
IncidenceLayout scale_layout(const IncidenceLayout& l, int n, int K = 4);

} // namespace mmt
