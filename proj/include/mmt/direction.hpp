#pragma once

#include <vector>

#include "mmt/geometry.hpp"

namespace mmt {

// Direction vectors are nonzero rational 2-vectors; only their angle matters.
// All comparisons are exact (quadrant split + cross products), never atan2.

Point perp_ccw(const Point& v); // rotate +90 degrees

bool same_direction(const Point& u, const Point& v);

// Total angular order starting just above the positive x-axis.
bool dir_less(const Point& u, const Point& v);

// True iff u lies strictly inside the counterclockwise gap from a to b.
// Precondition: a, b not the same direction. Gaps of any width up to 2*pi.
bool ccw_strictly_between(const Point& a, const Point& u, const Point& b);

// Rational point on the unit circle (x^2 + y^2 == 1 exactly) whose direction
// approaches w as prec grows. Integer-arithmetic only.
Point unit_dir_near(const Point& w, unsigned prec);

// Exact unit direction strictly inside the counterclockwise gap from a to b,
// roughly centered. same_direction(a, b) is read as the full-circle gap.
Point unit_dir_in_gap(const Point& a, const Point& b);

// count exact unit directions strictly inside the gap, distinct, in
// counterclockwise order, spread by recursive halving.
std::vector<Point> unit_dirs_in_gap(const Point& a, const Point& b, int count);

} // namespace mmt
