#pragma once

#include <vector>

#include "mmt/geometry.hpp"

namespace mmt {

// One incidence of a variable: the scaled clause-vertex position it connects
// to and the literal's sign.
struct CycleIncidence {
    Point toward;
    bool positive = true;
};

// A variable cycle: 2*delta segments in cyclic order (delta = 1 gives two
// segments crossing once). sides[k] has parity Even iff k is even; corners[k]
// is the exact proper crossing of sides k and k+1 (a single corner when
// delta = 1). assigned_side[j] is the side the j-th incidence segment
// crosses: Even for positive literals, Odd for negated ones, so a chosen
// clause segment is compatible exactly with the parity class its literal's
// truth value selects.
struct BuiltCycle {
    std::vector<Segment> sides;
    std::vector<Point> corners;
    std::vector<int> assigned_side;
};

// Places the cycle's corner directions around `center` so that every
// incidence ray crosses only its required-parity side, with corners exactly
// on the circle of the given radius (rational unit directions). Throws
// DegenerateDirections for coinciding incidence directions and AuditFailed if
// no extension factor makes the exact crossing audit pass.
BuiltCycle build_variable_cycle(const Point& center, const Rational& radius,
                                const std::vector<CycleIncidence>& inc);

// Translates an incidence segment along its own carrier so that it starts
// halfway between the variable center and its crossing with the assigned
// side, and extends past the clause vertex by the same shift; the crossing
// point is unchanged and the clause vertex becomes an interior point, so the
// shifted segments of one clause are exactly concurrent there.
Segment shift_clause_segment(const Segment& incidence, const Segment& assigned_side);

} // namespace mmt
