#include "mmt/geometry.hpp"

namespace mmt {

Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

Rational dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

Orient orientation(const Point& p, const Point& q, const Point& r) {
    int s = cross(q - p, r - p).sign();
    if (s > 0) return Orient::CounterClockwise;
    if (s < 0) return Orient::Clockwise;
    return Orient::Collinear;
}

Side side_of_line(const Point& p, const Segment& s) {
    int sg = cross(s.b - s.a, p - s.a).sign();
    if (sg > 0) return Side::Left;
    if (sg < 0) return Side::Right;
    return Side::On;
}

Rational dist_sq(const Point& p, const Point& q) {
    Point d = p - q;
    return dot(d, d);
}

bool point_on_segment(const Point& p, const Segment& s) {
    if (orientation(s.a, s.b, p) != Orient::Collinear) return false;
    // Collinear: p is on the closed segment iff it projects inside [a, b].
    return dot(p - s.a, s.b - s.a).sign() >= 0 && dot(p - s.b, s.a - s.b).sign() >= 0;
}

Rational point_segment_dist_sq(const Point& p, const Segment& s) {
    Point d = s.b - s.a;
    Rational t = dot(p - s.a, d);
    if (t.sign() <= 0) return dist_sq(p, s.a);
    Rational len = dot(d, d);
    if (t >= len) return dist_sq(p, s.b);
    // Foot of the perpendicular is interior: |ap|^2 - (ap.d)^2 / |d|^2.
    return dist_sq(p, s.a) - t * t / len;
}

std::optional<Point> segments_properly_cross(const Segment& s, const Segment& t) {
    Rational o1 = cross(s.b - s.a, t.a - s.a);
    Rational o2 = cross(s.b - s.a, t.b - s.a);
    Rational o3 = cross(t.b - t.a, s.a - t.a);
    Rational o4 = cross(t.b - t.a, s.b - t.a);
    if (o1.sign() * o2.sign() >= 0 || o3.sign() * o4.sign() >= 0) return std::nullopt;
    // Strictly opposite sides both ways: unique transversal crossing.
    Rational denom = o1 - o2; // == cross(s.b - s.a, t.a - t.b), nonzero here
    Rational alpha = o1 / denom;
    return t.a + (t.b - t.a) * alpha;
}

bool segments_conflict(const Segment& s, const Segment& t) {
    if (segments_properly_cross(s, t)) return true;
    return point_on_segment(t.a, s) || point_on_segment(t.b, s) ||
           point_on_segment(s.a, t) || point_on_segment(s.b, t);
}

} // namespace mmt
