#pragma once

#include <optional>
#include <string>

#include "mmt/rational.hpp"

namespace mmt {

// Exact point in the rational plane. Doubles as a 2D vector.
struct Point {
    Rational x, y;

    Point() = default;
    Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
    Point(long px, long py) : x(px), y(py) {}

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(const Rational& s) const { return {x * s, y * s}; }
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    // Lexicographic; gives deterministic orderings, no geometric meaning.
    bool operator<(const Point& o) const { return x != o.x ? x < o.x : y < o.y; }

    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

inline Point operator*(const Rational& s, const Point& p) { return p * s; }

// Closed segment with two distinct endpoints.
struct Segment {
    Point a, b;

    Segment() = default;
    Segment(Point pa, Point pb) : a(std::move(pa)), b(std::move(pb)) {}

    bool operator==(const Segment& o) const { return a == o.a && b == o.b; }
    std::string str() const { return a.str() + "-" + b.str(); }
};

enum class Orient { CounterClockwise, Clockwise, Collinear };
enum class Side { Left, Right, On };

Rational cross(const Point& u, const Point& v);
Rational dot(const Point& u, const Point& v);

// Sign of the determinant |q-p, r-p|. Exact.
Orient orientation(const Point& p, const Point& q, const Point& r);

// Side of the directed carrier line of s (Left = counterclockwise of a->b).
Side side_of_line(const Point& p, const Segment& s);

Rational dist_sq(const Point& p, const Point& q);

// True iff p lies on the closed segment s (endpoints included).
bool point_on_segment(const Point& p, const Segment& s);

// Squared distance from p to the closed segment s; zero iff point_on_segment.
Rational point_segment_dist_sq(const Point& p, const Segment& s);

// The single interior crossing point, if the open segments cross transversally.
// Endpoint touches and collinear overlaps yield nullopt.
std::optional<Point> segments_properly_cross(const Segment& s, const Segment& t);

// True iff the closed segments share any point at all: proper crossings,
// endpoint touches, and collinear overlaps all count.
bool segments_conflict(const Segment& s, const Segment& t);

} // namespace mmt
