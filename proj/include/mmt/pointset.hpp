#pragma once

#include <memory>
#include <vector>

#include "mmt/geometry.hpp"

namespace mmt {

// Finite set of distinct points; indices into pts identify points everywhere.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> pts); // throws DuplicatePoints

    int size() const { return static_cast<int>(pts_.size()); }
    const Point& operator[](int i) const { return pts_[i]; }
    const std::vector<Point>& points() const { return pts_; }

private:
    std::vector<Point> pts_;
};

// Boundary of the convex hull, counterclockwise, starting at the
// lexicographically smallest vertex. Points lying on the interior of a hull
// edge are included as boundary vertices (the hull edge is subdivided).
// Throws AllCollinear when no three points span a triangle.
std::vector<int> convex_hull_boundary(const PointSet& ps);

} // namespace mmt
