#include "mmt/pointset.hpp"

#include <algorithm>
#include <numeric>

#include "mmt/error.hpp"

namespace mmt {

PointSet::PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
    std::vector<Point> sorted = pts_;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            fail(ErrorKind::DuplicatePoints, "duplicate point " + sorted[i].str());
}

std::vector<int> convex_hull_boundary(const PointSet& ps) {
    const int n = ps.size();
    if (n < 3) fail(ErrorKind::AllCollinear, "fewer than three points");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return ps[a] < ps[b]; });

    // Monotone chain keeping only strict turns: vertices of the strict hull.
    auto build = [&](bool lower) {
        std::vector<int> chain;
        for (int k = 0; k < n; ++k) {
            int i = order[lower ? k : n - 1 - k];
            while (chain.size() >= 2) {
                Orient o = orientation(ps[chain[chain.size() - 2]], ps[chain.back()], ps[i]);
                if (o == Orient::CounterClockwise) break;
                chain.pop_back();
            }
            chain.push_back(i);
        }
        return chain;
    };
    std::vector<int> lower = build(true), upper = build(false);
    std::vector<int> strict(lower.begin(), lower.end() - 1);
    strict.insert(strict.end(), upper.begin(), upper.end() - 1);
    if (strict.size() < 3) fail(ErrorKind::AllCollinear, "all points collinear");

    // Subdivide each strict hull edge by the points lying on it.
    std::vector<int> boundary;
    const int h = static_cast<int>(strict.size());
    for (int k = 0; k < h; ++k) {
        int a = strict[k], b = strict[(k + 1) % h];
        std::vector<int> on_edge;
        Segment e{ps[a], ps[b]};
        for (int i = 0; i < n; ++i)
            if (i != a && i != b && point_on_segment(ps[i], e)) on_edge.push_back(i);
        std::sort(on_edge.begin(), on_edge.end(), [&](int u, int v) {
            return dot(ps[u] - ps[a], e.b - e.a) < dot(ps[v] - ps[a], e.b - e.a);
        });
        boundary.push_back(a);
        boundary.insert(boundary.end(), on_edge.begin(), on_edge.end());
    }
    return boundary;
}

} // namespace mmt
