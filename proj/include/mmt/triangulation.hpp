#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mmt/pointset.hpp"

namespace mmt {

// Undirected edge between point indices, stored with i < j.
struct Edge {
    int i, j;
    Edge() : i(0), j(1) {}
    Edge(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {}
    bool operator==(const Edge& o) const { return i == o.i && j == o.j; }
    bool operator<(const Edge& o) const { return i != o.i ? i < o.i : j < o.j; }
};

// A maximal set of pairwise non-crossing edges on the base point set.
// |edges| == 3n - h - 3 with h boundary points; every bounded face a triangle.
struct Triangulation {
    std::shared_ptr<const PointSet> base;
    std::vector<Edge> edges; // sorted canonically
    int hull_size = 0;

    Segment segment(const Edge& e) const { return {(*base)[e.i], (*base)[e.j]}; }
    bool has_edge(const Edge& e) const;
    // Smallest squared edge length.
    Rational min_edge_sq() const;
};

struct EnumOptions {
    int cap = 12;              // TooLarge beyond this many points (hard max 16)
    long limit = 10'000'000;   // LimitExceeded beyond this many triangulations
};

// Checks the full contract: canonical distinct edges between valid indices, no
// edge through a third point, pairwise intersections confined to shared
// endpoints, all hull edges present, edge count 3n - h - 3.
bool is_valid_triangulation(const PointSet& ps, const std::vector<Edge>& edges);

// All triangulations, each exactly once, in deterministic backtracking order.
std::vector<Triangulation> enumerate_triangulations(const PointSet& ps, const EnumOptions& opt = {});

// First triangulation (in the same deterministic order) using none of the
// forbidden edges, or nullopt. A forbidden hull edge forces nullopt.
std::optional<Triangulation> triangulation_exists_avoiding(const PointSet& ps,
                                                           const std::vector<Edge>& forbidden,
                                                           int cap = 12);

struct MaxMinResult {
    Rational optimum_sq;     // largest achievable squared shortest edge
    Triangulation witness;   // realizes optimum_sq; first found at that threshold
};

// Maximizes the shortest edge over all triangulations by binary search on the
// realized candidate edge lengths, certified by the decision procedure.
MaxMinResult maxmin_triangulation(const PointSet& ps, int cap = 12);

// True iff the closed segment e crosses the open segment (p, q): p and q lie
// strictly on opposite sides of e's carrier and the carrier crossing point
// falls inside e, endpoints included. Touching p or q itself does not count.
bool separates(const Segment& e, const Point& p, const Point& q);

// Pairs (i, j) violating: edge(i,j) present iff no edge avoiding both i and j
// separates point i from point j. Empty on every valid triangulation.
std::vector<std::pair<int, int>> separation_criterion_audit(const Triangulation& t);

// Number of bounded faces, computed independently by walking the rotation
// system of the straight-line embedding.
int face_count(const Triangulation& t);

} // namespace mmt
