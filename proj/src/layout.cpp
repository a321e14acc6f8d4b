#include "mmt/layout.hpp"

#include <algorithm>
#include <map>

#include "mmt/direction.hpp"
#include "mmt/error.hpp"

namespace mmt {

std::vector<std::string> layout_defects(const IncidenceLayout& l) {
    std::vector<std::string> defects;
    std::vector<Point> vertices = l.var_pos;
    vertices.insert(vertices.end(), l.clause_pos.begin(), l.clause_pos.end());
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j])
                defects.push_back("vertices " + std::to_string(i) + " and " + std::to_string(j) +
                                  " coincide");

    struct Ref {
        Segment s;
        int clause;
        int lit;
    };
    std::vector<Ref> edges;
    for (size_t c = 0; c < l.incidence.size(); ++c)
        for (size_t k = 0; k < l.incidence[c].size(); ++k)
            edges.push_back({l.incidence[c][k], static_cast<int>(c), static_cast<int>(k)});

    auto name = [](const Ref& r) {
        return "edge(clause " + std::to_string(r.clause) + ", lit " + std::to_string(r.lit) + ")";
    };
    for (const auto& e : edges) {
        if (e.s.a == e.s.b) defects.push_back(name(e) + " is degenerate");
        for (const auto& v : vertices)
            if (!(v == e.s.a) && !(v == e.s.b) && point_on_segment(v, e.s))
                defects.push_back("vertex " + v.str() + " lies on " + name(e));
    }
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            const Segment &a = edges[i].s, &b = edges[j].s;
            bool share = a.a == b.a || a.a == b.b || a.b == b.a || a.b == b.b;
            if (!share) {
                if (segments_conflict(a, b))
                    defects.push_back(name(edges[i]) + " and " + name(edges[j]) + " intersect");
            } else {
                const Point& oa = (a.a == b.a || a.a == b.b) ? a.b : a.a;
                const Point& ob = (b.a == a.a || b.a == a.b) ? b.b : b.a;
                if (point_on_segment(oa, b) || point_on_segment(ob, a))
                    defects.push_back(name(edges[i]) + " and " + name(edges[j]) + " overlap");
            }
        }
    // Gadget construction needs pairwise distinct incidence directions at
    // each variable.
    std::map<std::pair<Rational, Rational>, std::vector<int>> by_var;
    for (size_t v = 0; v < l.var_pos.size(); ++v) {
        std::vector<Point> dirs;
        for (const auto& e : edges)
            if (e.s.a == l.var_pos[v]) dirs.push_back(e.s.b - e.s.a);
        for (size_t i = 0; i < dirs.size(); ++i)
            for (size_t j = i + 1; j < dirs.size(); ++j)
                if (same_direction(dirs[i], dirs[j]))
                    defects.push_back("variable " + std::to_string(v) +
                                      " has two incidences in the same direction");
    }
    return defects;
}

namespace {

struct ClauseGeom {
    long span_lo = 0, span_hi = 0;
    int depth = 1;
    long x = 0;
};

IncidenceLayout place(const Cnf3& cnf, const std::vector<int>& side,
                      const std::map<int, std::vector<int>>& order, int attempt) {
    const int C = static_cast<int>(cnf.clauses.size());
    IncidenceLayout l;
    for (int v = 0; v < cnf.num_vars; ++v) l.var_pos.push_back({Rational(4L * v), Rational(0)});

    std::vector<ClauseGeom> g(C);
    for (int c = 0; c < C; ++c) {
        std::vector<long> xs;
        for (const auto& lit : cnf.clauses[c].lits) xs.push_back(4L * lit.var);
        std::sort(xs.begin(), xs.end());
        g[c].span_lo = xs.front();
        g[c].span_hi = xs.back();
        // Anchor at the hint's first literal if given, else the median.
        g[c].x = xs[xs.size() / 2];
        if (auto it = order.find(c); it != order.end() && !it->second.empty()) {
            int k = it->second.front();
            if (k >= 0 && k < static_cast<int>(cnf.clauses[c].lits.size()))
                g[c].x = 4L * cnf.clauses[c].lits[k].var;
        }
    }
    // Laminar nesting depth among same-side spans; equal spans stack by index
    // so they still get distinct heights.
    for (bool changed = true; changed;) {
        changed = false;
        for (int c = 0; c < C; ++c)
            for (int d = 0; d < C; ++d) {
                if (d == c || side[d] != side[c]) continue;
                bool inside = g[d].span_lo >= g[c].span_lo && g[d].span_hi <= g[c].span_hi;
                bool equal = g[d].span_lo == g[c].span_lo && g[d].span_hi == g[c].span_hi;
                if ((inside && !equal) || (equal && d < c))
                    if (g[c].depth <= g[d].depth) {
                        g[c].depth = g[d].depth + 1;
                        changed = true;
                    }
            }
    }
    for (int c = 0; c < C; ++c) {
        long x = g[c].x + (g[c].depth - 1) + (attempt * (c % 3 + 1)) % 5;
        long y = static_cast<long>(side[c]) * 3L * g[c].depth;
        l.clause_pos.push_back({Rational(x), Rational(y)});
    }
    for (int c = 0; c < C; ++c) {
        std::vector<Segment> segs;
        for (const auto& lit : cnf.clauses[c].lits)
            segs.push_back({l.var_pos[lit.var], l.clause_pos[c]});
        l.incidence.push_back(segs);
    }
    return l;
}

} // namespace

IncidenceLayout layout_incidence_graph(const Cnf3& cnf, const LayoutHints& hints) {
    validate_formula(cnf);
    const int C = static_cast<int>(cnf.clauses.size());
    if (C > 20) fail(ErrorKind::TooLarge, "more than 20 clauses");

    // Exhaustive side assignment; hint-pinned bits are fixed.
    for (long mask = 0; mask < (1L << C); ++mask) {
        std::vector<int> side(C);
        bool ok = true;
        for (int c = 0; c < C; ++c) {
            side[c] = (mask >> c) & 1 ? -1 : 1;
            if (auto it = hints.side.find(c); it != hints.side.end() && it->second != side[c])
                ok = false;
        }
        if (!ok) continue;
        for (int attempt = 0; attempt < 6; ++attempt) {
            IncidenceLayout l = place(cnf, side, hints.order, attempt);
            if (layout_defects(l).empty()) return l;
        }
    }
    fail(ErrorKind::NotPlanarWithHints,
         "no side assignment yields a planar spine drawing under the given hints");
}

IncidenceLayout scale_layout(const IncidenceLayout& l, int n, int K) {
    Rational f(static_cast<long>(K) * n * n);
    IncidenceLayout out;
    for (const auto& p : l.var_pos) out.var_pos.push_back(p * f);
    for (const auto& p : l.clause_pos) out.clause_pos.push_back(p * f);
    for (const auto& segs : l.incidence) {
        std::vector<Segment> scaled;
        for (const auto& s : segs) scaled.push_back({s.a * f, s.b * f});
        out.incidence.push_back(scaled);
    }
    return out;
}

} // namespace mmt
