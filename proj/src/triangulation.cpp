#include "mmt/triangulation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "mmt/direction.hpp"
#include "mmt/error.hpp"

namespace mmt {

namespace {

using Mask = unsigned __int128;

int popcount(Mask m) {
    return __builtin_popcountll(static_cast<unsigned long long>(m)) +
           __builtin_popcountll(static_cast<unsigned long long>(m >> 64));
}

constexpr int kHardCap = 16; // candidate count must fit a 128-bit mask

// Candidate edges (no third point in the open interior), their pairwise
// proper-crossing conflicts, and the target edge count 3n - h - 3.
struct Model {
    std::shared_ptr<const PointSet> ps;
    std::vector<Edge> cand;
    std::vector<Mask> conflict;
    std::vector<Mask> suffix; // bits at index >= i
    std::vector<int> boundary;
    int n = 0, h = 0, m = 0;
};

Model build_model(const PointSet& ps, int cap) {
    if (cap > kHardCap) cap = kHardCap;
    if (ps.size() > cap)
        fail(ErrorKind::TooLarge, "point set of size " + std::to_string(ps.size()) +
                                      " exceeds cap " + std::to_string(cap));
    Model md;
    md.ps = std::make_shared<PointSet>(ps);
    md.boundary = convex_hull_boundary(ps);
    md.n = ps.size();
    md.h = static_cast<int>(md.boundary.size());
    md.m = 3 * md.n - md.h - 3;

    for (int i = 0; i < md.n; ++i)
        for (int j = i + 1; j < md.n; ++j) {
            Segment s{ps[i], ps[j]};
            bool blocked = false;
            for (int k = 0; k < md.n && !blocked; ++k)
                if (k != i && k != j && point_on_segment(ps[k], s)) blocked = true;
            if (!blocked) md.cand.push_back(Edge(i, j));
        }

    const int nc = static_cast<int>(md.cand.size());
    md.conflict.assign(nc, 0);
    for (int a = 0; a < nc; ++a) {
        Segment sa{ps[md.cand[a].i], ps[md.cand[a].j]};
        for (int b = a + 1; b < nc; ++b) {
            // Candidates never overlap collinearly or touch interiors at a
            // vertex (a third point inside would have blocked them), so the
            // only possible conflict is a proper crossing.
            Segment sb{ps[md.cand[b].i], ps[md.cand[b].j]};
            if (segments_properly_cross(sa, sb)) {
                md.conflict[a] |= Mask(1) << b;
                md.conflict[b] |= Mask(1) << a;
            }
        }
    }
    md.suffix.assign(nc + 1, 0);
    for (int i = nc - 1; i >= 0; --i) md.suffix[i] = md.suffix[i + 1] | (Mask(1) << i);
    return md;
}

Triangulation make_result(const Model& md, const std::vector<int>& chosen) {
    Triangulation t;
    t.base = md.ps;
    t.hull_size = md.h;
    for (int c : chosen) t.edges.push_back(md.cand[c]);
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

// Enumerates all compatible candidate subsets of size m (these are exactly the
// triangulations); emit returns false to stop early.
void search(const Model& md, Mask banned0,
            const std::function<bool(const std::vector<int>&)>& emit) {
    const int nc = static_cast<int>(md.cand.size());
    std::vector<int> chosen;
    std::function<bool(int, Mask)> rec = [&](int idx, Mask banned) -> bool {
        if (static_cast<int>(chosen.size()) == md.m) return emit(chosen);
        if (idx == nc) return true;
        Mask avail = ~banned & md.suffix[idx];
        if (static_cast<int>(chosen.size()) + popcount(avail) < md.m) return true;
        if ((banned >> idx) & 1) return rec(idx + 1, banned);
        chosen.push_back(idx);
        if (!rec(idx + 1, banned | md.conflict[idx])) return false;
        chosen.pop_back();
        return rec(idx + 1, banned | (Mask(1) << idx));
    };
    rec(0, banned0);
}

} // namespace

bool Triangulation::has_edge(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

Rational Triangulation::min_edge_sq() const {
    Rational best;
    bool first = true;
    for (const auto& e : edges) {
        Rational d = dist_sq((*base)[e.i], (*base)[e.j]);
        if (first || d < best) best = d, first = false;
    }
    if (first) fail(ErrorKind::Internal, "empty triangulation");
    return best;
}

bool is_valid_triangulation(const PointSet& ps, const std::vector<Edge>& edges) {
    const int n = ps.size();
    std::vector<int> boundary = convex_hull_boundary(ps);
    const int h = static_cast<int>(boundary.size());
    if (static_cast<int>(edges.size()) != 3 * n - h - 3) return false;

    std::set<Edge> eset;
    for (const auto& e : edges) {
        if (e.i < 0 || e.j >= n || e.i >= e.j) return false;
        if (!eset.insert(e).second) return false;
    }
    for (int k = 0; k < h; ++k)
        if (!eset.count(Edge(boundary[k], boundary[(k + 1) % h]))) return false;

    for (const auto& e : edges) {
        Segment s{ps[e.i], ps[e.j]};
        for (int k = 0; k < n; ++k)
            if (k != e.i && k != e.j && point_on_segment(ps[k], s)) return false;
    }
    for (size_t a = 0; a < edges.size(); ++a)
        for (size_t b = a + 1; b < edges.size(); ++b) {
            const Edge &ea = edges[a], &eb = edges[b];
            Segment sa{ps[ea.i], ps[ea.j]}, sb{ps[eb.i], ps[eb.j]};
            bool share = ea.i == eb.i || ea.i == eb.j || ea.j == eb.i || ea.j == eb.j;
            if (!share) {
                if (segments_conflict(sa, sb)) return false;
            } else {
                // Shared endpoint allowed; any further contact means a
                // collinear overlap, which a third point on an edge implies
                // was already rejected unless the overlap hits non-vertices.
                const Point& oa = (ea.i == eb.i || ea.i == eb.j) ? ps[ea.j] : ps[ea.i];
                const Point& ob = (eb.i == ea.i || eb.i == ea.j) ? ps[eb.j] : ps[eb.i];
                if (point_on_segment(oa, sb) || point_on_segment(ob, sa)) return false;
            }
        }
    return true;
}

std::vector<Triangulation> enumerate_triangulations(const PointSet& ps, const EnumOptions& opt) {
    Model md = build_model(ps, opt.cap);
    std::vector<Triangulation> out;
    search(md, 0, [&](const std::vector<int>& chosen) {
        if (static_cast<long>(out.size()) >= opt.limit)
            fail(ErrorKind::LimitExceeded,
                 "more than " + std::to_string(opt.limit) + " triangulations");
        out.push_back(make_result(md, chosen));
        return true;
    });
    return out;
}

std::optional<Triangulation> triangulation_exists_avoiding(const PointSet& ps,
                                                           const std::vector<Edge>& forbidden,
                                                           int cap) {
    Model md = build_model(ps, cap);
    std::set<Edge> forb(forbidden.begin(), forbidden.end());
    for (int k = 0; k < md.h; ++k)
        if (forb.count(Edge(md.boundary[k], md.boundary[(k + 1) % md.h]))) return std::nullopt;
    Mask banned = 0;
    for (size_t c = 0; c < md.cand.size(); ++c)
        if (forb.count(md.cand[c])) banned |= Mask(1) << c;
    std::optional<Triangulation> found;
    search(md, banned, [&](const std::vector<int>& chosen) {
        found = make_result(md, chosen);
        return false;
    });
    return found;
}

MaxMinResult maxmin_triangulation(const PointSet& ps, int cap) {
    Model md = build_model(ps, cap);
    std::vector<Rational> values;
    for (const auto& e : md.cand) values.push_back(dist_sq(ps[e.i], ps[e.j]));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    auto feasible = [&](const Rational& threshold) -> std::optional<Triangulation> {
        Mask banned = 0;
        for (size_t c = 0; c < md.cand.size(); ++c)
            if (dist_sq(ps[md.cand[c].i], ps[md.cand[c].j]) < threshold) banned |= Mask(1) << c;
        std::optional<Triangulation> found;
        search(md, banned, [&](const std::vector<int>& chosen) {
            found = make_result(md, chosen);
            return false;
        });
        return found;
    };

    auto base = feasible(values.front());
    if (!base) fail(ErrorKind::Internal, "point set admits no triangulation");
    size_t lo = 0, hi = values.size() - 1;
    Triangulation witness = *base;
    while (lo < hi) {
        size_t mid = lo + (hi - lo + 1) / 2;
        if (auto w = feasible(values[mid])) {
            witness = *w;
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    MaxMinResult r{values[lo], witness};
    if (r.witness.min_edge_sq() != r.optimum_sq)
        fail(ErrorKind::Internal, "witness does not realize the certified optimum");
    return r;
}

bool separates(const Segment& e, const Point& p, const Point& q) {
    int sp = cross(e.b - e.a, p - e.a).sign();
    int sq = cross(e.b - e.a, q - e.a).sign();
    if (sp * sq >= 0) return false; // p, q must straddle the carrier strictly
    int oa = cross(q - p, e.a - p).sign();
    int ob = cross(q - p, e.b - p).sign();
    return oa * ob <= 0; // carrier crossing point lies within closed e
}

std::vector<std::pair<int, int>> separation_criterion_audit(const Triangulation& t) {
    const PointSet& ps = *t.base;
    std::vector<std::pair<int, int>> violations;
    for (int i = 0; i < ps.size(); ++i)
        for (int j = i + 1; j < ps.size(); ++j) {
            bool present = t.has_edge(Edge(i, j));
            bool separated = false;
            for (const auto& e : t.edges) {
                if (e.i == i || e.i == j || e.j == i || e.j == j) continue;
                if (separates(t.segment(e), ps[i], ps[j])) {
                    separated = true;
                    break;
                }
            }
            if (present == separated) violations.emplace_back(i, j);
        }
    return violations;
}

int face_count(const Triangulation& t) {
    const PointSet& ps = *t.base;
    std::vector<std::vector<int>> nbr(ps.size());
    for (const auto& e : t.edges) {
        nbr[e.i].push_back(e.j);
        nbr[e.j].push_back(e.i);
    }
    for (int v = 0; v < ps.size(); ++v)
        std::sort(nbr[v].begin(), nbr[v].end(),
                  [&](int a, int b) { return dir_less(ps[a] - ps[v], ps[b] - ps[v]); });

    std::map<std::pair<int, int>, int> pos; // position of u in v's rotation
    for (int v = 0; v < ps.size(); ++v)
        for (size_t k = 0; k < nbr[v].size(); ++k) pos[{v, nbr[v][k]}] = static_cast<int>(k);

    // Walk half-edge orbits: from u->v continue with v->w, w the neighbor
    // preceding u in v's counterclockwise rotation. Orbits == faces.
    std::set<std::pair<int, int>> visited;
    int faces = 0;
    for (const auto& e : t.edges)
        for (auto [u, v] : {std::pair{e.i, e.j}, std::pair{e.j, e.i}}) {
            if (visited.count({u, v})) continue;
            ++faces;
            int cu = u, cv = v;
            while (!visited.count({cu, cv})) {
                visited.insert({cu, cv});
                const auto& ring = nbr[cv];
                int k = pos.at({cv, cu});
                int w = ring[(k + ring.size() - 1) % ring.size()];
                cu = cv;
                cv = w;
            }
        }
    return faces - 1; // drop the outer face
}

} // namespace mmt
