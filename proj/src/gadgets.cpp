#include "mmt/gadgets.hpp"

#include <algorithm>
#include <numeric>

#include "mmt/direction.hpp"
#include "mmt/error.hpp"

namespace mmt {

namespace {

Segment extended(const Point& a, const Point& b, const Rational& eta) {
    Point d = b - a;
    return {a - d * eta, b + d * eta};
}

// Rough angular-width class of the ccw gap (a, b): 2 = at least a half turn,
// 1 = at least a quarter turn, 0 = narrow. Only steers where spare corners
// go; the exact audits carry correctness.
int gap_class(const Point& a, const Point& b) {
    Rational cr = cross(a, b);
    if (cr.sign() < 0 || (cr.is_zero() && dot(a, b).sign() < 0)) return 2;
    if (cr.sign() > 0 && dot(a, b).sign() < 0) return 1;
    return 0;
}

BuiltCycle build_lens(const Point& center, const Rational& radius, const CycleIncidence& inc) {
    Point u = unit_dir_near(inc.toward - center, 24);
    Point w = perp_ccw(u);
    Rational half(1, 2), quarter(1, 4);
    Point tip = center + u * radius;
    Segment crossed{tip - w * (radius * half), tip + w * (radius * half)};
    Point corner = tip + w * (radius * quarter);
    Segment other{corner - u * (radius * quarter), corner + u * (radius * quarter)};

    BuiltCycle cyc;
    int q = inc.positive ? 0 : 1; // parity of the side the incidence crosses
    if (q == 0)
        cyc.sides = {crossed, other};
    else
        cyc.sides = {other, crossed};
    cyc.corners = {corner};
    cyc.assigned_side = {q};
    return cyc;
}

} // namespace

BuiltCycle build_variable_cycle(const Point& center, const Rational& radius,
                                const std::vector<CycleIncidence>& inc) {
    const int delta = static_cast<int>(inc.size());
    if (delta == 0) fail(ErrorKind::Internal, "variable cycle needs at least one incidence");

    std::vector<Point> ray(delta);
    for (int j = 0; j < delta; ++j) ray[j] = inc[j].toward - center;
    for (int i = 0; i < delta; ++i)
        for (int j = i + 1; j < delta; ++j)
            if (same_direction(ray[i], ray[j]))
                fail(ErrorKind::DegenerateDirections, "two incidences at the same angle");

    if (delta == 1) {
        BuiltCycle cyc = build_lens(center, radius, inc[0]);
        // The lens is audited like the general case below.
        Segment e{center, inc[0].toward};
        auto hit = segments_properly_cross(e, cyc.sides[cyc.assigned_side[0]]);
        auto miss = segments_properly_cross(e, cyc.sides[1 - cyc.assigned_side[0]]);
        auto corner_hit = segments_properly_cross(cyc.sides[0], cyc.sides[1]);
        if (!hit || miss || !corner_hit || !(*corner_hit == cyc.corners[0]))
            fail(ErrorKind::AuditFailed, "lens construction failed its crossing audit");
        return cyc;
    }

    // Sort incidences counterclockwise; permute results back at the end.
    std::vector<int> ord(delta);
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](int a, int b) { return dir_less(ray[a], ray[b]); });

    std::vector<int> q(delta); // required parity of the side ray j crosses
    for (int j = 0; j < delta; ++j) q[j] = inc[ord[j]].positive ? 0 : 1;

    // Corner counts between consecutive rays: v_j = g_j + 1 with
    // g_j = q_{j+1} + q_j + 1 (mod 2) keeps every crossing on the required
    // parity; spare corners (sum must reach 2*delta) go to the widest gaps
    // in pairs, which preserves all parities.
    std::vector<int> g(delta);
    int total = 0;
    for (int j = 0; j < delta; ++j) {
        g[j] = (q[(j + 1) % delta] + q[j] + 1) % 2;
        total += g[j];
    }
    if ((delta - total) % 2 != 0) fail(ErrorKind::Internal, "corner parity bookkeeping broken");
    {
        std::vector<int> gaps(delta);
        std::iota(gaps.begin(), gaps.end(), 0);
        std::stable_sort(gaps.begin(), gaps.end(), [&](int a, int b) {
            return gap_class(ray[ord[a]], ray[ord[(a + 1) % delta]]) >
                   gap_class(ray[ord[b]], ray[ord[(b + 1) % delta]]);
        });
        for (int pad = (delta - total) / 2, i = 0; pad > 0; --pad, i = (i + 1) % delta)
            g[gaps[i]] += 2;
    }

    std::vector<Point> W; // corner directions, ccw, exact unit vectors
    std::vector<int> first_after(delta);
    for (int j = 0; j < delta; ++j) {
        first_after[j] = static_cast<int>(W.size());
        auto spread = unit_dirs_in_gap(ray[ord[j]], ray[ord[(j + 1) % delta]], g[j] + 1);
        W.insert(W.end(), spread.begin(), spread.end());
    }
    const int m = 2 * delta;
    if (static_cast<int>(W.size()) != m) fail(ErrorKind::Internal, "corner count mismatch");
    for (int k = 0; k < m; ++k)
        if (cross(W[k], W[(k + 1) % m]).sign() <= 0)
            fail(ErrorKind::AuditFailed, "corner directions span a reflex gap");

    std::vector<Point> z(m);
    for (int k = 0; k < m; ++k) z[k] = center + W[k] * radius;

    // Ray j exits between corners first_after[j]-1 and first_after[j], i.e.
    // through old side first_after[j]-1; rotating labels by `shift` puts that
    // side on parity q_j.
    int shift = (2 * delta - 1 - q[0]) % 2;
    for (int j = 0; j < delta; ++j)
        if (((first_after[j] - 1 - shift) % 2 + 2) % 2 != q[j])
            fail(ErrorKind::Internal, "ray-side parity bookkeeping broken");

    for (Rational eta(1, 8);; eta = eta / Rational(2)) {
        std::vector<Segment> sides(m);
        for (int k = 0; k < m; ++k) sides[k] = extended(z[k], z[(k + 1) % m], eta);

        bool ok = true;
        for (int k = 0; k < m && ok; ++k) {
            auto hit = segments_properly_cross(sides[k], sides[(k + 1) % m]);
            if (!hit || !(*hit == z[(k + 1) % m])) ok = false;
        }
        for (int a = 0; a < m && ok; ++a)
            for (int b = a + 2; b < m && ok; ++b) {
                if (a == 0 && b == m - 1) continue; // cyclically adjacent
                if (segments_conflict(sides[a], sides[b])) ok = false;
            }
        for (int j = 0; j < delta && ok; ++j) {
            Segment e{center, inc[ord[j]].toward};
            for (int k = 0; k < m && ok; ++k) {
                bool crossed = segments_properly_cross(e, sides[k]).has_value();
                if (crossed != (k == (first_after[j] - 1 + m) % m)) ok = false;
            }
        }
        if (ok) {
            BuiltCycle cyc;
            cyc.sides.resize(m);
            cyc.corners.resize(m);
            for (int k = 0; k < m; ++k) {
                cyc.sides[k] = sides[(k + shift) % m];
                cyc.corners[k] = z[(k + shift + 1) % m];
            }
            cyc.assigned_side.resize(delta);
            for (int j = 0; j < delta; ++j)
                cyc.assigned_side[ord[j]] = ((first_after[j] - 1 - shift) % m + m) % m;
            return cyc;
        }
        if (eta < Rational(1, 1024))
            fail(ErrorKind::AuditFailed, "no extension factor passes the cycle crossing audit");
    }
}

Segment shift_clause_segment(const Segment& incidence, const Segment& assigned_side) {
    auto hit = segments_properly_cross(incidence, assigned_side);
    if (!hit) fail(ErrorKind::Internal, "incidence segment misses its assigned side");
    Point sigma = (*hit - incidence.a) * Rational(1, 2);
    Segment shifted{incidence.a + sigma, incidence.b + sigma};
    auto still = segments_properly_cross(shifted, assigned_side);
    if (!still || !(*still == *hit))
        fail(ErrorKind::Internal, "carrier shift moved the assigned crossing");
    if (!point_on_segment(incidence.b, shifted) || incidence.b == shifted.a ||
        incidence.b == shifted.b)
        fail(ErrorKind::Internal, "clause vertex not interior after shift");
    return shifted;
}

} // namespace mmt
