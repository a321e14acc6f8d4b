#include "mmt/direction.hpp"

#include <algorithm>
#include <cstddef>

#include "mmt/error.hpp"

namespace mmt {

namespace {

// 0 for the upper half (incl. positive x-axis), 1 for the lower (incl. negative x-axis).
int dir_half(const Point& v) {
    int ys = v.y.sign();
    if (ys > 0 || (ys == 0 && v.x.sign() > 0)) return 0;
    return 1;
}

// Direction vector scaled to a balanced magnitude: v / (|x| + |y|).
Point l1_normalized(const Point& v) {
    Rational l1 = v.x.abs() + v.y.abs();
    return {v.x / l1, v.y / l1};
}

} // namespace

Point perp_ccw(const Point& v) { return {-v.y, v.x}; }

bool same_direction(const Point& u, const Point& v) {
    return cross(u, v).is_zero() && dot(u, v).sign() > 0;
}

bool dir_less(const Point& u, const Point& v) {
    int hu = dir_half(u), hv = dir_half(v);
    if (hu != hv) return hu < hv;
    return cross(u, v).sign() > 0;
}

bool ccw_strictly_between(const Point& a, const Point& u, const Point& b) {
    int cab = cross(a, b).sign();
    bool narrow = cab > 0; // gap smaller than pi
    if (cab == 0 && dot(a, b).sign() > 0) fail(ErrorKind::Internal, "betweenness on empty gap");
    if (narrow) return cross(a, u).sign() > 0 && cross(u, b).sign() > 0;
    // Wide gap: strictly between iff u is outside the closed complementary cone b..a.
    return !(cross(b, u).sign() >= 0 && cross(u, a).sign() >= 0);
}

Point unit_dir_near(const Point& w, unsigned prec) {
    if (w.x.sign() == 0 && w.y.sign() == 0) fail(ErrorKind::Internal, "zero direction");
    if (w.x.sign() < 0) {
        Point u = unit_dir_near(Point() - w, prec);
        return Point() - u;
    }
    // Integer vector (X, Y) with the direction of w; X >= 0 here.
    mpz_class X = w.x.raw().get_num() * w.y.raw().get_den();
    mpz_class Y = w.y.raw().get_num() * w.x.raw().get_den();
    // Only ~2*prec leading bits of (X, Y) survive the 2^-prec floor sqrt below;
    // dropping the rest keeps t's operands small without moving the limit.
    const std::size_t keep = 2 * static_cast<std::size_t>(prec) + 16;
    const std::size_t wide = std::max(mpz_sizeinbase(X.get_mpz_t(), 2),
                                      mpz_sizeinbase(Y.get_mpz_t(), 2));
    if (wide > keep) {
        const auto shift = static_cast<mp_bitcnt_t>(wide - keep);
        mpz_fdiv_q_2exp(X.get_mpz_t(), X.get_mpz_t(), shift);
        mpz_fdiv_q_2exp(Y.get_mpz_t(), Y.get_mpz_t(), shift);
    }
    // Half-angle tangent t = Y / (|w| + X), with |w| replaced by a floor square
    // root at 2^-prec resolution. u(t) is exactly on the unit circle for any
    // rational t; its direction converges to w as prec grows.
    mpz_class g = X * X + Y * Y;
    mpz_class scaled = g << (2 * prec);
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    mpz_class den = s + (X << prec);
    if (den == 0) fail(ErrorKind::Internal, "degenerate half-angle");
    mpq_class t(Y << prec, den);
    t.canonicalize();
    Rational tr{t};
    Rational t2 = tr * tr;
    Rational one(1);
    return {(one - t2) / (one + t2), (tr + tr) / (one + t2)};
}

Point unit_dir_in_gap(const Point& a, const Point& b) {
    bool full_circle = same_direction(a, b);
    Point guide;
    if (full_circle) {
        guide = Point() - a;
    } else {
        int cab = cross(a, b).sign();
        if (cab > 0) {
            guide = l1_normalized(a) + l1_normalized(b);
        } else if (cab == 0) {
            guide = perp_ccw(a); // opposite directions, gap exactly pi
        } else {
            guide = Point() - (l1_normalized(a) + l1_normalized(b));
            if (guide.x.is_zero() && guide.y.is_zero()) guide = perp_ccw(a);
        }
    }
    for (unsigned prec = 8; prec <= 1u << 14; prec *= 2) {
        Point u = unit_dir_near(guide, prec);
        if (full_circle ? !same_direction(u, a) : ccw_strictly_between(a, u, b)) return u;
    }
    fail(ErrorKind::Internal, "unit direction search did not converge");
}

std::vector<Point> unit_dirs_in_gap(const Point& a, const Point& b, int count) {
    if (count <= 0) return {};
    Point mid = unit_dir_in_gap(a, b);
    int left = (count - 1) / 2;
    int right = count - 1 - left;
    std::vector<Point> out = unit_dirs_in_gap(a, mid, left);
    out.push_back(mid);
    for (auto& p : unit_dirs_in_gap(mid, b, right)) out.push_back(p);
    return out;
}

} // namespace mmt
