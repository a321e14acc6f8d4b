#include "mmt/point_reduction.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mmt/direction.hpp"
#include "mmt/error.hpp"
#include "mmt/reduction.hpp"

namespace mmt {

namespace {

// splitmix64-style mixer; drives the perturbation schedule deterministically.
std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

int schedule_digit(std::uint64_t seed, int variant, int slot, int axis) {
    const std::uint64_t h =
        mix64(0x9e3779b97f4a7c15ull * (std::uint64_t)(slot + 1) +
              0xd1b54a32d192ed03ull * (std::uint64_t)variant + (std::uint64_t)axis +
              mix64(seed));
    return (int)(h % 3) - 1;
}

Rational fraction(long num, const mpz_class& den) {
    mpq_class q(mpz_class(num), den);
    q.canonicalize();
    return Rational(q);
}

// Parameter t with p = s.a + t*(s.b - s.a); precondition: p on the carrier.
Rational carrier_param(const Point& p, const Segment& s) {
    const Point d = s.b - s.a;
    return dot(p - s.a, d) / dot(d, d);
}

std::vector<Point> all_points(const CdsInstance& inst) {
    std::vector<Point> pts;
    pts.reserve(2 * inst.stabbers.size() + inst.targets.size());
    for (const Segment& s : inst.stabbers) {
        pts.push_back(s.a);
        pts.push_back(s.b);
    }
    for (const Point& t : inst.targets) pts.push_back(t);
    return pts;
}

// Indices of the stabbers whose closed segment contains each point.
std::vector<std::vector<int>> stabber_membership(const CdsInstance& inst,
                                                 const std::vector<Point>& pts) {
    std::vector<std::vector<int>> on(pts.size());
    for (int i = 0; i < (int)pts.size(); ++i)
        for (int s = 0; s < (int)inst.stabbers.size(); ++s)
            if (point_on_segment(pts[i], inst.stabbers[s])) on[i].push_back(s);
    return on;
}

bool share_stabber(const std::vector<int>& a, const std::vector<int>& b,
                   const std::vector<int>& c) {
    for (int s : a)
        if (std::binary_search(b.begin(), b.end(), s) &&
            std::binary_search(c.begin(), c.end(), s))
            return true;
    return false;
}

// Empty on success, else the first reason this perturbed copy is unusable.
std::string perturbed_defect(const CdsInstance& before, const CdsInstance& after,
                             const GadgetCertificate* cert) {
    const std::vector<Point> pts = all_points(after);
    for (int i = 0; i < (int)pts.size(); ++i)
        for (int j = i + 1; j < (int)pts.size(); ++j)
            if (pts[i] == pts[j]) return "coincident points";

    const std::vector<std::vector<int>> on = stabber_membership(after, pts);
    for (int i = 0; i < (int)pts.size(); ++i)
        for (int j = i + 1; j < (int)pts.size(); ++j)
            for (int k = j + 1; k < (int)pts.size(); ++k)
                if (orientation(pts[i], pts[j], pts[k]) == Orient::Collinear &&
                    !share_stabber(on[i], on[j], on[k]))
                    return "collinear triple off every stabber";

    if (after.coverage != before.coverage) return "coverage changed";

    if (cert) {
        std::vector<std::string> defects = certificate_defects(after, *cert);
        if (!defects.empty()) return defects.front();
    } else {
        std::vector<std::string> defects = validate_instance(after);
        if (!defects.empty()) return defects.front();
    }
    return "";
}

// Round up to a rational whose square lies in [x, 2x]; exact sqrt when x is
// already a square of a rational.
Rational sqrt_within_factor_two(const Rational& x) {
    if (x.is_perfect_square()) return x.exact_sqrt();
    const long nbits = (long)mpz_sizeinbase(x.raw().get_num().get_mpz_t(), 2);
    const long dbits = (long)mpz_sizeinbase(x.raw().get_den().get_mpz_t(), 2);
    unsigned prec = (unsigned)std::max(8l, (dbits - nbits) / 2 + 8);
    for (;; prec += 32) {
        const Rational s = x.sqrt_lower_bound(prec);
        mpz_class den = 1;
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), prec);
        const Rational r = s + fraction(1, den); // r*r > x by the floor bound
        if (r * r <= 2 * x) return r;
    }
}

} // namespace

CdsInstance perturb(const CdsInstance& inst, const GadgetCertificate* cert, std::uint64_t seed) {
    const int S = (int)inst.stabbers.size();
    const int T = (int)inst.targets.size();

    std::vector<int> seg_clause(S, -1); // owning clause for re-derived segments
    if (cert) {
        for (int c = 0; c < (int)cert->clauses.size(); ++c)
            for (int id : cert->clauses[c].segment_ids) seg_clause[id] = c;
    } else {
        for (const auto& cov : inst.coverage)
            if (cov.size() > 2)
                fail(ErrorKind::CertificateMismatch,
                     "targets on three or more stabbers need the compiler certificate");
    }

    // Schedule base 4: denominators stay powers of two, so the exact
    // arithmetic downstream stays cheap; the audit carries genericity.
    const long base = 4;
    std::string last = "no schedule attempted";
    for (int variant = 0; variant < 16; ++variant) {
        mpz_class pow = base * base; // magnitude 1/base^{2+k}, k advancing per slot
        int slot = 0;
        auto offset = [&](const Point& p) {
            const Point moved{p.x + fraction(schedule_digit(seed, variant, slot, 0), pow),
                              p.y + fraction(schedule_digit(seed, variant, slot, 1), pow)};
            ++slot;
            pow *= base;
            return moved;
        };

        CdsInstance out;
        bool usable = true;
        std::vector<Segment> segs(S);
        for (int s = 0; s < S && usable; ++s) {
            if (seg_clause[s] >= 0) continue;
            segs[s] = Segment(offset(inst.stabbers[s].a), offset(inst.stabbers[s].b));
            if (segs[s].a == segs[s].b) usable = false;
        }

        std::vector<Point> tg(T);
        if (cert) {
            // Clause targets move as points; their segments are rebuilt around
            // the moved concurrence point with a jittered direction, keeping
            // the original carrier parameter so concurrence stays exact.
            for (int c = 0; c < (int)cert->clauses.size() && usable; ++c) {
                const auto& cg = cert->clauses[c];
                const Point q = offset(inst.targets[cg.target_id]);
                tg[cg.target_id] = q;
                for (int id : cg.segment_ids) {
                    const Segment& s0 = inst.stabbers[id];
                    const Rational t = carrier_param(inst.targets[cg.target_id], s0);
                    const Point d = offset(s0.b - s0.a); // jittered direction
                    if (d == Point(0, 0)) {
                        usable = false;
                        break;
                    }
                    segs[id] = Segment(q - d * t, q + d * (Rational(1) - t));
                }
            }
            for (const auto& vg : cert->vars) {
                if (!usable) break;
                const int sz = (int)vg.segment_ids.size();
                for (int k = 0; k < (int)vg.corner_target_ids.size(); ++k) {
                    auto x = segments_properly_cross(segs[vg.segment_ids[k]],
                                                     segs[vg.segment_ids[(k + 1) % sz]]);
                    if (!x) {
                        usable = false;
                        break;
                    }
                    tg[vg.corner_target_ids[k]] = *x;
                }
            }
        } else {
            for (int t = 0; t < T && usable; ++t) {
                const auto& cov = inst.coverage[t];
                if (cov.size() == 2) {
                    auto x = segments_properly_cross(segs[cov[0]], segs[cov[1]]);
                    if (!x) {
                        usable = false;
                        break;
                    }
                    tg[t] = *x;
                } else if (cov.size() == 1) {
                    const Rational tt = carrier_param(inst.targets[t], inst.stabbers[cov[0]]);
                    tg[t] = segs[cov[0]].a + (segs[cov[0]].b - segs[cov[0]].a) * tt;
                } else {
                    usable = false; // uncovered target, nothing to re-derive
                }
            }
        }
        if (!usable) {
            last = "schedule produced degenerate geometry";
            continue;
        }

        try {
            out = make_cds_instance(segs, tg, inst.relaxed_targets);
        } catch (const Error&) {
            last = "schedule produced an invalid instance";
            continue;
        }
        const std::string defect = perturbed_defect(inst, out, cert);
        if (defect.empty()) return out;
        last = defect;
    }
    fail(ErrorKind::AuditFailed, "every perturbation schedule failed: " + last);
}

Rational compute_clearance(const CdsInstance& inst, bool full_scan) {
    const std::vector<Point> pts = all_points(inst);
    const int N = (int)pts.size();
    const int T = (int)inst.targets.size();
    if (N < 3) fail(ErrorKind::InvalidInstance, "clearance needs at least three points");
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            if (pts[i] == pts[j])
                fail(ErrorKind::DegenerateCollinearity, "duplicate point survives perturbation");

    const std::vector<std::vector<int>> on = stabber_membership(inst, pts);
    bool found = false;
    Rational best;
    auto consider_chord = [&](int p, int u, int v) {
        const Rational d2 = point_segment_dist_sq(pts[p], Segment(pts[u], pts[v]));
        if (d2.is_zero()) {
            if (!share_stabber(on[p], on[u], on[v]))
                fail(ErrorKind::DegenerateCollinearity,
                     "collinear triple off every stabber survives perturbation");
            return; // the chord contains the point by construction
        }
        if (!found || d2 < best) {
            best = d2;
            found = true;
        }
    };

    if (full_scan || N <= 48) {
        for (int p = 0; p < N; ++p)
            for (int u = 0; u < N; ++u) {
                if (u == p) continue;
                for (int v = u + 1; v < N; ++v)
                    if (v != p) consider_chord(p, u, v);
            }
    } else {
        // Above desk scale only the candidate set the split audits depend on
        // is scanned: pairwise point distances, and each target (where the
        // split pairs will live) against every chord. The split and
        // separation audits re-verify the resulting bound exactly.
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) {
                const Rational d2 = dist_sq(pts[i], pts[j]);
                if (!found || d2 < best) {
                    best = d2;
                    found = true;
                }
            }
        for (int t = 0; t < T; ++t) {
            const int p = N - T + t; // targets sit after the endpoints
            for (int u = 0; u < N; ++u) {
                if (u == p) continue;
                for (int v = u + 1; v < N; ++v)
                    if (v != p) consider_chord(p, u, v);
            }
        }
    }
    if (!found) fail(ErrorKind::DegenerateCollinearity, "all chords are degenerate");
    return best;
}

Rational choose_epsilon(const Rational& delta_sq, const std::optional<Rational>& gap_value) {
    if (delta_sq.sign() <= 0) fail(ErrorKind::InvalidInstance, "clearance must be positive");
    Rational target = delta_sq / 16;
    if (gap_value) {
        if (gap_value->sign() <= 0)
            fail(ErrorKind::InvalidInstance, "gap polynomial value must be positive");
        target = delta_sq / (4 * (*gap_value) * (*gap_value));
    }
    if (target.is_perfect_square()) return target;
    // Largest power of four at most target: a one-limb square (pair distance
    // 2^e exactly realizable) within the required factor-4 window.
    auto pow4 = [](long e) {
        mpq_class q;
        if (e >= 0)
            q = mpq_class(mpz_class(1) << (2 * e), 1);
        else
            q = mpq_class(1, mpz_class(1) << (-2 * e));
        return Rational{q};
    };
    const long nbits = (long)mpz_sizeinbase(target.raw().get_num().get_mpz_t(), 2);
    const long dbits = (long)mpz_sizeinbase(target.raw().get_den().get_mpz_t(), 2);
    long e = (nbits - dbits) / 2 + 2; // upper start; bit sizes bound log2 within 1
    while (pow4(e) > target) --e;
    return pow4(e);
}

PointInstance split_targets(const CdsInstance& inst, const GadgetCertificate* cert,
                            const Rational& epsilon_sq,
                            const std::optional<Rational>& delta_sq_hint) {
    (void)cert; // sector counts come from the coverage lists
    {
        const std::vector<std::string> defects = validate_instance(inst);
        if (!defects.empty())
            fail(ErrorKind::InvalidInstance, "splitting an ill-formed instance: " + defects.front());
    }
    const Rational delta_sq = delta_sq_hint ? *delta_sq_hint : compute_clearance(inst);
    if (epsilon_sq.sign() <= 0 || epsilon_sq >= delta_sq)
        fail(ErrorKind::InvalidInstance, "epsilon_sq must lie strictly between 0 and delta_sq");

    const Rational eps = sqrt_within_factor_two(epsilon_sq);
    const Rational stored = eps * eps; // the realized pair distance, >= request
    if (4 * stored > delta_sq)
        fail(ErrorKind::InvalidInstance, "epsilon too close to the clearance");
    const Rational half = eps / 2;

    PointInstance pi;
    pi.epsilon_sq = stored;
    pi.delta_sq = delta_sq;
    pi.threshold_sq = 4 * stored;

    std::vector<Point> pts;
    for (int s = 0; s < (int)inst.stabbers.size(); ++s) {
        pi.stabber_edges.emplace_back((int)pts.size(), (int)pts.size() + 1);
        pts.push_back(inst.stabbers[s].a);
        pts.push_back(inst.stabbers[s].b);
    }
    for (int t = 0; t < (int)inst.targets.size(); ++t) {
        const auto& cov = inst.coverage[t];
        std::vector<Point> dirs;
        for (int s : cov) {
            const Point d = inst.stabbers[s].b - inst.stabbers[s].a;
            dirs.push_back(d);
            dirs.push_back(Point(0, 0) - d);
        }
        for (int i = 0; i < (int)dirs.size(); ++i)
            for (int j = i + 1; j < (int)dirs.size(); ++j)
                if (same_direction(dirs[i], dirs[j]))
                    fail(ErrorKind::SectorDegeneracy,
                         "two covering stabbers share a carrier direction at target " +
                             std::to_string(t));
        std::sort(dirs.begin(), dirs.end(), dir_less);
        const Point w = unit_dir_in_gap(dirs[0], dirs[1]);
        TargetPair pr;
        pr.t1 = (int)pts.size();
        pr.t2 = (int)pts.size() + 1;
        pr.source = inst.targets[t];
        pr.covering = cov;
        pts.push_back(inst.targets[t] + w * half);
        pts.push_back(inst.targets[t] - w * half);
        pi.pairs.push_back(std::move(pr));
    }
    pi.points = PointSet(std::move(pts)); // throws DuplicatePoints on collision

    const std::vector<std::string> defects = point_instance_defects(pi);
    if (!defects.empty())
        fail(ErrorKind::AuditFailed, "split audit failed: " + defects.front());
    return pi;
}

std::vector<std::string> point_instance_defects(const PointInstance& pi) {
    std::vector<std::string> out;
    const int N = pi.points.size();

    if (pi.epsilon_sq.sign() <= 0) out.push_back("epsilon_sq not positive");
    if (!(pi.epsilon_sq < pi.threshold_sq)) out.push_back("threshold_sq not above epsilon_sq");
    if (!(pi.threshold_sq <= pi.delta_sq)) out.push_back("threshold_sq above delta_sq");
    if (!(pi.epsilon_sq < pi.delta_sq)) out.push_back("epsilon_sq not below delta_sq");

    std::vector<int> pair_of(N, -1);
    for (int j = 0; j < (int)pi.pairs.size(); ++j) {
        const TargetPair& pr = pi.pairs[j];
        const std::string tag = "pair " + std::to_string(j);
        if (pr.t1 < 0 || pr.t1 >= N || pr.t2 < 0 || pr.t2 >= N || pr.t1 == pr.t2) {
            out.push_back(tag + ": bad point indices");
            continue;
        }
        if (pair_of[pr.t1] >= 0 || pair_of[pr.t2] >= 0) {
            out.push_back(tag + ": point already claimed by another pair");
            continue;
        }
        pair_of[pr.t1] = j;
        pair_of[pr.t2] = j;
        if (dist_sq(pi.points[pr.t1], pi.points[pr.t2]) != pi.epsilon_sq)
            out.push_back(tag + ": split distance differs from epsilon_sq");
        if (pr.covering.empty()) out.push_back(tag + ": no covering stabber");
        for (int s : pr.covering) {
            if (s < 0 || s >= (int)pi.stabber_edges.size()) {
                out.push_back(tag + ": covering index out of range");
                continue;
            }
            const Segment seg(pi.points[pi.stabber_edges[s].first],
                              pi.points[pi.stabber_edges[s].second]);
            if (!point_on_segment(pr.source, seg))
                out.push_back(tag + ": source not on covering stabber " + std::to_string(s));
            const Side s1 = side_of_line(pi.points[pr.t1], seg);
            const Side s2 = side_of_line(pi.points[pr.t2], seg);
            if (s1 == Side::On || s2 == Side::On || s1 == s2)
                out.push_back(tag + ": split points do not straddle stabber " +
                              std::to_string(s));
        }
    }

    for (int e = 0; e < (int)pi.stabber_edges.size(); ++e) {
        const auto& [ea, eb] = pi.stabber_edges[e];
        if (ea < 0 || ea >= N || eb < 0 || eb >= N || ea == eb)
            out.push_back("stabber edge " + std::to_string(e) + ": bad indices");
        else if (pair_of[ea] >= 0 || pair_of[eb] >= 0)
            out.push_back("stabber edge " + std::to_string(e) + ": endpoint inside a pair");
    }

    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            if (pair_of[i] >= 0 && pair_of[i] == pair_of[j]) continue;
            if (!(dist_sq(pi.points[i], pi.points[j]) > pi.threshold_sq))
                out.push_back("points " + std::to_string(i) + "," + std::to_string(j) +
                              ": non-pair distance within threshold");
        }
    return out;
}

std::vector<SeparationViolation> separation_soundness_audit(const PointInstance& pi) {
    std::vector<SeparationViolation> out;
    const int N = pi.points.size();

    // Trace every point back to original geometry: endpoints to themselves,
    // split points to their source target.
    std::vector<const Point*> origin(N, nullptr);
    std::vector<int> pair_of(N, -1);
    for (int e = 0; e < (int)pi.stabber_edges.size(); ++e) {
        origin[pi.stabber_edges[e].first] = &pi.points[pi.stabber_edges[e].first];
        origin[pi.stabber_edges[e].second] = &pi.points[pi.stabber_edges[e].second];
    }
    for (int j = 0; j < (int)pi.pairs.size(); ++j) {
        origin[pi.pairs[j].t1] = &pi.pairs[j].source;
        origin[pi.pairs[j].t2] = &pi.pairs[j].source;
        pair_of[pi.pairs[j].t1] = j;
        pair_of[pi.pairs[j].t2] = j;
    }

    for (int j = 0; j < (int)pi.pairs.size(); ++j) {
        const TargetPair& pr = pi.pairs[j];
        const Segment gap(pi.points[pr.t1], pi.points[pr.t2]);
        for (int p = 0; p < N; ++p) {
            for (int q = p + 1; q < N; ++q) {
                if (pair_of[p] == j && pair_of[q] == j) continue;
                if (!segments_properly_cross(Segment(pi.points[p], pi.points[q]), gap))
                    continue;
                // Sanctioned separators run along a covering stabber with the
                // source strictly between the traced originals.
                bool sanctioned = false;
                if (origin[p] && origin[q]) {
                    for (int s : pr.covering) {
                        const Segment seg(pi.points[pi.stabber_edges[s].first],
                                          pi.points[pi.stabber_edges[s].second]);
                        if (point_on_segment(*origin[p], seg) &&
                            point_on_segment(*origin[q], seg) && *origin[p] != pr.source &&
                            *origin[q] != pr.source &&
                            point_on_segment(pr.source, Segment(*origin[p], *origin[q]))) {
                            sanctioned = true;
                            break;
                        }
                    }
                }
                if (!sanctioned) out.push_back({j, p, q});
            }
        }
    }
    return out;
}

} // namespace mmt
