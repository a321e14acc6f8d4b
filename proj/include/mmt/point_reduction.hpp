#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmt/cds.hpp"
#include "mmt/certificate.hpp"
#include "mmt/pointset.hpp"

namespace mmt {

// One replaced target: the two split points (indices into the point set),
// the target they replace, and the stabbers whose carriers pass through it.
struct TargetPair {
    int t1 = -1;
    int t2 = -1;
    Point source;
    std::vector<int> covering;
};

// The final point set: stabber endpoints first (stabber i -> indices 2i,
// 2i+1), then the split pairs in target order. Every pair is at squared
// distance exactly epsilon_sq; every other point pair is strictly farther
// than threshold_sq.
struct PointInstance {
    PointSet points;
    std::vector<std::pair<int, int>> stabber_edges;
    std::vector<TargetPair> pairs;
    Rational epsilon_sq;
    Rational delta_sq;
    Rational threshold_sq;
};

// Structural and metric invariants of the type, checked exactly. Empty for a
// sound instance.
std::vector<std::string> point_instance_defects(const PointInstance& pi);

// Deterministic rational perturbation by decreasing powers: endpoint slot k
// moves by (a_k/4^{2+k}, b_k/4^{2+k}) with a_k, b_k in {-1,0,1} from a fixed
// schedule, so every denominator is a power of two and exact arithmetic
// downstream stays cheap;
// targets are re-derived as exact crossings of the perturbed stabbers, and a
// clause segment keeps its concurrence point by reconstruction around the
// perturbed target. A post-audit (distinctness, only on-stabber collinear
// triples, identical coverage, certificate relations when given) gates each
// schedule variant; AuditFailed after the last variant. Without a
// certificate, targets on three or more stabbers cannot be re-derived.
// The seed selects among schedules; the same seed always yields the same
// output.
CdsInstance perturb(const CdsInstance& inst, const GadgetCertificate* cert = nullptr,
                    std::uint64_t seed = 0);

// Exact minimum squared distance from any point of Q (endpoints) and T
// (targets) to any segment spanned by two other such points, skipping chords
// that contain the point while all three lie on one closed stabber. Throws
// DegenerateCollinearity when an unsanctioned collinear triple (or duplicate
// point) survives the perturbation. Above 48 points the scan restricts to
// the candidate set the split audits depend on (pairwise point distances and
// target-to-chord distances); full_scan forces the cubic scan at any size.
Rational compute_clearance(const CdsInstance& inst, bool full_scan = false);

// Largest convenient square at most delta_sq/16 (equal when that is already
// a rational square), or at most delta_sq/(4*p^2) in gap mode where p is the
// evaluated gap polynomial; gap mode guarantees delta_sq/epsilon_sq >= 4*p^2.
Rational choose_epsilon(const Rational& delta_sq,
                        const std::optional<Rational>& gap_value = std::nullopt);

// Replaces each target by two points at exact squared distance epsilon_sq
// (or, when epsilon_sq is not a rational square, the smallest convenient
// square in [epsilon_sq, 2*epsilon_sq], which becomes the stored value) on an
// exact unit direction strictly inside one sector of the covering carriers,
// so the pair straddles every covering stabber strictly. Sets threshold_sq =
// 4 * stored epsilon_sq and verifies every invariant before returning.
// delta_sq_hint, when given, must equal compute_clearance(inst) and skips
// recomputing it.
PointInstance split_targets(const CdsInstance& inst, const GadgetCertificate* cert,
                            const Rational& epsilon_sq,
                            const std::optional<Rational>& delta_sq_hint = std::nullopt);

struct SeparationViolation {
    int pair = -1;
    int p = -1;
    int q = -1;
};

// For every split pair and every point pair (p,q) not both in it: if segment
// pq strictly separates the split points, then p and q must trace back to a
// common stabber covering the source target, with the source strictly
// between them (stabber edges are the plain case; on instances whose
// stabbers each cover one target these are the only separators). Returns all
// counterexamples; must be empty.
std::vector<SeparationViolation> separation_soundness_audit(const PointInstance& pi);

} // namespace mmt
