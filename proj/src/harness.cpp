#include "mmt/harness.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "mmt/error.hpp"
#include "mmt/reduction.hpp"
#include "mmt/triangulation.hpp"

namespace mmt {

namespace {

std::string formula_id(const Cnf3& cnf) {
    const std::string text = to_dimacs(cnf);
    std::uint64_t h = 1469598103934665603ull; // FNV-1a
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << "v" << cnf.num_vars << "c" << cnf.clauses.size() << "-" << std::hex << h;
    return os.str();
}

} // namespace

std::optional<std::vector<bool>> sat_bruteforce(const Cnf3& cnf) {
    validate_formula(cnf);
    if (cnf.num_vars > 20) fail(ErrorKind::TooLarge, "brute-force SAT capped at 20 variables");
    const int n = cnf.num_vars;
    for (std::uint64_t m = 0; m < (1ull << n); ++m) {
        std::vector<bool> asg(n);
        for (int i = 0; i < n; ++i) asg[i] = (m >> (n - 1 - i)) & 1; // x0 most significant
        if (eval_formula(cnf, asg)) return asg;
    }
    return std::nullopt;
}

EquivalenceReport end_to_end_check(const Cnf3& cnf) {
    EquivalenceReport rep;
    rep.formula_id = formula_id(cnf);

    const auto model = sat_bruteforce(cnf);
    rep.sat = model.has_value();

    const CompileResult cr = compile_3sat_to_cds(cnf);
    const auto structured = solve_structured(cr.inst, cr.cert);
    rep.cds_feasible = structured.has_value();
    if ((int)cr.inst.stabbers.size() <= 24) {
        const auto brute = solve_bruteforce(cr.inst);
        if (brute.has_value() != structured.has_value())
            fail(ErrorKind::Internal, "structured and brute-force CDS solvers disagree on " +
                                          rep.formula_id);
    }
    if (structured) {
        const std::vector<bool> decoded = decode_solution(cr.inst, cr.cert, *structured);
        if (!eval_formula(cnf, decoded))
            fail(ErrorKind::Internal, "decoded cover does not satisfy " + rep.formula_id);
    }

    const int points = 2 * (int)(cr.inst.stabbers.size() + cr.inst.targets.size());
    if (points <= 12) {
        const CdsInstance pert = perturb(cr.inst, &cr.cert);
        const Rational delta_sq = compute_clearance(pert);
        const PointInstance pi = split_targets(pert, &cr.cert, choose_epsilon(delta_sq), delta_sq);
        std::vector<Edge> forbidden;
        for (int i = 0; i < pi.points.size(); ++i)
            for (int j = i + 1; j < pi.points.size(); ++j)
                if (dist_sq(pi.points[i], pi.points[j]) <= pi.epsilon_sq)
                    forbidden.push_back(Edge(i, j));
        rep.triangulation_feasible =
            triangulation_exists_avoiding(pi.points, forbidden).has_value();
    }

    rep.consistent = rep.sat == rep.cds_feasible &&
                     (!rep.triangulation_feasible || *rep.triangulation_feasible == rep.sat);
    return rep;
}

Cnf3 random_small_planar_cnf(std::uint64_t seed, int max_vars, int max_clauses) {
    max_vars = std::clamp(max_vars, 1, 3);
    max_clauses = std::clamp(max_clauses, 1, 2);
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return lo + (int)(rng() % (std::uint64_t)(hi - lo + 1)); };

    Cnf3 cnf;
    cnf.num_vars = pick(1, max_vars);
    const int clauses = pick(1, max_clauses);
    for (int c = 0; c < clauses; ++c) {
        int vars[3] = {0, 1, 2};
        for (int i = cnf.num_vars - 1; i > 0; --i) std::swap(vars[i], vars[pick(0, i)]);
        Clause3 cl;
        const int width = pick(1, std::min(3, cnf.num_vars));
        for (int k = 0; k < width; ++k) cl.lits.push_back({vars[k], pick(0, 1) == 1});
        cnf.clauses.push_back(std::move(cl));
    }
    return cnf;
}

CdsInstance x_fixture() {
    return make_cds_instance({Segment(Point(0, 0), Point(4, 4)), Segment(Point(0, 4), Point(4, 0))},
                             {Point(2, 2)});
}

CdsInstance negative_gadget_cds() {
    // Three pairwise-crossing stabbers, one target strictly inside each, away
    // from every crossing. Covering all three targets needs all three
    // stabbers, and any two of them cross, so no disjoint cover exists. Each
    // target rides a single stabber, so the only chord through it is that
    // stabber's own edge; with the full edges pairwise crossing, at most one
    // split pair can ever be separated.
    const Segment s0(Point(0, 0), Point(12, 6));
    const Segment s1(Point(0, 6), Point(12, 0));
    const Segment s2(Point(0, 3), Point(12, 4));
    return make_cds_instance({s0, s1, s2},
                             {Point(3, Rational(3, 2)), Point(9, Rational(3, 2)),
                              Point(9, Rational(15, 4))},
                             {0, 1, 2});
}

PointInstance negative_gadget_instance() {
    const CdsInstance pert = perturb(negative_gadget_cds());
    const Rational delta_sq = compute_clearance(pert);
    return split_targets(pert, nullptr, choose_epsilon(delta_sq), delta_sq);
}

} // namespace mmt
