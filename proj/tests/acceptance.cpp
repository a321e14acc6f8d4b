// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mmt/cds.hpp"
#include "mmt/cnf.hpp"
#include "mmt/error.hpp"
#include "mmt/harness.hpp"
#include "mmt/point_reduction.hpp"
#include "mmt/pointset.hpp"
#include "mmt/reduction.hpp"
#include "mmt/svg.hpp"
#include "mmt/triangulation.hpp"

using namespace mmt;

namespace {

#define REQUIRE(cond, msg)                                     \
    do {                                                       \
        if (!(cond)) throw std::runtime_error(std::string(msg)); \
    } while (0)

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string showcase_text() {
    std::ifstream in(std::string(MMT_DATA_DIR) + "/showcase.cnf");
    REQUIRE(in.good(), "missing showcase.cnf");
    return std::string(std::istreambuf_iterator<char>(in), {});
}

// Triangulation count of a convex polygon by the interval recurrence:
// T[i][j] = sum over k of T[i][k] * T[k][j]. Independent of the enumerator.
long convex_polygon_count(int n) {
    std::vector<std::vector<long>> T(n, std::vector<long>(n, 0));
    for (int i = 0; i + 1 < n; ++i) T[i][i + 1] = 1;
    for (int len = 2; len < n; ++len)
        for (int i = 0; i + len < n; ++i) {
            const int j = i + len;
            for (int k = i + 1; k < j; ++k) T[i][j] += T[i][k] * T[k][j];
        }
    return T[0][n - 1];
}

PointSet parabola_points(int n) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.emplace_back(Point(Rational(i), Rational(i) * Rational(i)));
    return PointSet(pts);
}

std::vector<PointSet> make_random_sets(int count, int n_min, int n_max, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> size_dist(n_min, n_max);
    std::uniform_int_distribution<long> coord(0, 20);
    std::vector<PointSet> sets;
    while ((int)sets.size() < count) {
        const int n = size_dist(rng);
        std::vector<Point> pts;
        while ((int)pts.size() < n) {
            const Point p(Rational(coord(rng)), Rational(coord(rng)));
            bool fresh = true;
            for (const Point& q : pts) fresh = fresh && !(q == p);
            if (fresh) pts.push_back(p);
        }
        try {
            PointSet ps(pts);
            convex_hull_boundary(ps); // rejects fully collinear draws
            sets.push_back(std::move(ps));
        } catch (const Error&) {
            continue;
        }
    }
    return sets;
}

size_t count_occurrences(const std::string& text, const std::string& needle) {
    size_t n = 0;
    for (size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

// Compile a formula all the way to its split point instance.
PointInstance compile_to_points(const Cnf3& cnf, const std::optional<Rational>& gap = {}) {
    const CompileResult cr = compile_3sat_to_cds(cnf);
    const CdsInstance pert = perturb(cr.inst, &cr.cert);
    const auto cert_defects = certificate_defects(pert, cr.cert);
    REQUIRE(cert_defects.empty(), "perturbed instance lost its certificate structure");
    const Rational delta_sq = compute_clearance(pert);
    const PointInstance pi = split_targets(pert, &cr.cert, choose_epsilon(delta_sq, gap), delta_sq);
    const auto defects = point_instance_defects(pi);
    REQUIRE(defects.empty(), "split instance has structural defects");
    return pi;
}

// ---- criteria ----------------------------------------------------------

std::string criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<long> expected = {2, 5, 14, 42, 132};
    for (int n = 4; n <= 8; ++n) {
        const long want = expected[n - 4];
        REQUIRE(convex_polygon_count(n) == want, "interval recurrence disagrees at n=" +
                                                     std::to_string(n));
        const auto all = enumerate_triangulations(parabola_points(n));
        REQUIRE((long)all.size() == want,
                "enumerated " + std::to_string(all.size()) + " convex triangulations at n=" +
                    std::to_string(n) + ", expected " + std::to_string(want));
    }
    const double dt = seconds_since(t0);
    REQUIRE(dt < 10.0, "convex enumeration exceeded 10s");
    std::ostringstream os;
    os << "convex position counts 2,5,14,42,132 match the interval recurrence (" << dt << "s)";
    return os.str();
}

std::string criterion_2(const std::vector<PointSet>& sets) {
    long total = 0;
    for (const PointSet& ps : sets) {
        const int n = ps.size();
        const int h = (int)convex_hull_boundary(ps).size();
        for (const Triangulation& t : enumerate_triangulations(ps)) {
            REQUIRE((int)t.edges.size() == 3 * n - h - 3,
                    "edge count != 3n-h-3 on a set with n=" + std::to_string(n));
            REQUIRE(face_count(t) == 2 * n - h - 2,
                    "face count != 2n-h-2 on a set with n=" + std::to_string(n));
            ++total;
        }
    }
    return "edge and face counts hold for " + std::to_string(total) + " triangulations of " +
           std::to_string(sets.size()) + " random sets";
}

std::string criterion_3(const std::vector<PointSet>& sets) {
    long total = 0;
    for (const PointSet& ps : sets)
        for (const Triangulation& t : enumerate_triangulations(ps)) {
            REQUIRE(separation_criterion_audit(t).empty(),
                    "separation criterion violated on a valid triangulation");
            ++total;
        }
    return "edge-separation characterization holds for " + std::to_string(total) +
           " triangulations of " + std::to_string(sets.size()) + " random sets";
}

std::string criterion_4(const std::vector<PointSet>& sets) {
    for (const PointSet& ps : sets) {
        Rational best(-1);
        for (const Triangulation& t : enumerate_triangulations(ps))
            best = std::max(best, t.min_edge_sq());
        const MaxMinResult got = maxmin_triangulation(ps);
        REQUIRE(got.optimum_sq == best, "maxmin disagrees with exhaustive enumeration");
        REQUIRE(got.witness.min_edge_sq() == best, "maxmin witness misses its own optimum");
    }
    const PointSet square({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    REQUIRE(maxmin_triangulation(square).optimum_sq == Rational(1),
            "unit square optimum is not exactly 1");
    return "maxmin equals the enumeration optimum on " + std::to_string(sets.size()) +
           " random sets and exactly 1 on the unit square";
}

std::string criterion_5() {
    const auto t0 = std::chrono::steady_clock::now();
    const int kSeeds = 1000;
    int feasible = 0;
    for (int seed = 0; seed < kSeeds; ++seed) {
        const Cnf3 f = random_small_planar_cnf((std::uint64_t)seed);
        const bool sat = sat_bruteforce(f).has_value();
        const CompileResult cr = compile_3sat_to_cds(f);
        const auto cover = solve_bruteforce(cr.inst);
        REQUIRE(cover.has_value() == sat,
                "stabbing feasibility disagrees with satisfiability at seed " +
                    std::to_string(seed));
        if (cover) {
            const std::vector<bool> decoded = decode_solution(cr.inst, cr.cert, *cover);
            REQUIRE(eval_formula(f, decoded),
                    "decoded cover does not satisfy the formula at seed " + std::to_string(seed));
            ++feasible;
        }
    }
    const double dt = seconds_since(t0);
    REQUIRE(dt < 120.0, "equivalence sweep exceeded two minutes");
    std::ostringstream os;
    os << kSeeds << " seeded formulas agree across levels (" << feasible << " satisfiable, " << dt
       << "s)";
    return os.str();
}

std::string criterion_6() {
    // Single-clause formulas compile to at most 12 points, so the
    // triangulation level itself is decidable by enumeration.
    for (const char* text : {"p cnf 1 1\n1 0\n", "p cnf 1 1\n-1 0\n"}) {
        const Cnf3 f = parse_dimacs(text);
        const bool sat = sat_bruteforce(f).has_value();
        const PointInstance pi = compile_to_points(f);
        REQUIRE(pi.points.size() <= 12, "single-clause instance exceeds 12 points");
        std::vector<Edge> forbidden;
        for (int i = 0; i < pi.points.size(); ++i)
            for (int j = i + 1; j < pi.points.size(); ++j)
                if (dist_sq(pi.points[i], pi.points[j]) <= pi.epsilon_sq)
                    forbidden.push_back(Edge(i, j));
        const auto witness = triangulation_exists_avoiding(pi.points, forbidden);
        REQUIRE(witness.has_value() == sat, "long-edge triangulation existence != satisfiability");
        if (witness)
            REQUIRE(witness->min_edge_sq() > pi.epsilon_sq, "witness contains a short edge");
    }

    const PointInstance neg = negative_gadget_instance();
    const MaxMinResult worst = maxmin_triangulation(neg.points);
    REQUIRE(worst.optimum_sq <= Rational(2) * neg.epsilon_sq,
            "infeasible gadget admits a triangulation above 2*epsilon_sq");

    const CdsInstance pert = perturb(x_fixture());
    const PointInstance feas =
        split_targets(pert, nullptr, choose_epsilon(compute_clearance(pert)));
    const MaxMinResult best = maxmin_triangulation(feas.points);
    REQUIRE(best.optimum_sq > feas.epsilon_sq,
            "feasible fixture stuck at epsilon_sq");
    return "triangulation-level feasibility tracks satisfiability on every <=12-point compile";
}

std::string criterion_7() {
    const std::vector<std::string> corpus = {
        "p cnf 1 1\n1 0\n",
        "p cnf 1 1\n-1 0\n",
        "p cnf 3 1\n1 -2 3 0\n",
        "p cnf 1 2\n1 0\n-1 0\n",
        "p cnf 2 2\n1 2 0\n-1 -2 0\n",
        showcase_text(),
    };
    int audited = 0;
    size_t biggest = 0;
    for (const std::string& text : corpus) {
        const PointInstance pi = compile_to_points(parse_dimacs(text));
        const auto violations = separation_soundness_audit(pi);
        REQUIRE(violations.empty(), "unsanctioned separating pair in a compiled instance");
        biggest = std::max(biggest, (size_t)pi.points.size());
        ++audited;
    }
    for (unsigned seed = 0; seed < 5; ++seed) {
        const PointInstance pi = compile_to_points(random_small_planar_cnf(seed));
        REQUIRE(separation_soundness_audit(pi).empty(),
                "unsanctioned separating pair at seed " + std::to_string(seed));
        ++audited;
    }
    return "separation soundness audit clean on " + std::to_string(audited) +
           " compiled instances (largest " + std::to_string(biggest) + " points)";
}

std::string criterion_8() {
    const std::vector<std::string> corpus = {
        "p cnf 1 1\n1 0\n",
        "p cnf 2 2\n1 2 0\n-1 -2 0\n",
        showcase_text(),
    };
    for (const std::string& text : corpus) {
        const Cnf3 f = parse_dimacs(text);
        const long n = instance_parameter(f);
        const Rational p = Rational(n) * Rational(n); // polynomial gap p(n) = n^2
        const CompileResult cr = compile_3sat_to_cds(f);
        const CdsInstance pert = perturb(cr.inst, &cr.cert);
        const Rational delta_sq = compute_clearance(pert);
        const Rational eps_sq = choose_epsilon(delta_sq, p);
        REQUIRE(eps_sq * p * p < delta_sq, "delta_sq/epsilon_sq <= n^4");
        const PointInstance pi = split_targets(pert, &cr.cert, eps_sq);
        REQUIRE(pi.epsilon_sq * p * p < pi.delta_sq, "stored gap collapsed below n^4");
    }
    return "gap mode keeps delta_sq/epsilon_sq above n^4 exactly on all probes";
}

std::string criterion_9() {
    const CompileResult cr = compile_3sat_to_cds(parse_dimacs(showcase_text()));

    size_t var_segments = 0, corners = 0;
    for (const VariableGadget& v : cr.cert.vars) {
        var_segments += v.segment_ids.size();
        corners += v.corner_target_ids.size();
    }
    size_t clause_segments = 0;
    for (const ClauseGadget& c : cr.cert.clauses) clause_segments += c.segment_ids.size();
    REQUIRE(var_segments == 18, "expected 18 variable segments, got " +
                                    std::to_string(var_segments));
    REQUIRE(corners == 18, "expected 18 corner targets, got " + std::to_string(corners));
    REQUIRE(clause_segments == 9, "expected 9 clause segments, got " +
                                      std::to_string(clause_segments));
    REQUIRE(cr.cert.clauses.size() == 3, "expected 3 clause targets");
    REQUIRE(cr.inst.stabbers.size() == 27, "expected 27 stabbers");
    REQUIRE(cr.inst.targets.size() == 21, "expected 21 targets");

    const auto cover = solve_structured(cr.inst, cr.cert);
    REQUIRE(cover.has_value(), "structured solver found no cover");
    REQUIRE(verify_solution(cr.inst, *cover), "structured cover fails verification");
    const std::vector<bool> decoded = decode_solution(cr.inst, cr.cert, *cover);
    REQUIRE(eval_formula(parse_dimacs(showcase_text()), decoded),
            "structured cover decodes to a non-model");

    const std::string svg = render_cds_svg(cr.inst, &cr.cert);
    REQUIRE(svg == render_cds_svg(cr.inst, &cr.cert), "render is not byte-deterministic");
    REQUIRE(count_occurrences(svg, "class=\"even\"") == 9, "expected 9 even-layer segments");
    REQUIRE(count_occurrences(svg, "class=\"odd\"") == 9, "expected 9 odd-layer segments");
    REQUIRE(count_occurrences(svg, "class=\"clause\"") == 9, "expected 9 clause-layer segments");
    REQUIRE(count_occurrences(svg, "class=\"target\"") == 21, "expected 21 target dots");
    return "showcase instance has the 18/18/9/3 gadget census, a verified cover, and stable art";
}

} // namespace

int main() {
    const std::vector<PointSet> sets9 = make_random_sets(50, 4, 9, 20260814u);
    const std::vector<PointSet> sets7 = make_random_sets(50, 4, 7, 811u);

    int failures = 0;
    const std::vector<std::pair<int, std::function<std::string()>>> criteria = {
        {1, [&] { return criterion_1(); }},
        {2, [&] { return criterion_2(sets9); }},
        {3, [&] { return criterion_3(sets7); }},
        {4, [&] { return criterion_4(sets9); }},
        {5, [&] { return criterion_5(); }},
        {6, [&] { return criterion_6(); }},
        {7, [&] { return criterion_7(); }},
        {8, [&] { return criterion_8(); }},
        {9, [&] { return criterion_9(); }},
    };
    for (const auto& [id, body] : criteria) {
        try {
            const std::string summary = body();
            std::cout << "PASS criterion " << id << ": " << summary << "\n";
        } catch (const std::exception& e) {
            std::cout << "FAIL criterion " << id << ": " << e.what() << "\n";
            ++failures;
        }
        std::cout.flush();
    }
    if (failures) std::cout << failures << " criteria failed\n";
    return failures == 0 ? 0 : 1;
}
