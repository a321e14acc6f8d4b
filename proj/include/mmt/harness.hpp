#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mmt/cds.hpp"
#include "mmt/cnf.hpp"
#include "mmt/point_reduction.hpp"

namespace mmt {

// One formula, checked at every problem level that fits the caps.
// triangulation_feasible is absent when the split point set exceeds the
// enumeration cap; consistent means all present answers agree.
struct EquivalenceReport {
    std::string formula_id;
    bool sat = false;
    bool cds_feasible = false;
    std::optional<bool> triangulation_feasible;
    bool consistent = false;
};

// Lexicographically first satisfying assignment (x0 most significant,
// false < true), or nullopt. TooLarge above 20 variables.
std::optional<std::vector<bool>> sat_bruteforce(const Cnf3& cnf);

// SAT oracle vs compiled CDS (structured solver, cross-checked against the
// subset brute force within its cap) vs, for split instances of at most 12
// points, a triangulation avoiding every edge of dist_sq <= epsilon_sq.
EquivalenceReport end_to_end_check(const Cnf3& cnf);

// Deterministic formula generator for equivalence sweeps; limits clamp to
// 3 variables / 2 clauses, sizes at which the spine layout always succeeds.
Cnf3 random_small_planar_cnf(std::uint64_t seed, int max_vars = 3, int max_clauses = 2);

// Two stabbers crossing once, one target at the crossing: the smallest
// feasible instance (cover = either stabber).
CdsInstance x_fixture();

// Three pairwise-crossing stabbers, one target strictly inside each away
// from the crossings: infeasible, since covering all three targets needs all
// three stabbers and any two of them conflict.
CdsInstance negative_gadget_cds();

// The infeasible fixture pushed through perturb / clearance / split:
// 12 points whose every triangulation contains a split-pair edge.
PointInstance negative_gadget_instance();

} // namespace mmt
