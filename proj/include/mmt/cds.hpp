#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mmt/certificate.hpp"
#include "mmt/geometry.hpp"

namespace mmt {

// Covering by Disjoint Segments. A solution picks a pairwise non-conflicting
// subset of the stabbers such that every target lies on a chosen stabber.
struct CdsInstance {
    std::vector<Segment> stabbers;
    std::vector<Point> targets;
    std::vector<std::vector<int>> coverage; // per target: stabbers through it
    std::set<int> relaxed_targets;          // exempt from the two-stabber rule
};

CdsInstance make_cds_instance(std::vector<Segment> stabbers, std::vector<Point> targets,
                              std::set<int> relaxed_targets = {});

// Structural defects: a target on no stabber ("uncovered-by-construction") or
// on exactly one when two are required ("not an intersection point"). Empty
// for well-formed instances.
std::vector<std::string> validate_instance(const CdsInstance& inst);

bool stabbers_disjoint(const Segment& a, const Segment& b);

bool verify_solution(const CdsInstance& inst, const std::vector<int>& chosen);
// Same check with reasons, for diagnostics.
std::vector<std::string> solution_defects(const CdsInstance& inst, const std::vector<int>& chosen);

// Exact search, target-driven: branch on the uncovered target with the fewest
// candidate stabbers, trying stabbers in index order. Deterministic; fails
// TooLarge beyond `cap` stabbers.
std::optional<std::vector<int>> solve_bruteforce(const CdsInstance& inst, int cap = 24);

// Search over per-variable parities and per-clause segment choices using the
// compiler's certificate; exponentially smaller state space than the raw
// subset search and not capped.
std::optional<std::vector<int>> solve_structured(const CdsInstance& inst,
                                                 const GadgetCertificate& cert);

} // namespace mmt
