#pragma once

#include <vector>

#include "mmt/rational.hpp"

namespace mmt {

enum class Parity { Even = 0, Odd = 1 };

inline Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

// Per-variable gadget bookkeeping. segment_ids lists the cycle's segments in
// cyclic order; segment k has parity Even iff k is even. corner_target_ids[k]
// is the crossing of segments k and k+1 (single entry when the cycle is just
// two segments crossing once).
struct VariableGadget {
    std::vector<int> segment_ids;
    std::vector<int> corner_target_ids;
};

// One literal occurrence: clause segment `clause_segment_id` crosses the
// variable segment `crossed_variable_segment_id`, whose parity within its
// cycle is `crossed_parity` (Even iff the literal is positive).
struct IncidenceRecord {
    int var = 0;
    int clause = 0;
    int lit_index = 0;
    bool positive = true;
    int clause_segment_id = -1;
    int crossed_variable_segment_id = -1;
    Parity crossed_parity = Parity::Even;
};

struct ClauseGadget {
    std::vector<int> segment_ids; // one per literal, concurrent at the target
    int target_id = -1;
};

struct GadgetCertificate {
    int num_vars = 0;
    std::vector<VariableGadget> vars;
    std::vector<ClauseGadget> clauses;
    std::vector<IncidenceRecord> incidences;
    Rational scale_factor{1};
    std::vector<int> relaxed_target_ids; // targets allowed a single cover
};

} // namespace mmt
