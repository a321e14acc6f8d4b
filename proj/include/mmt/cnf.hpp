#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mmt {

struct Literal {
    int var = 0; // 0-based
    bool positive = true;
};

struct Clause3 {
    std::vector<Literal> lits; // 1..3 literals, distinct variables
};

struct Cnf3 {
    int num_vars = 0;
    std::vector<Clause3> clauses;
};

// Per-clause layout hints: side = +1 (above the spine) or -1 (below);
// order = the clause's literal indices in preferred anchoring order.
struct LayoutHints {
    std::map<int, int> side;
    std::map<int, std::vector<int>> order;

    bool empty() const { return side.empty() && order.empty(); }
};

// Throws InvalidFormula when indices are out of range, a clause is empty or
// longer than 3, or a clause repeats a variable.
void validate_formula(const Cnf3& cnf);

// DIMACS CNF with optional hint comments:
//   c layout clause <id> side=<above|below> order=<i,j,k>
// where <id> is the 0-based clause index and order permutes the clause's
// literal positions. Throws ParseError on malformed input.
Cnf3 parse_dimacs(const std::string& text, LayoutHints* hints = nullptr);

std::string to_dimacs(const Cnf3& cnf);

bool eval_formula(const Cnf3& cnf, const std::vector<bool>& assignment);

} // namespace mmt
