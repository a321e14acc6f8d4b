#include "mmt/cnf.hpp"

#include <set>
#include <sstream>

#include "mmt/error.hpp"

namespace mmt {

void validate_formula(const Cnf3& cnf) {
    if (cnf.num_vars < 0) fail(ErrorKind::InvalidFormula, "negative variable count");
    for (size_t c = 0; c < cnf.clauses.size(); ++c) {
        const auto& cl = cnf.clauses[c];
        if (cl.lits.empty() || cl.lits.size() > 3)
            fail(ErrorKind::InvalidFormula,
                 "clause " + std::to_string(c) + " has " + std::to_string(cl.lits.size()) +
                     " literals (want 1..3)");
        std::set<int> vars;
        for (const auto& l : cl.lits) {
            if (l.var < 0 || l.var >= cnf.num_vars)
                fail(ErrorKind::InvalidFormula,
                     "clause " + std::to_string(c) + " references variable " +
                         std::to_string(l.var + 1));
            if (!vars.insert(l.var).second)
                fail(ErrorKind::InvalidFormula,
                     "clause " + std::to_string(c) + " repeats variable " +
                         std::to_string(l.var + 1));
        }
    }
}

namespace {

[[noreturn]] void bad(const std::string& what, int lineno) {
    fail(ErrorKind::ParseError, what + " (line " + std::to_string(lineno) + ")");
}

void parse_hint(const std::string& line, int lineno, LayoutHints* hints) {
    // "c layout clause <id> side=<above|below> order=<i,j,k>"; either or both
    // of side/order may appear.
    std::istringstream in(line);
    std::string tok;
    in >> tok >> tok; // "c" "layout"
    in >> tok;
    if (tok != "clause") bad("unknown layout hint '" + tok + "'", lineno);
    int id = -1;
    if (!(in >> id) || id < 0) bad("bad clause id in layout hint", lineno);
    bool saw_any = false;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) bad("bad layout hint token '" + tok + "'", lineno);
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "side") {
            if (val == "above")
                hints->side[id] = 1;
            else if (val == "below")
                hints->side[id] = -1;
            else
                bad("bad side '" + val + "'", lineno);
        } else if (key == "order") {
            std::vector<int> perm;
            std::istringstream vals(val);
            std::string item;
            while (std::getline(vals, item, ','))
                try {
                    perm.push_back(std::stoi(item));
                } catch (...) {
                    bad("bad order '" + val + "'", lineno);
                }
            if (perm.empty()) bad("empty order", lineno);
            hints->order[id] = perm;
        } else {
            bad("unknown layout hint key '" + key + "'", lineno);
        }
        saw_any = true;
    }
    if (!saw_any) bad("layout hint without side/order", lineno);
}

} // namespace

Cnf3 parse_dimacs(const std::string& text, LayoutHints* hints) {
    Cnf3 cnf;
    bool saw_header = false;
    int declared_clauses = 0;
    Clause3 current;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == 'c') {
            if (hints && line.rfind("c layout", 0) == 0) parse_hint(line, lineno, hints);
            continue;
        }
        if (line[0] == 'p') {
            if (saw_header) bad("duplicate problem line", lineno);
            std::istringstream h(line);
            std::string p, fmt;
            if (!(h >> p >> fmt >> cnf.num_vars >> declared_clauses) || fmt != "cnf")
                bad("malformed problem line", lineno);
            if (cnf.num_vars < 0 || declared_clauses < 0) bad("negative counts", lineno);
            saw_header = true;
            continue;
        }
        if (!saw_header) bad("clause before problem line", lineno);
        std::istringstream cl(line);
        long lit;
        while (cl >> lit) {
            if (lit == 0) {
                cnf.clauses.push_back(current);
                current.lits.clear();
            } else {
                int v = static_cast<int>(lit > 0 ? lit : -lit) - 1;
                current.lits.push_back({v, lit > 0});
            }
        }
        if (!cl.eof()) bad("non-numeric token in clause", lineno);
    }
    if (!saw_header) fail(ErrorKind::ParseError, "missing problem line");
    if (!current.lits.empty()) fail(ErrorKind::ParseError, "unterminated final clause");
    if (static_cast<int>(cnf.clauses.size()) != declared_clauses)
        fail(ErrorKind::ParseError, "clause count mismatch: declared " +
                                        std::to_string(declared_clauses) + ", found " +
                                        std::to_string(cnf.clauses.size()));
    validate_formula(cnf);
    if (hints)
        for (const auto& [id, _] : hints->side)
            if (id >= static_cast<int>(cnf.clauses.size()))
                fail(ErrorKind::ParseError, "layout hint for nonexistent clause " + std::to_string(id));
    return cnf;
}

std::string to_dimacs(const Cnf3& cnf) {
    std::ostringstream out;
    out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
    for (const auto& cl : cnf.clauses) {
        for (const auto& l : cl.lits) out << (l.positive ? l.var + 1 : -(l.var + 1)) << ' ';
        out << "0\n";
    }
    return out.str();
}

bool eval_formula(const Cnf3& cnf, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != cnf.num_vars)
        fail(ErrorKind::InvalidFormula, "assignment size mismatch");
    for (const auto& cl : cnf.clauses) {
        bool sat = false;
        for (const auto& l : cl.lits)
            if (assignment[l.var] == l.positive) {
                sat = true;
                break;
            }
        if (!sat) return false;
    }
    return true;
}

} // namespace mmt
