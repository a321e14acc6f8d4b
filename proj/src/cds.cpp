#include "mmt/cds.hpp"

#include <algorithm>
#include <functional>

#include "mmt/error.hpp"

namespace mmt {

CdsInstance make_cds_instance(std::vector<Segment> stabbers, std::vector<Point> targets,
                              std::set<int> relaxed_targets) {
    for (size_t s = 0; s < stabbers.size(); ++s)
        if (stabbers[s].a == stabbers[s].b)
            fail(ErrorKind::InvalidInstance, "stabber " + std::to_string(s) + " is degenerate");
    for (int t : relaxed_targets)
        if (t < 0 || t >= static_cast<int>(targets.size()))
            fail(ErrorKind::InvalidInstance, "relaxed target " + std::to_string(t) + " out of range");
    CdsInstance inst;
    inst.stabbers = std::move(stabbers);
    inst.targets = std::move(targets);
    inst.relaxed_targets = std::move(relaxed_targets);
    inst.coverage.resize(inst.targets.size());
    for (size_t t = 0; t < inst.targets.size(); ++t)
        for (size_t s = 0; s < inst.stabbers.size(); ++s)
            if (point_on_segment(inst.targets[t], inst.stabbers[s]))
                inst.coverage[t].push_back(static_cast<int>(s));
    return inst;
}

std::vector<std::string> validate_instance(const CdsInstance& inst) {
    std::vector<std::string> defects;
    for (size_t t = 0; t < inst.targets.size(); ++t) {
        size_t on = inst.coverage[t].size();
        if (on == 0)
            defects.push_back("target " + std::to_string(t) + ": uncovered-by-construction");
        else if (on == 1 && !inst.relaxed_targets.count(static_cast<int>(t)))
            defects.push_back("target " + std::to_string(t) + ": not an intersection point");
    }
    return defects;
}

bool stabbers_disjoint(const Segment& a, const Segment& b) { return !segments_conflict(a, b); }

std::vector<std::string> solution_defects(const CdsInstance& inst, const std::vector<int>& chosen) {
    std::vector<std::string> defects;
    std::set<int> seen;
    for (int s : chosen) {
        if (s < 0 || s >= static_cast<int>(inst.stabbers.size())) {
            defects.push_back("stabber index " + std::to_string(s) + " out of range");
            return defects;
        }
        if (!seen.insert(s).second)
            defects.push_back("stabber " + std::to_string(s) + " chosen twice");
    }
    for (size_t a = 0; a < chosen.size(); ++a)
        for (size_t b = a + 1; b < chosen.size(); ++b)
            if (!stabbers_disjoint(inst.stabbers[chosen[a]], inst.stabbers[chosen[b]]))
                defects.push_back("stabbers " + std::to_string(chosen[a]) + " and " +
                                  std::to_string(chosen[b]) + " conflict");
    for (size_t t = 0; t < inst.targets.size(); ++t) {
        bool covered = false;
        for (int s : inst.coverage[t])
            if (seen.count(s)) {
                covered = true;
                break;
            }
        if (!covered) defects.push_back("target " + std::to_string(t) + " uncovered");
    }
    return defects;
}

bool verify_solution(const CdsInstance& inst, const std::vector<int>& chosen) {
    return solution_defects(inst, chosen).empty();
}

std::optional<std::vector<int>> solve_bruteforce(const CdsInstance& inst, int cap) {
    const int ns = static_cast<int>(inst.stabbers.size());
    const int nt = static_cast<int>(inst.targets.size());
    if (ns > cap)
        fail(ErrorKind::TooLarge, std::to_string(ns) + " stabbers exceed cap " + std::to_string(cap));

    std::vector<std::vector<char>> conflict(ns, std::vector<char>(ns, 0));
    for (int a = 0; a < ns; ++a)
        for (int b = a + 1; b < ns; ++b)
            conflict[a][b] = conflict[b][a] = !stabbers_disjoint(inst.stabbers[a], inst.stabbers[b]);

    std::vector<char> chosen(ns, 0), banned(ns, 0);
    std::vector<int> order;

    std::function<bool()> rec = [&]() -> bool {
        int best_t = -1;
        size_t best_avail = 0;
        for (int t = 0; t < nt; ++t) {
            bool covered = false;
            size_t avail = 0;
            for (int s : inst.coverage[t]) {
                if (chosen[s]) {
                    covered = true;
                    break;
                }
                if (!banned[s]) ++avail;
            }
            if (covered) continue;
            if (avail == 0) return false;
            if (best_t == -1 || avail < best_avail) best_t = t, best_avail = avail;
        }
        if (best_t == -1) return true;
        std::vector<int> locally_banned;
        bool ok = false;
        for (int s : inst.coverage[best_t]) {
            if (banned[s]) continue;
            chosen[s] = 1;
            order.push_back(s);
            std::vector<int> undo;
            for (int u = 0; u < ns; ++u)
                if (conflict[s][u] && !banned[u]) banned[u] = 1, undo.push_back(u);
            if (rec()) {
                ok = true;
                break;
            }
            for (int u : undo) banned[u] = 0;
            order.pop_back();
            chosen[s] = 0;
            banned[s] = 1; // exclude s for the remaining branches of this node
            locally_banned.push_back(s);
        }
        if (!ok)
            for (int s : locally_banned) banned[s] = 0;
        return ok;
    };

    if (!rec()) return std::nullopt;
    std::sort(order.begin(), order.end());
    return order;
}

std::optional<std::vector<int>> solve_structured(const CdsInstance& inst,
                                                 const GadgetCertificate& cert) {
    const int ns = static_cast<int>(inst.stabbers.size());
    auto check_id = [&](int id) {
        if (id < 0 || id >= ns)
            fail(ErrorKind::CertificateMismatch,
                 "certificate references stabber " + std::to_string(id));
    };
    for (const auto& vg : cert.vars)
        for (int id : vg.segment_ids) check_id(id);
    for (const auto& cg : cert.clauses)
        for (int id : cg.segment_ids) check_id(id);

    // Choosing clause segment s forces the variable it crosses away from the
    // crossed parity; record that constraint per segment id.
    std::vector<int> seg_var(ns, -1);
    std::vector<Parity> seg_crossed(ns, Parity::Even);
    for (const auto& r : cert.incidences) {
        check_id(r.clause_segment_id);
        if (r.var < 0 || r.var >= cert.num_vars)
            fail(ErrorKind::CertificateMismatch, "incidence references bad variable");
        seg_var[r.clause_segment_id] = r.var;
        seg_crossed[r.clause_segment_id] = r.crossed_parity;
    }
    for (const auto& cg : cert.clauses)
        for (int id : cg.segment_ids)
            if (seg_var[id] < 0)
                fail(ErrorKind::CertificateMismatch,
                     "clause segment " + std::to_string(id) + " has no incidence record");

    const int nv = cert.num_vars;
    std::vector<int> parity(nv, -1); // 0 even, 1 odd, -1 unassigned

    auto clause_open = [&](const ClauseGadget& cg) {
        for (int id : cg.segment_ids) {
            int v = seg_var[id];
            int forbidden = seg_crossed[id] == Parity::Even ? 0 : 1;
            if (parity[v] == -1 || parity[v] != forbidden) return true;
        }
        return false;
    };

    std::function<bool(int)> assign = [&](int v) -> bool {
        if (v == nv) return true;
        for (int p : {0, 1}) {
            parity[v] = p;
            bool viable = true;
            for (const auto& cg : cert.clauses)
                if (!clause_open(cg)) {
                    viable = false;
                    break;
                }
            if (viable && assign(v + 1)) return true;
        }
        parity[v] = -1;
        return false;
    };
    if (!assign(0)) return std::nullopt;

    std::vector<int> result;
    for (int v = 0; v < nv && static_cast<size_t>(v) < cert.vars.size(); ++v) {
        const auto& ids = cert.vars[v].segment_ids;
        for (size_t k = 0; k < ids.size(); ++k)
            if (static_cast<int>(k % 2) == parity[v]) result.push_back(ids[k]);
    }
    for (const auto& cg : cert.clauses) {
        int picked = -1;
        for (int id : cg.segment_ids) {
            int forbidden = seg_crossed[id] == Parity::Even ? 0 : 1;
            if (parity[seg_var[id]] != forbidden) {
                picked = id;
                break;
            }
        }
        if (picked < 0) fail(ErrorKind::Internal, "assignment left a clause without a segment");
        result.push_back(picked);
    }
    std::sort(result.begin(), result.end());
    if (!verify_solution(inst, result))
        fail(ErrorKind::CertificateMismatch,
             "structured solution rejected by the instance; certificate does not match");
    return result;
}

} // namespace mmt
