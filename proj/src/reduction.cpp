#include "mmt/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "mmt/error.hpp"
#include "mmt/gadgets.hpp"

namespace mmt {

namespace {

struct Owner {
    bool is_clause = false;
    int gadget = -1;
    int local = -1;
};

// True when the segments share any point at all, not just a proper crossing.
// If two segments overlap, some endpoint of one lies on the other.
bool segments_touch(const Segment& s, const Segment& t) {
    if (segments_properly_cross(s, t)) return true;
    return point_on_segment(s.a, t) || point_on_segment(s.b, t) ||
           point_on_segment(t.a, s) || point_on_segment(t.b, s);
}

std::vector<Owner> claim_stabbers(const CdsInstance& inst, const GadgetCertificate& cert,
                                  std::vector<std::string>& out) {
    std::vector<Owner> own(inst.stabbers.size());
    std::vector<int> seen(inst.stabbers.size(), 0);
    auto claim = [&](int id, bool is_clause, int gadget, int local) {
        if (id < 0 || id >= (int)inst.stabbers.size()) {
            out.push_back("segment id out of range: " + std::to_string(id));
            return;
        }
        ++seen[id];
        own[id] = Owner{is_clause, gadget, local};
    };
    for (int v = 0; v < (int)cert.vars.size(); ++v)
        for (int k = 0; k < (int)cert.vars[v].segment_ids.size(); ++k)
            claim(cert.vars[v].segment_ids[k], false, v, k);
    for (int c = 0; c < (int)cert.clauses.size(); ++c)
        for (int k = 0; k < (int)cert.clauses[c].segment_ids.size(); ++k)
            claim(cert.clauses[c].segment_ids[k], true, c, k);
    for (int id = 0; id < (int)seen.size(); ++id)
        if (seen[id] != 1)
            out.push_back("stabber " + std::to_string(id) + " owned by " +
                          std::to_string(seen[id]) + " gadgets");
    return own;
}

CompileResult assemble(const Cnf3& cnf, const IncidenceLayout& l, int n, int K) {
    CompileResult r;
    r.layout = l;
    r.n = n;
    r.scale_k = K;
    GadgetCertificate& cert = r.cert;
    cert.num_vars = cnf.num_vars;
    cert.vars.resize(cnf.num_vars);
    cert.scale_factor = Rational(K) * Rational(n) * Rational(n);

    std::vector<std::vector<CycleIncidence>> rays(cnf.num_vars);
    for (int c = 0; c < (int)cnf.clauses.size(); ++c)
        for (const Literal& lit : cnf.clauses[c].lits)
            rays[lit.var].push_back({l.clause_pos[c], lit.positive});

    std::vector<Segment> stabbers;
    std::vector<Point> targets;

    std::vector<BuiltCycle> cycles(cnf.num_vars);
    for (int v = 0; v < cnf.num_vars; ++v) {
        if (rays[v].empty()) continue; // variable absent from every clause
        cycles[v] = build_variable_cycle(l.var_pos[v], Rational(n), rays[v]);
        VariableGadget& vg = cert.vars[v];
        for (const Segment& s : cycles[v].sides) {
            vg.segment_ids.push_back((int)stabbers.size());
            stabbers.push_back(s);
        }
        for (const Point& p : cycles[v].corners) {
            vg.corner_target_ids.push_back((int)targets.size());
            targets.push_back(p);
        }
    }

    std::set<int> relaxed;
    std::vector<int> cursor(cnf.num_vars, 0); // next incidence slot per variable
    cert.clauses.resize(cnf.clauses.size());
    for (int c = 0; c < (int)cnf.clauses.size(); ++c) {
        ClauseGadget& cg = cert.clauses[c];
        for (int k = 0; k < (int)cnf.clauses[c].lits.size(); ++k) {
            const Literal& lit = cnf.clauses[c].lits[k];
            const BuiltCycle& cyc = cycles[lit.var];
            const int local_side = cyc.assigned_side[cursor[lit.var]++];
            IncidenceRecord ir;
            ir.var = lit.var;
            ir.clause = c;
            ir.lit_index = k;
            ir.positive = lit.positive;
            ir.clause_segment_id = (int)stabbers.size();
            ir.crossed_variable_segment_id = cert.vars[lit.var].segment_ids[local_side];
            ir.crossed_parity = local_side % 2 == 0 ? Parity::Even : Parity::Odd;
            cert.incidences.push_back(ir);
            cg.segment_ids.push_back((int)stabbers.size());
            stabbers.push_back(shift_clause_segment(l.incidence[c][k], cyc.sides[local_side]));
        }
        cg.target_id = (int)targets.size();
        targets.push_back(l.clause_pos[c]);
        if (cg.segment_ids.size() == 1) relaxed.insert(cg.target_id);
    }
    cert.relaxed_target_ids.assign(relaxed.begin(), relaxed.end());
    r.inst = make_cds_instance(std::move(stabbers), std::move(targets), std::move(relaxed));
    return r;
}

} // namespace

int instance_parameter(const Cnf3& cnf) {
    return std::max(2, cnf.num_vars + (int)cnf.clauses.size());
}

std::vector<std::string> certificate_defects(const CdsInstance& inst,
                                             const GadgetCertificate& cert) {
    std::vector<std::string> out;
    const int T = (int)inst.targets.size();
    if (cert.num_vars != (int)cert.vars.size())
        out.push_back("num_vars does not match the gadget list");

    std::vector<int> tseen(T, 0);
    auto claim_target = [&](int id) {
        if (id < 0 || id >= T)
            out.push_back("target id out of range: " + std::to_string(id));
        else
            ++tseen[id];
    };
    for (const auto& vg : cert.vars)
        for (int id : vg.corner_target_ids) claim_target(id);
    for (const auto& cg : cert.clauses) claim_target(cg.target_id);
    for (int id = 0; id < T; ++id)
        if (tseen[id] != 1)
            out.push_back("target " + std::to_string(id) + " owned by " +
                          std::to_string(tseen[id]) + " gadgets");

    const std::vector<Owner> own = claim_stabbers(inst, cert, out);
    if (!out.empty()) return out; // geometry checks need sound bookkeeping

    for (int v = 0; v < (int)cert.vars.size(); ++v) {
        const auto& vg = cert.vars[v];
        const int sz = (int)vg.segment_ids.size();
        const std::string tag = "variable " + std::to_string(v);
        if (sz == 0) {
            if (!vg.corner_target_ids.empty())
                out.push_back(tag + ": corners without a cycle");
            continue;
        }
        if (sz < 2 || sz % 2 != 0) out.push_back(tag + ": cycle length not even");
        const int corners = sz == 2 ? 1 : sz;
        if ((int)vg.corner_target_ids.size() != corners)
            out.push_back(tag + ": wrong corner count");
    }

    std::map<std::pair<int, int>, const IncidenceRecord*> by_lit;
    for (const auto& ir : cert.incidences) {
        if (ir.clause < 0 || ir.clause >= (int)cert.clauses.size() || ir.var < 0 ||
            ir.var >= (int)cert.vars.size()) {
            out.push_back("incidence record indices out of range");
            continue;
        }
        if (!by_lit.emplace(std::make_pair(ir.clause, ir.lit_index), &ir).second)
            out.push_back("duplicate incidence for clause " + std::to_string(ir.clause) +
                          " literal " + std::to_string(ir.lit_index));
    }
    for (int c = 0; c < (int)cert.clauses.size(); ++c)
        for (int k = 0; k < (int)cert.clauses[c].segment_ids.size(); ++k)
            if (!by_lit.count({c, k}))
                out.push_back("missing incidence record for clause " + std::to_string(c) +
                              " literal " + std::to_string(k));
    if (!out.empty()) return out;

    std::set<std::pair<int, int>> incidence_pair; // (clause segment, crossed side)
    for (const auto& ir : cert.incidences) {
        const std::string tag =
            "incidence c" + std::to_string(ir.clause) + "/" + std::to_string(ir.lit_index);
        const auto& vg = cert.vars[ir.var];
        auto it = std::find(vg.segment_ids.begin(), vg.segment_ids.end(),
                            ir.crossed_variable_segment_id);
        if (it == vg.segment_ids.end()) {
            out.push_back(tag + ": crossed segment not in its variable's cycle");
            continue;
        }
        const int local = (int)(it - vg.segment_ids.begin());
        if ((local % 2 == 0 ? Parity::Even : Parity::Odd) != ir.crossed_parity)
            out.push_back(tag + ": recorded parity disagrees with the cycle position");
        if (ir.crossed_parity != (ir.positive ? Parity::Even : Parity::Odd))
            out.push_back(tag + ": crossed parity disagrees with the literal sign");
        const auto& cg = cert.clauses[ir.clause];
        if (ir.lit_index < 0 || ir.lit_index >= (int)cg.segment_ids.size() ||
            cg.segment_ids[ir.lit_index] != ir.clause_segment_id)
            out.push_back(tag + ": clause segment id mismatch");
        incidence_pair.insert({ir.clause_segment_id, ir.crossed_variable_segment_id});
    }
    if (!out.empty()) return out;

    const int S = (int)inst.stabbers.size();
    for (int a = 0; a < S; ++a) {
        for (int b = a + 1; b < S; ++b) {
            const Segment& sa = inst.stabbers[a];
            const Segment& sb = inst.stabbers[b];
            const Owner& oa = own[a];
            const Owner& ob = own[b];
            const std::string tag = "stabbers " + std::to_string(a) + "," + std::to_string(b);
            if (!oa.is_clause && !ob.is_clause) {
                if (oa.gadget != ob.gadget) {
                    if (segments_touch(sa, sb)) out.push_back(tag + ": different cycles touch");
                    continue;
                }
                const auto& vg = cert.vars[oa.gadget];
                const int sz = (int)vg.segment_ids.size();
                int la = std::min(oa.local, ob.local);
                int lb = std::max(oa.local, ob.local);
                int corner = -1;
                if (sz == 2)
                    corner = vg.corner_target_ids[0];
                else if (lb == la + 1)
                    corner = vg.corner_target_ids[la];
                else if (la == 0 && lb == sz - 1)
                    corner = vg.corner_target_ids[sz - 1];
                if (corner < 0) {
                    if (segments_touch(sa, sb))
                        out.push_back(tag + ": non-adjacent sides touch");
                } else {
                    auto x = segments_properly_cross(sa, sb);
                    if (!x)
                        out.push_back(tag + ": adjacent sides do not properly cross");
                    else if (*x != inst.targets[corner])
                        out.push_back(tag + ": corner crossing is off its target");
                }
            } else if (oa.is_clause && ob.is_clause) {
                if (oa.gadget != ob.gadget) {
                    if (segments_touch(sa, sb))
                        out.push_back(tag + ": segments of different clauses touch");
                } else {
                    auto x = segments_properly_cross(sa, sb);
                    if (!x)
                        out.push_back(tag + ": clause siblings do not cross");
                    else if (*x != inst.targets[cert.clauses[oa.gadget].target_id])
                        out.push_back(tag + ": sibling crossing is off the clause target");
                }
            } else {
                const int cg = oa.is_clause ? a : b;
                const int vg = oa.is_clause ? b : a;
                if (incidence_pair.count({cg, vg})) {
                    if (!segments_properly_cross(sa, sb))
                        out.push_back(tag + ": clause segment misses its assigned side");
                } else {
                    if (segments_touch(sa, sb)) out.push_back(tag + ": unrelated stabbers touch");
                }
            }
        }
    }

    // Coverage must be exact: corners on their two adjacent sides, clause
    // targets on exactly their clause's segments, nothing else anywhere.
    for (int v = 0; v < (int)cert.vars.size(); ++v) {
        const auto& vg = cert.vars[v];
        const int sz = (int)vg.segment_ids.size();
        for (int k = 0; k < (int)vg.corner_target_ids.size(); ++k) {
            std::vector<int> want = {vg.segment_ids[k], vg.segment_ids[(k + 1) % sz]};
            std::sort(want.begin(), want.end());
            if (inst.coverage[vg.corner_target_ids[k]] != want)
                out.push_back("corner " + std::to_string(vg.corner_target_ids[k]) +
                              ": coverage is not exactly its two sides");
        }
    }
    for (int c = 0; c < (int)cert.clauses.size(); ++c) {
        const auto& cg = cert.clauses[c];
        std::vector<int> want = cg.segment_ids;
        std::sort(want.begin(), want.end());
        if (inst.coverage[cg.target_id] != want)
            out.push_back("clause target " + std::to_string(cg.target_id) +
                          ": coverage is not exactly its clause's segments");
        for (int id : cg.segment_ids)
            if (inst.targets[cg.target_id] == inst.stabbers[id].a ||
                inst.targets[cg.target_id] == inst.stabbers[id].b)
                out.push_back("clause target " + std::to_string(cg.target_id) +
                              " sits on a segment endpoint");
    }

    std::set<int> want_relaxed;
    for (const auto& cg : cert.clauses)
        if (cg.segment_ids.size() == 1) want_relaxed.insert(cg.target_id);
    if (inst.relaxed_targets != want_relaxed)
        out.push_back("relaxed target set is not exactly the single-literal clause targets");
    if (std::set<int>(cert.relaxed_target_ids.begin(), cert.relaxed_target_ids.end()) !=
        want_relaxed)
        out.push_back("certificate relaxed ids disagree with the instance");

    for (const std::string& d : validate_instance(inst)) out.push_back(d);
    return out;
}

CompileResult compile_3sat_to_cds(const Cnf3& cnf, const LayoutHints& hints) {
    validate_formula(cnf);
    const int n = instance_parameter(cnf);
    const IncidenceLayout base = layout_incidence_graph(cnf, hints);

    std::vector<std::string> last = {"no scale attempted"};
    for (int K : {4, 8, 16}) {
        CompileResult r;
        try {
            r = assemble(cnf, scale_layout(base, n, K), n, K);
        } catch (const Error& e) {
            if (K == 16) throw;
            if (e.kind() == ErrorKind::AuditFailed ||
                e.kind() == ErrorKind::DegenerateDirections ||
                e.kind() == ErrorKind::SectorDegeneracy) {
                last = {e.what()};
                continue; // a larger scale can separate the offending geometry
            }
            throw;
        }
        std::vector<std::string> defects = certificate_defects(r.inst, r.cert);
        if (defects.empty()) return r;
        last = std::move(defects);
    }
    fail(ErrorKind::CrossingAudit,
         "compiled instance failed its audit: " + last.front() +
             (last.size() > 1 ? " (+" + std::to_string(last.size() - 1) + " more)" : ""));
}

std::vector<int> encode_assignment(const CdsInstance& inst, const GadgetCertificate& cert,
                                   const std::vector<bool>& assignment) {
    if ((int)assignment.size() != cert.num_vars)
        fail(ErrorKind::CertificateMismatch, "assignment length differs from variable count");

    std::vector<int> pick(cert.clauses.size(), -1);
    for (const auto& ir : cert.incidences)
        if (pick[ir.clause] < 0 && ir.positive == assignment[ir.var])
            pick[ir.clause] = ir.clause_segment_id;
    for (int c = 0; c < (int)pick.size(); ++c)
        if (pick[c] < 0)
            fail(ErrorKind::NotSatisfying,
                 "assignment leaves clause " + std::to_string(c) + " unsatisfied");

    std::vector<int> chosen;
    for (int v = 0; v < cert.num_vars; ++v) {
        const auto& ids = cert.vars[v].segment_ids;
        const int want = assignment[v] ? 1 : 0; // true selects the odd class
        for (int k = 0; k < (int)ids.size(); ++k)
            if (k % 2 == want) chosen.push_back(ids[k]);
    }
    chosen.insert(chosen.end(), pick.begin(), pick.end());
    std::sort(chosen.begin(), chosen.end());
    if (!verify_solution(inst, chosen))
        fail(ErrorKind::Internal, "encoded cover failed verification");
    return chosen;
}

std::vector<bool> decode_solution(const CdsInstance& inst, const GadgetCertificate& cert,
                                  const std::vector<int>& chosen) {
    for (int id : chosen)
        if (id < 0 || id >= (int)inst.stabbers.size())
            fail(ErrorKind::CertificateMismatch, "chosen id out of range");
    const std::set<int> in(chosen.begin(), chosen.end());

    std::vector<bool> assignment(cert.num_vars, false);
    for (int v = 0; v < cert.num_vars; ++v) {
        const auto& ids = cert.vars[v].segment_ids;
        if (ids.empty()) continue; // isolated variable, defaults to false
        std::vector<int> pos;
        for (int k = 0; k < (int)ids.size(); ++k)
            if (in.count(ids[k])) pos.push_back(k);
        bool rigid = (int)pos.size() == (int)ids.size() / 2 && !pos.empty();
        for (int k : pos)
            if (k % 2 != pos.front() % 2) rigid = false;
        if (!rigid)
            fail(ErrorKind::MixedParity, "variable " + std::to_string(v) +
                                             ": chosen segments are not one parity class");
        assignment[v] = pos.front() % 2 == 1;
    }

    // A valid cover always decodes to a satisfying assignment; anything else
    // means the compiled structure is broken.
    std::vector<char> sat(cert.clauses.size(), 0);
    for (const auto& ir : cert.incidences)
        if (ir.positive == assignment[ir.var]) sat[ir.clause] = 1;
    for (int c = 0; c < (int)sat.size(); ++c)
        if (!sat[c])
            fail(ErrorKind::Internal, "decoded assignment misses clause " + std::to_string(c));
    return assignment;
}

} // namespace mmt
