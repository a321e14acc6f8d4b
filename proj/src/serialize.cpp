#include "mmt/serialize.hpp"

#include <json.hpp>

#include "mmt/error.hpp"

namespace mmt {

namespace {

using json = nlohmann::ordered_json;

json point_json(const Point& p) { return json::array({p.x.str(), p.y.str()}); }

Point point_from(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        fail(ErrorKind::ParseError, "expected a [\"x\",\"y\"] rational point");
    return Point(Rational::from_string(j[0].get<std::string>()),
                 Rational::from_string(j[1].get<std::string>()));
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::ParseError, "malformed JSON");
    return j;
}

Rational rational_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        fail(ErrorKind::ParseError, std::string("missing rational field ") + key);
    return Rational::from_string(j[key].get<std::string>());
}

} // namespace

std::string cds_to_json(const CdsInstance& inst) {
    json j;
    j["stabbers"] = json::array();
    for (const Segment& s : inst.stabbers)
        j["stabbers"].push_back(json::array({point_json(s.a), point_json(s.b)}));
    j["targets"] = json::array();
    for (const Point& t : inst.targets) j["targets"].push_back(point_json(t));
    if (!inst.relaxed_targets.empty())
        j["relaxed_targets"] = std::vector<int>(inst.relaxed_targets.begin(),
                                                inst.relaxed_targets.end());
    return j.dump(2) + "\n";
}

CdsInstance cds_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.contains("stabbers") || !j.contains("targets"))
        fail(ErrorKind::ParseError, "not a CDS instance file");
    std::vector<Segment> stabbers;
    for (const json& s : j["stabbers"]) {
        if (!s.is_array() || s.size() != 2)
            fail(ErrorKind::ParseError, "stabber must be a pair of points");
        stabbers.emplace_back(point_from(s[0]), point_from(s[1]));
    }
    std::vector<Point> targets;
    for (const json& t : j["targets"]) targets.push_back(point_from(t));
    std::set<int> relaxed;
    if (j.contains("relaxed_targets"))
        for (const json& r : j["relaxed_targets"]) relaxed.insert(r.get<int>());
    return make_cds_instance(std::move(stabbers), std::move(targets), std::move(relaxed));
}

std::string certificate_to_json(const GadgetCertificate& cert) {
    json j;
    j["num_vars"] = cert.num_vars;
    j["vars"] = json::array();
    for (const VariableGadget& vg : cert.vars)
        j["vars"].push_back(json{{"segments", vg.segment_ids}, {"corners", vg.corner_target_ids}});
    j["clauses"] = json::array();
    for (const ClauseGadget& cg : cert.clauses)
        j["clauses"].push_back(json{{"segments", cg.segment_ids}, {"target", cg.target_id}});
    j["incidences"] = json::array();
    for (const IncidenceRecord& ir : cert.incidences)
        j["incidences"].push_back(json{{"var", ir.var},
                                       {"clause", ir.clause},
                                       {"lit", ir.lit_index},
                                       {"positive", ir.positive},
                                       {"segment", ir.clause_segment_id},
                                       {"crossed", ir.crossed_variable_segment_id},
                                       {"parity", ir.crossed_parity == Parity::Even ? "even" : "odd"}});
    j["scale_factor"] = cert.scale_factor.str();
    j["relaxed_targets"] = cert.relaxed_target_ids;
    return j.dump(2) + "\n";
}

GadgetCertificate certificate_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.contains("num_vars") || !j.contains("vars") || !j.contains("clauses"))
        fail(ErrorKind::ParseError, "not a certificate file");
    GadgetCertificate cert;
    cert.num_vars = j["num_vars"].get<int>();
    for (const json& v : j["vars"]) {
        VariableGadget vg;
        vg.segment_ids = v.at("segments").get<std::vector<int>>();
        vg.corner_target_ids = v.at("corners").get<std::vector<int>>();
        cert.vars.push_back(std::move(vg));
    }
    for (const json& c : j["clauses"]) {
        ClauseGadget cg;
        cg.segment_ids = c.at("segments").get<std::vector<int>>();
        cg.target_id = c.at("target").get<int>();
        cert.clauses.push_back(std::move(cg));
    }
    for (const json& i : j.value("incidences", json::array())) {
        IncidenceRecord ir;
        ir.var = i.at("var").get<int>();
        ir.clause = i.at("clause").get<int>();
        ir.lit_index = i.at("lit").get<int>();
        ir.positive = i.at("positive").get<bool>();
        ir.clause_segment_id = i.at("segment").get<int>();
        ir.crossed_variable_segment_id = i.at("crossed").get<int>();
        ir.crossed_parity =
            i.at("parity").get<std::string>() == "even" ? Parity::Even : Parity::Odd;
        cert.incidences.push_back(ir);
    }
    cert.scale_factor = rational_field(j, "scale_factor");
    if (j.contains("relaxed_targets"))
        cert.relaxed_target_ids = j["relaxed_targets"].get<std::vector<int>>();
    return cert;
}

std::string points_to_json(const PointInstance& pi) {
    json j;
    j["points"] = json::array();
    for (int i = 0; i < pi.points.size(); ++i) j["points"].push_back(point_json(pi.points[i]));
    j["stabber_edges"] = json::array();
    for (const auto& [a, b] : pi.stabber_edges) j["stabber_edges"].push_back(json::array({a, b}));
    j["pairs"] = json::array();
    for (const TargetPair& pr : pi.pairs)
        j["pairs"].push_back(json{{"t1", pr.t1},
                                  {"t2", pr.t2},
                                  {"source", point_json(pr.source)},
                                  {"covering", pr.covering}});
    j["epsilon_sq"] = pi.epsilon_sq.str();
    j["delta_sq"] = pi.delta_sq.str();
    j["threshold_sq"] = pi.threshold_sq.str();
    return j.dump(2) + "\n";
}

PointInstance points_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.contains("points") || !j.contains("pairs") || !j.contains("stabber_edges"))
        fail(ErrorKind::ParseError, "not a point-instance file");
    PointInstance pi;
    std::vector<Point> pts;
    for (const json& p : j["points"]) pts.push_back(point_from(p));
    pi.points = PointSet(std::move(pts));
    for (const json& e : j["stabber_edges"]) {
        if (!e.is_array() || e.size() != 2)
            fail(ErrorKind::ParseError, "stabber edge must be an index pair");
        pi.stabber_edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    for (const json& p : j["pairs"]) {
        TargetPair pr;
        pr.t1 = p.at("t1").get<int>();
        pr.t2 = p.at("t2").get<int>();
        pr.source = point_from(p.at("source"));
        pr.covering = p.at("covering").get<std::vector<int>>();
        pi.pairs.push_back(std::move(pr));
    }
    pi.epsilon_sq = rational_field(j, "epsilon_sq");
    pi.delta_sq = rational_field(j, "delta_sq");
    pi.threshold_sq = rational_field(j, "threshold_sq");
    return pi;
}

PointSet pointset_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.contains("points") || !j["points"].is_array())
        fail(ErrorKind::ParseError, "no points array");
    std::vector<Point> pts;
    for (const json& p : j["points"]) pts.push_back(point_from(p));
    return PointSet(std::move(pts));
}

std::string report_to_json_line(const EquivalenceReport& rep) {
    json j;
    j["formula"] = rep.formula_id;
    j["sat"] = rep.sat;
    j["cds_feasible"] = rep.cds_feasible;
    j["triangulation_feasible"] =
        rep.triangulation_feasible ? json(*rep.triangulation_feasible) : json(nullptr);
    j["consistent"] = rep.consistent;
    return j.dump() + "\n";
}

std::string artifact_kind(const std::string& text) {
    const json j = parse(text);
    if (j.contains("pairs") && j.contains("points")) return "points";
    if (j.contains("stabbers") && j.contains("targets")) return "cds";
    fail(ErrorKind::UnknownArtifact, "file is neither a CDS instance nor a point instance");
}

} // namespace mmt
