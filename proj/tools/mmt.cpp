#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mmt/cds.hpp"
#include "mmt/cnf.hpp"
#include "mmt/error.hpp"
#include "mmt/harness.hpp"
#include "mmt/point_reduction.hpp"
#include "mmt/reduction.hpp"
#include "mmt/serialize.hpp"
#include "mmt/svg.hpp"
#include "mmt/triangulation.hpp"

namespace {

using nlohmann::ordered_json;

// parse=2, layout=3, audit=4; infeasible is a payload, not an error.
int exit_code_for(mmt::ErrorKind k) {
    using EK = mmt::ErrorKind;
    switch (k) {
        case EK::ParseError:
        case EK::InvalidFormula:
        case EK::UnknownArtifact:
            return 2;
        case EK::NotPlanarWithHints:
        case EK::DegenerateDirections:
            return 3;
        case EK::CrossingAudit:
        case EK::AuditFailed:
        case EK::CertificateMismatch:
        case EK::SectorDegeneracy:
        case EK::DegenerateCollinearity:
        case EK::InvalidInstance:
        case EK::MixedParity:
        case EK::NotSatisfying:
        case EK::DuplicatePoints:
        case EK::AllCollinear:
            return 4;
        default:
            return 1;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) mmt::fail(mmt::ErrorKind::ParseError, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) mmt::fail(mmt::ErrorKind::Internal, "cannot write " + path);
    out << text;
    if (!out) mmt::fail(mmt::ErrorKind::Internal, "short write to " + path);
}

int env_cap(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        mmt::fail(mmt::ErrorKind::ParseError, std::string(name) + " must be an integer");
    }
}

// Gap polynomials: "<c>", "n", "n^<k>", "<c>*n^<k>". Evaluated at the
// instance size parameter.
mmt::Rational eval_gap(const std::string& expr, int n) {
    std::string s;
    for (char c : expr)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.empty()) mmt::fail(mmt::ErrorKind::ParseError, "empty gap polynomial");

    std::size_t i = 0;
    long coeff = 1;
    if (std::isdigit((unsigned char)s[i])) {
        std::size_t used = 0;
        coeff = std::stol(s.substr(i), &used);
        i += used;
        if (i == s.size()) return mmt::Rational(coeff);
        if (s[i] == '*') ++i;
    }
    if (i >= s.size() || s[i] != 'n')
        mmt::fail(mmt::ErrorKind::ParseError, "unsupported gap polynomial: " + expr);
    ++i;
    long k = 1;
    if (i < s.size()) {
        if (s[i] != '^' || i + 1 >= s.size() || !std::isdigit((unsigned char)s[i + 1]))
            mmt::fail(mmt::ErrorKind::ParseError, "unsupported gap polynomial: " + expr);
        std::size_t used = 0;
        k = std::stol(s.substr(i + 1), &used);
        if (i + 1 + used != s.size())
            mmt::fail(mmt::ErrorKind::ParseError, "unsupported gap polynomial: " + expr);
    }
    mmt::Rational v(coeff);
    for (long e = 0; e < k; ++e) v *= mmt::Rational(n);
    return v;
}

int cmd_compile(const std::string& cnf_path, const std::string& gap_expr, std::uint64_t seed,
                const std::string& out_dir) {
    mmt::LayoutHints hints;
    const mmt::Cnf3 cnf = mmt::parse_dimacs(read_file(cnf_path), &hints);

    const mmt::CompileResult cr = mmt::compile_3sat_to_cds(cnf, hints);
    const mmt::CdsInstance pert = mmt::perturb(cr.inst, &cr.cert, seed);
    const bool full_scan = std::getenv("MMT_FULL_CLEARANCE") != nullptr;
    const mmt::Rational delta_sq = mmt::compute_clearance(pert, full_scan);
    std::optional<mmt::Rational> gap;
    if (!gap_expr.empty()) gap = eval_gap(gap_expr, mmt::instance_parameter(cnf));
    const mmt::Rational eps_sq = mmt::choose_epsilon(delta_sq, gap);
    const mmt::PointInstance pi = mmt::split_targets(pert, &cr.cert, eps_sq, delta_sq);

    const auto violations = mmt::separation_soundness_audit(pi);
    if (!violations.empty())
        mmt::fail(mmt::ErrorKind::AuditFailed,
                  std::to_string(violations.size()) + " separation soundness violations");

    std::filesystem::create_directories(out_dir);
    const auto out = [&](const char* name) {
        return (std::filesystem::path(out_dir) / name).string();
    };
    write_file(out("cds.json"), mmt::cds_to_json(cr.inst));
    write_file(out("cert.json"), mmt::certificate_to_json(cr.cert));
    write_file(out("points.json"), mmt::points_to_json(pi));

    std::cout << "compiled " << cnf.num_vars << " vars / " << cnf.clauses.size() << " clauses: "
              << cr.inst.stabbers.size() << " stabbers, " << cr.inst.targets.size()
              << " targets, " << pi.points.size() << " points\n"
              << "epsilon_sq " << pi.epsilon_sq.str() << ", delta_sq " << pi.delta_sq.str()
              << ", threshold_sq " << pi.threshold_sq.str() << "\n"
              << "wrote " << out("cds.json") << ", " << out("cert.json") << ", "
              << out("points.json") << "\n";
    return 0;
}

int cmd_solve(const std::string& inst_path, const std::string& mode, const std::string& cert_path,
              const std::string& out_path) {
    const std::string text = read_file(inst_path);
    ordered_json sol;
    sol["mode"] = mode;
    std::string summary;

    if (mode == "sat") {
        const mmt::Cnf3 cnf = mmt::parse_dimacs(text);
        const auto asg = mmt::sat_bruteforce(cnf);
        if (asg) {
            sol["status"] = "ok";
            sol["assignment"] = *asg;
            std::ostringstream os;
            os << "satisfiable:";
            for (int v = 0; v < cnf.num_vars; ++v)
                os << " x" << v << "=" << ((*asg)[v] ? "1" : "0");
            summary = os.str();
        } else {
            sol["status"] = "infeasible";
            summary = "infeasible";
        }
    } else if (mode == "cds") {
        const mmt::CdsInstance inst = mmt::cds_from_json(text);
        std::optional<std::vector<int>> chosen;
        if (!cert_path.empty()) {
            const mmt::GadgetCertificate cert = mmt::certificate_from_json(read_file(cert_path));
            chosen = mmt::solve_structured(inst, cert);
        } else {
            chosen = mmt::solve_bruteforce(inst, env_cap("MMT_BRUTE_CAP", 24));
        }
        if (chosen) {
            sol["status"] = "ok";
            sol["chosen"] = *chosen;
            summary = "cover of size " + std::to_string(chosen->size());
        } else {
            sol["status"] = "infeasible";
            summary = "infeasible";
        }
    } else { // maxmin
        const mmt::PointSet ps = mmt::pointset_from_json(text);
        const mmt::MaxMinResult r =
            mmt::maxmin_triangulation(ps, env_cap("MMT_ENUM_CAP", 12));
        sol["status"] = "ok";
        sol["optimum_sq"] = r.optimum_sq.str();
        ordered_json edges = ordered_json::array();
        for (const mmt::Edge& e : r.witness.edges) edges.push_back({e.i, e.j});
        sol["edges"] = edges;
        summary = "optimum_sq = " + r.optimum_sq.str();
    }

    write_file(out_path, sol.dump(2) + "\n");
    std::cout << summary << "\n" << "wrote " << out_path << "\n";
    return 0;
}

int cmd_verify(const std::string& cnf_path, int seeds) {
    bool all_consistent = true;
    const auto check = [&](const mmt::Cnf3& cnf) {
        const mmt::EquivalenceReport rep = mmt::end_to_end_check(cnf);
        std::cout << mmt::report_to_json_line(rep);
        all_consistent = all_consistent && rep.consistent;
    };
    if (seeds >= 0)
        for (std::uint64_t s = 0; s < (std::uint64_t)seeds; ++s)
            check(mmt::random_small_planar_cnf(s));
    else
        check(mmt::parse_dimacs(read_file(cnf_path)));
    return all_consistent ? 0 : 1;
}

int cmd_render(const std::string& art_path, const std::string& cert_path,
               const std::string& out_path, mmt::RenderSpec spec, bool triangulate) {
    const std::string text = read_file(art_path);
    const std::string kind = mmt::artifact_kind(text);
    std::string svg;
    if (kind == "cds") {
        const mmt::CdsInstance inst = mmt::cds_from_json(text);
        std::optional<mmt::GadgetCertificate> cert;
        if (!cert_path.empty()) cert = mmt::certificate_from_json(read_file(cert_path));
        svg = mmt::render_cds_svg(inst, cert ? &*cert : nullptr, spec);
    } else {
        const mmt::PointInstance pi = mmt::points_from_json(text);
        std::optional<mmt::MaxMinResult> tri;
        if (triangulate)
            tri = mmt::maxmin_triangulation(pi.points, env_cap("MMT_ENUM_CAP", 12));
        svg = mmt::render_points_svg(pi, tri ? &tri->witness.edges : nullptr, spec);
    }
    if (out_path.empty())
        std::cout << svg;
    else {
        write_file(out_path, svg);
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"NP-hardness toolkit for MaxMin-length triangulation: compile 3-SAT "
                 "formulas into segment-cover and point instances, solve and verify them, "
                 "and render the constructions"};
    app.require_subcommand(1);

    std::string co_cnf, co_gap, co_out = ".";
    std::uint64_t co_seed = 0;
    CLI::App* compile = app.add_subcommand("compile", "DIMACS 3-CNF -> cds/cert/points JSON");
    compile->add_option("cnf", co_cnf, "DIMACS CNF file")->required();
    compile->add_option("--gap", co_gap, "gap polynomial p(n), e.g. \"n^2\"");
    compile->add_option("--seed", co_seed, "perturbation schedule seed");
    compile->add_option("--out", co_out, "output directory (default .)");

    std::string so_inst, so_mode, so_cert, so_out = "solution.json";
    CLI::App* solve = app.add_subcommand("solve", "solve a CNF, CDS, or point instance");
    solve->add_option("instance", so_inst, "instance file")->required();
    solve->add_option("--mode", so_mode, "sat | cds | maxmin")
        ->required()
        ->check(CLI::IsMember({"sat", "cds", "maxmin"}));
    solve->add_option("--cert", so_cert, "compiler certificate (structured CDS solver)");
    solve->add_option("--out", so_out, "solution file (default solution.json)");

    std::string ve_cnf;
    int ve_seeds = -1;
    CLI::App* verify = app.add_subcommand("verify", "cross-check SAT/CDS/triangulation answers");
    verify->add_option("cnf", ve_cnf, "DIMACS CNF file");
    verify->add_option("--seeds", ve_seeds, "check this many generated formulas instead");

    std::string re_art, re_cert, re_out;
    bool re_labels = false, re_tri = false;
    mmt::RenderSpec re_spec;
    CLI::App* render = app.add_subcommand("render", "artifact JSON -> SVG");
    render->add_option("artifact", re_art, "cds.json or points.json")->required();
    render->add_option("--cert", re_cert, "certificate for parity-aware stabber styling");
    render->add_option("--out", re_out, "SVG file (default: stdout)");
    render->add_option("--width", re_spec.width, "canvas width");
    render->add_option("--height", re_spec.height, "canvas height");
    render->add_flag("--labels", re_labels, "draw point/segment labels");
    render->add_flag("--triangulate", re_tri, "overlay a maxmin triangulation (points only)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compile->parsed()) return cmd_compile(co_cnf, co_gap, co_seed, co_out);
        if (solve->parsed()) return cmd_solve(so_inst, so_mode, so_cert, so_out);
        if (verify->parsed()) {
            if (ve_seeds < 0 && ve_cnf.empty())
                mmt::fail(mmt::ErrorKind::ParseError, "verify needs a CNF file or --seeds");
            return cmd_verify(ve_cnf, ve_seeds);
        }
        re_spec.show_labels = re_labels;
        return cmd_render(re_art, re_cert, re_out, re_spec, re_tri);
    } catch (const mmt::Error& e) {
        ordered_json err;
        err["error"] = mmt::error_kind_name(e.kind());
        err["defects"] = ordered_json::array({e.what()});
        std::cerr << err.dump() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        ordered_json err;
        err["error"] = "Internal";
        err["defects"] = ordered_json::array({e.what()});
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
