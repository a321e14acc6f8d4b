#include "mmt/svg.hpp"

#include <algorithm>
#include <sstream>

#include "mmt/error.hpp"

namespace mmt {

namespace {

// Deterministic fixed-point printing: exact rational rounded to 1/1000,
// half away from floor. No floating point anywhere.
std::string fixed3(const Rational& r) {
    const mpq_class q = r.raw() * 1000;
    mpz_class quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), q.get_num().get_mpz_t(),
                q.get_den().get_mpz_t());
    if (mpz_class(rem * 2) >= q.get_den()) quot += 1;
    const bool neg = quot < 0;
    mpz_class a = neg ? mpz_class(-quot) : quot;
    const mpz_class whole = a / 1000;
    long frac = mpz_class(a % 1000).get_si();
    std::ostringstream os;
    if (neg && (whole != 0 || frac != 0)) os << '-';
    os << whole.get_str() << '.';
    os << (char)('0' + frac / 100) << (char)('0' + frac / 10 % 10) << (char)('0' + frac % 10);
    return os.str();
}

struct Viewport {
    bool empty = true;
    Rational minx, miny, maxx, maxy;
    Rational scale{1};
    Rational offx, offy;
    int height = 0;

    void include(const Point& p) {
        if (empty) {
            minx = maxx = p.x;
            miny = maxy = p.y;
            empty = false;
            return;
        }
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }

    void fit(int w, int h) {
        height = h;
        if (empty) return;
        const Rational margin_w = Rational(w) / 10;
        const Rational margin_h = Rational(h) / 10;
        const Rational span_x = maxx - minx;
        const Rational span_y = maxy - miny;
        Rational s(1);
        const Rational avail_x = Rational(w) - 2 * margin_w;
        const Rational avail_y = Rational(h) - 2 * margin_h;
        if (span_x.is_zero() && span_y.is_zero())
            s = Rational(1);
        else if (span_x.is_zero())
            s = avail_y / span_y;
        else if (span_y.is_zero())
            s = avail_x / span_x;
        else
            s = std::min(avail_x / span_x, avail_y / span_y);
        scale = s;
        // center the drawing
        offx = (Rational(w) - span_x * s) / 2 - minx * s;
        offy = (Rational(h) - span_y * s) / 2 - miny * s;
    }

    std::string x(const Rational& v) const { return fixed3(v * scale + offx); }
    // SVG y axis points down; flip to keep the plane orientation.
    std::string y(const Rational& v) const { return fixed3(Rational(height) - (v * scale + offy)); }
};

void emit_line(std::ostringstream& os, const Viewport& vp, const Segment& s,
               const std::string& cls, const std::string& style) {
    os << "  <line class=\"" << cls << "\" x1=\"" << vp.x(s.a.x) << "\" y1=\"" << vp.y(s.a.y)
       << "\" x2=\"" << vp.x(s.b.x) << "\" y2=\"" << vp.y(s.b.y) << "\" style=\"" << style
       << "\"/>\n";
}

void emit_dot(std::ostringstream& os, const Viewport& vp, const Point& p, const std::string& cls,
              const char* radius, const char* fill) {
    os << "  <circle class=\"" << cls << "\" cx=\"" << vp.x(p.x) << "\" cy=\"" << vp.y(p.y)
       << "\" r=\"" << radius << "\" fill=\"" << fill << "\"/>\n";
}

std::string svg_open(const RenderSpec& spec) {
    if (spec.width <= 0 || spec.height <= 0)
        fail(ErrorKind::InvalidInstance, "render dimensions must be positive");
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
       << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n";
    return os.str();
}

} // namespace

std::string render_cds_svg(const CdsInstance& inst, const GadgetCertificate* cert,
                           const RenderSpec& spec) {
    Viewport vp;
    for (const Segment& s : inst.stabbers) {
        vp.include(s.a);
        vp.include(s.b);
    }
    for (const Point& t : inst.targets) vp.include(t);
    vp.fit(spec.width, spec.height);

    // layer of each stabber: 0 even, 1 odd, 2 clause, 3 plain
    std::vector<int> layer(inst.stabbers.size(), 3);
    if (cert) {
        for (const auto& vg : cert->vars)
            for (int k = 0; k < (int)vg.segment_ids.size(); ++k)
                layer[vg.segment_ids[k]] = k % 2;
        for (const auto& cg : cert->clauses)
            for (int id : cg.segment_ids) layer[id] = 2;
    }

    std::ostringstream os;
    os << svg_open(spec);
    if (spec.show_stabbers) {
        const struct {
            const char* id;
            int layer;
            const std::string* style;
        } groups[] = {{"stabbers-even", 0, &spec.even_style},
                      {"stabbers-odd", 1, &spec.odd_style},
                      {"stabbers-clause", 2, &spec.clause_style},
                      {"stabbers-plain", 3, &spec.plain_style}};
        for (const auto& g : groups) {
            bool any = false;
            for (int v : layer) any = any || v == g.layer;
            if (!any) continue;
            os << " <g id=\"" << g.id << "\">\n";
            for (int i = 0; i < (int)inst.stabbers.size(); ++i)
                if (layer[i] == g.layer)
                    emit_line(os, vp, inst.stabbers[i], g.id + 9, *g.style); // drop "stabbers-"
            os << " </g>\n";
        }
    }
    if (spec.show_targets && !inst.targets.empty()) {
        os << " <g id=\"targets\">\n";
        for (const Point& t : inst.targets) emit_dot(os, vp, t, "target", "4", "#000000");
        os << " </g>\n";
    }
    if (spec.show_labels) {
        os << " <g id=\"labels\" font-size=\"10\">\n";
        for (int i = 0; i < (int)inst.stabbers.size(); ++i) {
            const Point mid = (inst.stabbers[i].a + inst.stabbers[i].b) * Rational(1, 2);
            os << "  <text x=\"" << vp.x(mid.x) << "\" y=\"" << vp.y(mid.y) << "\">s" << i
               << "</text>\n";
        }
        os << " </g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_points_svg(const PointInstance& pi, const std::vector<Edge>* triangulation,
                              const RenderSpec& spec) {
    Viewport vp;
    for (int i = 0; i < pi.points.size(); ++i) vp.include(pi.points[i]);
    vp.fit(spec.width, spec.height);

    std::ostringstream os;
    os << svg_open(spec);
    if (spec.show_triangulation && triangulation && !triangulation->empty()) {
        os << " <g id=\"triangulation\">\n";
        for (const Edge& e : *triangulation)
            emit_line(os, vp, Segment(pi.points[e.i], pi.points[e.j]), "tri",
                      spec.triangulation_style);
        os << " </g>\n";
    }
    if (spec.show_stabbers && !pi.stabber_edges.empty()) {
        os << " <g id=\"stabbers-plain\">\n";
        for (const auto& [a, b] : pi.stabber_edges)
            emit_line(os, vp, Segment(pi.points[a], pi.points[b]), "plain", spec.plain_style);
        os << " </g>\n";
    }
    if (spec.show_pairs && !pi.pairs.empty()) {
        os << " <g id=\"pairs\">\n";
        for (const TargetPair& pr : pi.pairs) {
            emit_dot(os, vp, pi.points[pr.t1], "pair", "2.5", "#c01010");
            emit_dot(os, vp, pi.points[pr.t2], "pair", "2.5", "#c01010");
        }
        os << " </g>\n";
    }
    if (spec.show_labels) {
        os << " <g id=\"labels\" font-size=\"10\">\n";
        for (int i = 0; i < pi.points.size(); ++i)
            os << "  <text x=\"" << vp.x(pi.points[i].x) << "\" y=\"" << vp.y(pi.points[i].y)
               << "\">p" << i << "</text>\n";
        os << " </g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace mmt
