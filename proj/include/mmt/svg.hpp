#pragma once

#include <string>
#include <vector>

#include "mmt/cds.hpp"
#include "mmt/certificate.hpp"
#include "mmt/point_reduction.hpp"
#include "mmt/triangulation.hpp"

namespace mmt {

// Layer toggles and stroke styles. Coordinates are mapped to the viewport by
// a pure affine transform; rendering never feeds back into geometry.
struct RenderSpec {
    bool show_stabbers = true;
    bool show_targets = true;
    bool show_pairs = true;
    bool show_triangulation = true;
    bool show_labels = false;
    int width = 800;
    int height = 600;
    std::string even_style = "stroke:#000000;stroke-width:3";
    std::string odd_style = "stroke:#000000;stroke-width:3;stroke-dasharray:7,5";
    std::string clause_style = "stroke:#555555;stroke-width:1";
    std::string plain_style = "stroke:#333333;stroke-width:1.5";
    std::string triangulation_style = "stroke:#2060c0;stroke-width:1";
};

// Even variable segments bold, odd dotted, clause segments thin, targets as
// filled dots. Without a certificate every stabber lands in a plain layer.
std::string render_cds_svg(const CdsInstance& inst, const GadgetCertificate* cert,
                           const RenderSpec& spec = {});

// Stabber edges plus the split pairs as paired small dots; optionally a
// triangulation's edges underneath.
std::string render_points_svg(const PointInstance& pi,
                              const std::vector<Edge>* triangulation = nullptr,
                              const RenderSpec& spec = {});

} // namespace mmt
