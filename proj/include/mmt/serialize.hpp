#pragma once

#include <string>

#include "mmt/cds.hpp"
#include "mmt/certificate.hpp"
#include "mmt/harness.hpp"
#include "mmt/point_reduction.hpp"

namespace mmt {

// All JSON carries coordinates and thresholds as rational strings ("num/den")
// so files round-trip losslessly. Parsers check shape, not geometry; loaded
// instances are re-audited by whoever needs the invariants.

std::string cds_to_json(const CdsInstance& inst);
CdsInstance cds_from_json(const std::string& text); // recomputes coverage

std::string certificate_to_json(const GadgetCertificate& cert);
GadgetCertificate certificate_from_json(const std::string& text);

std::string points_to_json(const PointInstance& pi);
PointInstance points_from_json(const std::string& text);

// Accepts any JSON object with a "points" array of rational pairs: bare
// point-set files and full split artifacts alike.
PointSet pointset_from_json(const std::string& text);

// One newline-terminated JSON object per report, stable key order.
std::string report_to_json_line(const EquivalenceReport& rep);

// "cds" or "points", from the file's structure. Throws UnknownArtifact.
std::string artifact_kind(const std::string& text);

} // namespace mmt
