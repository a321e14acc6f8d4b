#pragma once

#include <string>
#include <vector>

#include "mmt/cds.hpp"
#include "mmt/certificate.hpp"
#include "mmt/cnf.hpp"
#include "mmt/layout.hpp"

namespace mmt {

struct CompileResult {
    CdsInstance inst;
    GadgetCertificate cert;
    IncidenceLayout layout; // scaled drawing the gadgets were built around
    int n = 2;              // size parameter: radius, shifts, perturbation base
    int scale_k = 4;
};

// Size parameter driving every Theta(n) constant in the construction.
int instance_parameter(const Cnf3& cnf);

// Full exact audit of a compiled (or perturbed) instance against its
// certificate: cyclic crossings at corner targets, disjointness everywhere
// else, incidence crossings on the required parity, exact clause-segment
// concurrence, and coverage counts. Empty means the Lemma 1 structure holds.
std::vector<std::string> certificate_defects(const CdsInstance& inst,
                                             const GadgetCertificate& cert);

// Variable cycles around each scaled variable position plus shifted clause
// segments; retries with a larger scale factor before giving up with
// CrossingAudit.
CompileResult compile_3sat_to_cds(const Cnf3& cnf, const LayoutHints& hints = {});

// Satisfying assignment -> cover: the parity class selected by each
// variable's truth value plus one satisfied literal's segment per clause.
// Throws NotSatisfying if the assignment fails a clause.
std::vector<int> encode_assignment(const CdsInstance& inst, const GadgetCertificate& cert,
                                   const std::vector<bool>& assignment);

// Cover -> assignment via parity rigidity; throws MixedParity when a
// variable's chosen segments are not exactly one parity class.
std::vector<bool> decode_solution(const CdsInstance& inst, const GadgetCertificate& cert,
                                  const std::vector<int>& chosen);

} // namespace mmt
