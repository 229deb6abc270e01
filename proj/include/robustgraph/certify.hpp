#pragma once

#include <string>
#include <vector>

#include "hypercore/hypergraph.hpp"
#include "hypercore/rational.hpp"
#include "robustgraph/enumeration.hpp"
#include "robustgraph/gstar.hpp"
#include "robustgraph/labels.hpp"
#include "robustgraph/reachmatrix.hpp"
#include "robustgraph/rotatability.hpp"

namespace robustgraph {

// One weighting put through the matching check. Infeasible means the
// weighting cannot meet the budget once isolated vertices are zeroed, so it
// asserts nothing either way.
struct OmegaEvidence {
    std::string name;
    std::vector<hypercore::Rat> omega;
    hypercore::Rat total;
    bool feasible = false;
    bool perfect = false;
    hypercore::Rat size;
    bool chain_run = false; // level-by-level lift evidence, first sample only
    bool chain_ok = false;
};

// The three-part robustness verdict for the derived subgraph: perfect
// fractional matchings under sampled weightings, a verified edge
// enumeration, and rotatability of every edge. Refutations carry their
// witness; "partial" is reserved for a radius cap actually binding, which
// the theory says should never happen.
struct RobustCertificate {
    hypercore::Rat eta;
    hypercore::Rat alpha;
    std::string status; // "certified", "refuted", or "partial"
    bool r1_ok = false;
    bool r2_ok = false;
    bool r3_ok = false;
    std::vector<OmegaEvidence> matching_evidence;
    EnumerationResult enumeration;
    long long c1 = 0; // widest radius the verified enumeration needed
    RotatabilityReport rotation;
    long long c2 = 0; // widest rotation radius
    std::string refutation;
    std::vector<std::string> notes;
};

struct CertificationRun {
    RobustSubgraph rs;
    LabelStructure labels;
    ReachMatrix matrix;
    RobustCertificate cert;
};

// Full pipeline: construction, reachability matrix, labels, enumeration,
// rotatability, and matching samples. Runs the oracle gate first and throws
// if it has not passed. omega_samples counts the weightings tried: the
// all-ones weighting, then seeded random ones, then a tight-budget one that
// spends the whole slack allowance.
CertificationRun certify_robust(const hypercore::Hypergraph& g, const hypercore::Rat& eta,
                                int omega_samples, unsigned long long seed,
                                const hypercore::Rat& alpha = hypercore::Rat(1) / 100,
                                int workers = 1);

// Deterministic JSON rendering of the certificate (exact rationals as
// strings, same bytes for the same graph, seed, and knobs).
std::string certificate_json(const CertificationRun& run);

} // namespace robustgraph
