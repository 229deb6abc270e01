#pragma once

#include <string>
#include <vector>

#include "hypercore/rational.hpp"
#include "robustgraph/gstar.hpp"

namespace robustgraph {

// Rotatability verdict for one gstar edge. The radius always comes from a
// sound derivation: either the fixpoint program directly ("dp"), or a
// closure of walk-transferred generators ("chain", k = 4), or a closure of
// generators lifted from 4-uniform links and re-verified on gstar
// ("link-reduction", k > 4). dp_radius records the independent fixpoint
// radius when the cross-check ran; a disagreement with a derived witness is
// a bug, not a data point, and throws.
struct EdgeRotation {
    int edge = -1;
    bool rotatable = false;
    long long radius = -1;
    std::string method;
    long long dp_radius = -1;
};

struct RotatabilityReport {
    std::vector<EdgeRotation> per_edge;
    bool all_rotatable = false;
    long long max_radius = 0;
    hypercore::BigInt cap_coarse;  // n^(4k)
    hypercore::BigInt cap_refined; // 10^7 k! n^4
    bool cap_exceeded = false;
    std::vector<std::string> notes;
};

// cross_check reruns the fixpoint program behind every derived witness
// (k <= 4 only; above that the per-generator re-verification already guards
// the lifts and the full program would dominate the runtime).
RotatabilityReport build_rotatability(const RobustSubgraph& rs, bool cross_check = true);

// For k = 4: searches a partner w for u so that many vertices v share a
// component edge between the choices at {u,w} and {u,v}.
struct ManyMonReport {
    int u = -1;
    int w = -1;
    long long count = 0;
    hypercore::Rat threshold;
    bool holds = false;
};

ManyMonReport many_mon(const RobustSubgraph& rs, int u, const hypercore::Rat& alpha);

} // namespace robustgraph
