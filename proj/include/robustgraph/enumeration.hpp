#pragma once

#include <array>
#include <string>
#include <vector>

#include "hypercore/rational.hpp"
#include "robustgraph/labels.hpp"
#include "robustgraph/reachmatrix.hpp"

namespace robustgraph {

// An edge ordering e_1..e_m where every later edge must be reachable from
// every earlier one, verified pairwise against the fixpoint matrix. The
// primary order follows the label structure (plus labels first for even k,
// vertex-class blocks for odd k); a condensation chain over the mutual
// classes is kept alongside as a fallback.
struct EnumerationResult {
    std::vector<int> order;  // gstar edge ids, primary basis
    bool verified = false;   // pairwise check of order
    long long max_radius = 0;
    hypercore::BigInt cap;   // n^(4k); realized radii stay far below it
    bool cap_exceeded = false;
    std::array<int, 2> refutation{{-1, -1}}; // (earlier, later) edge ids on failure

    std::vector<int> scc_order; // fallback: mutual classes chained
    bool scc_possible = false;  // the classes form a chain under reachability
    bool scc_verified = false;
    long long scc_max_radius = 0;

    std::string basis; // "plus-first" or "vertex-classes"
};

EnumerationResult build_enumeration(const RobustSubgraph& rs, const LabelStructure& ls,
                                    const ReachMatrix& matrix);

} // namespace robustgraph
