#pragma once

#include <vector>

#include "hypercore/hypergraph.hpp"
#include "matching/simplex.hpp"

namespace matching {

// Edge weighting x with sum_{e containing v} x_e <= omega(v) at every
// vertex. Size is the total weight; the matching is perfect when the size
// reaches sum(omega)/k, which forces every vertex constraint to be tight.
// dual carries the optimal fractional vertex cover produced alongside the
// optimum, so the struct doubles as an optimality certificate.
struct FractionalMatching {
    std::vector<hypercore::Rat> weights; // one per edge of the host graph
    std::vector<hypercore::Rat> dual;    // one per vertex
    hypercore::Rat size = 0;
    bool perfect = false;
    long long pivots = 0;
};

std::vector<hypercore::Rat> uniform_weights(int n);

// Exact validity check of the inequality system; no optimality claim.
bool is_fractional_matching(const hypercore::Hypergraph& g,
                            const std::vector<hypercore::Rat>& omega,
                            const std::vector<hypercore::Rat>& weights);

bool is_perfect(const hypercore::Hypergraph& g,
                const std::vector<hypercore::Rat>& omega,
                const FractionalMatching& m);

// Optimal omega-fractional matching via the exact simplex. Requires
// omega values in [0,1] and one weight per vertex.
FractionalMatching max_fractional_matching(const hypercore::Hypergraph& g,
                                           const std::vector<hypercore::Rat>& omega);

// Lift of per-link matchings to the whole graph: when every non-isolated
// vertex's link admits an omega-fractional matching of size m, and
// m <= sum(omega)/k, the graph itself admits one of size m. The hypothesis
// is checked vertex by vertex with its own solves, and the conclusion is
// realised by the direct optimum, so a consistent=false report would expose
// a defect in one of the solvers rather than a failed heuristic.
struct LinkLiftReport {
    hypercore::Rat target = 0;        // requested size m
    hypercore::Rat total_weight = 0;  // sum(omega)
    hypercore::Rat min_link_size = 0; // over non-isolated vertices
    std::vector<int> failing;         // vertices whose link optimum falls short
    bool budget_ok = false;           // m <= sum(omega)/k
    bool hypothesis = false;          // budget_ok and failing empty
    bool conclusion = false;          // direct optimum >= m
    bool consistent = false;          // hypothesis implies conclusion
    FractionalMatching realised;      // the direct optimum on g
};

LinkLiftReport link_lift(const hypercore::Hypergraph& g,
                         const std::vector<hypercore::Rat>& omega,
                         const hypercore::Rat& m);

} // namespace matching
