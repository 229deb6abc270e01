#pragma once

#include <vector>

#include "hypercore/hypergraph.hpp"

namespace robustgraph {

// All-pairs edge reachability of one graph, computed by saturating the
// per-target fixpoint once per edge. least[t][s] is the smallest C such
// that edge t is C-reachable from edge s, or -1 when the fixpoint refuses
// it; a refusal at the fixpoint is exact, so -1 is a genuine refutation
// rather than a timeout.
//
// Composing two reachability facts bounds a third, so "mutually reachable"
// is an equivalence on edges; scc holds its classes, numbered by smallest
// member. The labelling and enumeration passes share one matrix.
struct ReachMatrix {
    int m = 0;
    std::vector<std::vector<long long>> least;
    std::vector<int> scc;
    int scc_count = 0;
    long long max_finite = 0;

    bool mutual(int a, int b) const { return least[a][b] >= 0 && least[b][a] >= 0; }
};

// workers > 1 splits the per-target fixpoints across threads; the result is
// identical for every worker count.
ReachMatrix reach_matrix(const hypercore::Hypergraph& g, int workers = 1);

} // namespace robustgraph
