#pragma once

#include <vector>

#include "hypercore/hypergraph.hpp"

namespace homomorphism {

// Reachability toward a fixed target edge e, as a monotone fixpoint:
//   R_1 = vertices of e;
//   R_{c+1} = R_c plus every v lying in an edge f with f \ {v} inside R_c.
// radii[v] is the first index admitting v (1 for members of e, -1 if the
// fixpoint never admits v). The DP saturates after at most n rounds; the
// theoretical cap n^k is recorded for reports but can never bind.
//
// Semantic layer: "e is C-reachable from u" means every rooted loose tree
// admits a homomorphism with root image u whose vertices at tree distance
// strictly greater than C map into e. That holds exactly when u lies in
// R_{C+2}; the two-step shift absorbs the root level and the boundary of the
// pinned region, and the equivalence is exercised by the oracle gate.
struct ReachabilitySet {
    int target_edge = -1;
    std::vector<long long> radii;
    std::vector<int> witness_edge; // edge used when the vertex was admitted, -1 for members of e
    long long rounds = 0;          // rounds until saturation
    hypercore::BigInt cap = 0;     // n^k, report only

    // least C with u in R_{C+2}; -1 when unreachable
    long long least_radius(int u) const {
        if (radii[u] < 0) return -1;
        return radii[u] <= 2 ? 0 : radii[u] - 2;
    }
    // least C covering every vertex of another edge; -1 when some member is unreachable
    long long least_radius_edge(const hypercore::Edge& from) const {
        long long best = 0;
        for (int u : from) {
            long long r = least_radius(u);
            if (r < 0) return -1;
            best = std::max(best, r);
        }
        return best;
    }
    bool reachable_within(int u, long long C) const {
        return radii[u] >= 0 && radii[u] <= C + 2;
    }
};

ReachabilitySet reachability(const hypercore::Hypergraph& g, int target_edge);

} // namespace homomorphism
