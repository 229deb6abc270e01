#pragma once

#include <utility>
#include <vector>

#include "hypercore/hypergraph.hpp"

namespace matching {

// Maximum matching in a simple 2-graph by alternating-forest search with
// blossom contraction, so odd cycles cannot hide augmenting paths. Runs in
// O(n^3), far below what desk-scale instances need. The input must be
// 2-uniform; the result lists matched pairs with the smaller endpoint first.
std::vector<std::pair<int, int>> max_matching(const hypercore::Hypergraph& g2);

// Edge-count threshold above which a matching of the target size is forced:
// the larger of C(2s-1,2) and C(s-1,2)+(s-1)(n-s+1). A clique on 2s-1
// vertices meets the first bound with equality and has no matching of size
// s, so the threshold is sharp.
hypercore::BigInt matching_force_threshold(int n, long long s);

// Runs the maximum-matching search and audits it against the threshold:
// whenever the edge count strictly exceeds the threshold, the matching
// found must reach the target size. A shortfall would be a counterexample
// to the bound (in truth, a matcher defect) and throws std::logic_error.
struct MatchingForceReport {
    long long target = 0;
    hypercore::BigInt threshold = 0;
    bool forced = false; // edge count strictly above the threshold
    std::vector<std::pair<int, int>> pairs;
    long long size = 0;
    bool reached = false; // size >= target
};

MatchingForceReport ergallai_matching(const hypercore::Hypergraph& g2, long long s);

} // namespace matching
