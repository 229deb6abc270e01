#include "homomorphism/reach.hpp"

#include <stdexcept>

namespace homomorphism {

ReachabilitySet reachability(const hypercore::Hypergraph& g, int target_edge) {
    if (target_edge < 0 || target_edge >= static_cast<int>(g.edges.size()))
        throw std::invalid_argument("reachability: edge index out of range");

    ReachabilitySet out;
    out.target_edge = target_edge;
    out.radii.assign(g.n, -1);
    out.witness_edge.assign(g.n, -1);
    out.cap = 1;
    for (int i = 0; i < g.k; ++i) out.cap *= g.n;

    for (int v : g.edges[target_edge]) out.radii[v] = 1;

    long long round = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        ++round;
        std::vector<std::pair<int, int>> admitted; // (vertex, witness edge)
        for (int ei = 0; ei < static_cast<int>(g.edges.size()); ++ei) {
            const auto& f = g.edges[ei];
            int missing = -1;
            bool usable = true;
            for (int v : f) {
                if (out.radii[v] >= 0 && out.radii[v] < round) continue;
                if (missing != -1) {
                    usable = false;
                    break;
                }
                missing = v;
            }
            if (usable && missing != -1) admitted.push_back({missing, ei});
        }
        for (auto [v, ei] : admitted) {
            if (out.radii[v] < 0) {
                out.radii[v] = round;
                out.witness_edge[v] = ei;
                changed = true;
            }
        }
    }
    out.rounds = round - 1;
    return out;
}

} // namespace homomorphism
