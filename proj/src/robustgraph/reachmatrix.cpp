#include "robustgraph/reachmatrix.hpp"

#include <algorithm>
#include <thread>

#include "homomorphism/reach.hpp"

namespace robustgraph {

ReachMatrix reach_matrix(const hypercore::Hypergraph& g, int workers) {
    ReachMatrix out;
    out.m = static_cast<int>(g.edges.size());
    out.least.assign(out.m, std::vector<long long>(out.m, -1));

    auto fill_rows = [&](int lo, int hi) {
        for (int t = lo; t < hi; ++t) {
            const homomorphism::ReachabilitySet rs = homomorphism::reachability(g, t);
            for (int s = 0; s < out.m; ++s)
                out.least[t][s] = rs.least_radius_edge(g.edges[s]);
        }
    };

    workers = std::max(1, std::min(workers, out.m));
    if (workers <= 1) {
        fill_rows(0, out.m);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (out.m + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int lo = w * chunk;
            const int hi = std::min(out.m, lo + chunk);
            if (lo < hi) pool.emplace_back(fill_rows, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    for (int t = 0; t < out.m; ++t)
        for (int s = 0; s < out.m; ++s)
            out.max_finite = std::max(out.max_finite, out.least[t][s]);

    // mutual reachability classes; transitivity follows from composing the
    // underlying fixpoints, so a single sweep by smallest member suffices
    out.scc.assign(out.m, -1);
    for (int i = 0; i < out.m; ++i) {
        if (out.scc[i] >= 0) continue;
        const int id = out.scc_count++;
        out.scc[i] = id;
        for (int j = i + 1; j < out.m; ++j)
            if (out.scc[j] < 0 && out.mutual(i, j)) out.scc[j] = id;
    }
    return out;
}

} // namespace robustgraph
