#include "robustgraph/enumeration.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace robustgraph {

using hypercore::BigInt;
using hypercore::Edge;

namespace {

// Appends the ids in pool that pass keep, ascending, skipping ones already
// emitted.
void append_block(std::vector<int>& order, std::vector<char>& used, const std::vector<int>& pool) {
    for (int e : pool) {
        if (used[e]) continue;
        used[e] = 1;
        order.push_back(e);
    }
}

struct PairCheck {
    bool ok = true;
    long long max_radius = 0;
    std::array<int, 2> refutation{{-1, -1}};
};

PairCheck check_order(const std::vector<int>& order, const ReachMatrix& matrix) {
    PairCheck pc;
    for (std::size_t j = 0; j < order.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const long long r = matrix.least[order[j]][order[i]];
            if (r < 0) {
                if (pc.ok) pc.refutation = {order[i], order[j]};
                pc.ok = false;
            } else {
                pc.max_radius = std::max(pc.max_radius, r);
            }
        }
    }
    return pc;
}

} // namespace

EnumerationResult build_enumeration(const RobustSubgraph& rs, const LabelStructure& ls,
                                    const ReachMatrix& matrix) {
    const int m = matrix.m;
    const int k = rs.base.k;
    const int n = rs.base.n;
    if (m != static_cast<int>(rs.gstar.edges.size()))
        throw std::invalid_argument("build_enumeration: matrix does not match gstar");

    EnumerationResult res;
    res.cap = 1;
    for (int i = 0; i < 4 * k; ++i) res.cap *= n;

    std::vector<char> used(m, 0);
    if (k % 2 == 0) {
        res.basis = "plus-first";
        const LabelSets& root = ls.labels.at(Edge{});
        append_block(res.order, used, root.plus);
        std::vector<int> rest;
        for (int e = 0; e < m; ++e)
            if (!used[e]) rest.push_back(e);
        append_block(res.order, used, rest);
    } else {
        res.basis = "vertex-classes";
        if (!ls.has_psi)
            throw std::invalid_argument("build_enumeration: odd k needs vertex classes");
        std::vector<int> block1;
        std::vector<int> block2;
        if (!ls.psi_analysis.components.empty()) {
            std::set<int> acc;
            for (int v : ls.psi_analysis.components[0].vertices) {
                const LabelSets& lab = ls.labels.at(Edge{v});
                acc.insert(lab.plus.begin(), lab.plus.end());
            }
            block1.assign(acc.begin(), acc.end());
        }
        if (ls.psi_analysis.components.size() >= 2) {
            std::set<int> acc;
            for (int v : ls.psi_analysis.components[1].vertices) {
                const LabelSets& lab = ls.labels.at(Edge{v});
                acc.insert(lab.plus.begin(), lab.plus.end());
            }
            block2.assign(acc.begin(), acc.end());
        }
        append_block(res.order, used, block1);
        append_block(res.order, used, block2);
        std::vector<int> rest;
        for (int e = 0; e < m; ++e)
            if (!used[e]) rest.push_back(e);
        append_block(res.order, used, rest);
    }

    const PairCheck pc = check_order(res.order, matrix);
    res.verified = pc.ok;
    res.max_radius = pc.max_radius;
    res.refutation = pc.refutation;
    res.cap_exceeded = BigInt(res.max_radius) > res.cap;

    // Fallback order: chain the mutual classes by reachability when they are
    // pairwise comparable. Distinct classes can never reach each other both
    // ways, so comparability makes the relation a total order.
    std::vector<int> rep(matrix.scc_count, -1);
    for (int e = 0; e < m; ++e)
        if (rep[matrix.scc[e]] < 0) rep[matrix.scc[e]] = e;
    const auto reaches = [&](int s, int t) { return matrix.least[rep[t]][rep[s]] >= 0; };

    res.scc_possible = true;
    for (int s = 0; s < matrix.scc_count && res.scc_possible; ++s)
        for (int t = s + 1; t < matrix.scc_count; ++t)
            if (!reaches(s, t) && !reaches(t, s)) {
                res.scc_possible = false;
                break;
            }
    if (res.scc_possible && matrix.scc_count > 0) {
        std::vector<int> cls(matrix.scc_count);
        for (int s = 0; s < matrix.scc_count; ++s) cls[s] = s;
        std::sort(cls.begin(), cls.end(), [&](int a, int b) { return a != b && reaches(a, b); });
        for (int c : cls)
            for (int e = 0; e < m; ++e)
                if (matrix.scc[e] == c) res.scc_order.push_back(e);
        const PairCheck spc = check_order(res.scc_order, matrix);
        res.scc_verified = spc.ok;
        res.scc_max_radius = spc.max_radius;
    }

    return res;
}

} // namespace robustgraph
