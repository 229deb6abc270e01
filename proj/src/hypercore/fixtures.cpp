#include "hypercore/fixtures.hpp"

#include <random>
#include <stdexcept>

namespace hypercore::fixtures {

Hypergraph complete(int k, int n) {
    if (k < 2 || n < k) throw std::invalid_argument("complete: need n >= k >= 2");
    std::vector<Edge> edges;
    for_each_subset(n, k, [&](const Edge& s) { edges.push_back(s); });
    return Hypergraph::create(k, n, std::move(edges));
}

Hypergraph two_cliques(int k, int n1, int n2) {
    if (k < 2 || n1 < k || n2 < k)
        throw std::invalid_argument("two_cliques: each side needs at least k vertices");
    std::vector<Edge> edges;
    for_each_subset(n1, k, [&](const Edge& s) { edges.push_back(s); });
    for_each_subset(n2, k, [&](const Edge& s) {
        Edge shifted = s;
        for (int& v : shifted) v += n1;
        edges.push_back(shifted);
    });
    return Hypergraph::create(k, n1 + n2, std::move(edges));
}

Hypergraph parity() {
    std::vector<Edge> edges;
    for_each_subset(8, 4, [&](const Edge& s) {
        int in_first = 0;
        for (int v : s)
            if (v < 4) ++in_first;
        if (in_first % 2 == 0) edges.push_back(s);
    });
    return Hypergraph::create(4, 8, std::move(edges));
}

Hypergraph random_graph(int k, int n, const Rat& p, std::uint64_t seed) {
    if (k < 2 || n < k) throw std::invalid_argument("random_graph: need n >= k >= 2");
    if (p < 0 || p > 1) throw std::invalid_argument("random_graph: p outside [0,1]");
    // include iff draw < p * 2^64, evaluated exactly
    const BigInt threshold =
        (boost::multiprecision::numerator(p) << 64) / boost::multiprecision::denominator(p);
    std::mt19937_64 gen(seed);
    std::vector<Edge> edges;
    for_each_subset(n, k, [&](const Edge& s) {
        if (BigInt(gen()) < threshold) edges.push_back(s);
    });
    return Hypergraph::create(k, n, std::move(edges));
}

Hypergraph random_min_degree(int k, int n, int ell, const Rat& target,
                             std::uint64_t seed, int max_attempts) {
    if (ell < 0 || ell >= k) throw std::invalid_argument("random_min_degree: ell out of range");
    // keep enough headroom above the target that rejection terminates quickly
    Rat p = target + (Rat(1) - target) / 2;
    if (p > 1) p = 1;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Hypergraph g = random_graph(k, n, p, seed + static_cast<std::uint64_t>(attempt) * 0x9e3779b97f4a7c15ULL);
        if (min_degree(g, ell).relative >= target) return g;
    }
    throw std::runtime_error("random_min_degree: rejection sampling exhausted its attempts");
}

} // namespace hypercore::fixtures
