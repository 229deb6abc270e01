#include "matching/blossom.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace matching {

using hypercore::BigInt;
using hypercore::Hypergraph;

namespace {

// Alternating-forest search from one exposed root. parent[] stores the odd
// vertex preceding each even vertex on its alternating path; base[] tracks
// the contracted blossom each vertex currently lives in.
struct Forest {
    int n;
    const std::vector<std::vector<int>>& adj;
    std::vector<int>& match;
    std::vector<int> parent, base;
    std::vector<char> used, in_blossom;

    Forest(int n_, const std::vector<std::vector<int>>& adj_, std::vector<int>& match_)
        : n(n_), adj(adj_), match(match_), parent(n_, -1), base(n_), used(n_, 0),
          in_blossom(n_, 0) {}

    int lowest_common_base(int a, int b) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (;;) {
            a = base[a];
            seen[static_cast<std::size_t>(a)] = 1;
            if (match[a] < 0) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[static_cast<std::size_t>(b)]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int stop, int child) {
        while (base[v] != stop) {
            in_blossom[static_cast<std::size_t>(base[v])] = 1;
            in_blossom[static_cast<std::size_t>(base[match[v]])] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    // Returns an exposed vertex ending an augmenting path from root, or -1.
    int find_augmenting(int root) {
        used[static_cast<std::size_t>(root)] = 1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int to : adj[static_cast<std::size_t>(v)]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] >= 0 && parent[match[to]] >= 0)) {
                    // Both endpoints are even: the edge closes an odd cycle.
                    // Contract it to its stem and keep searching.
                    const int stem = lowest_common_base(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, stem, to);
                    mark_path(to, stem, v);
                    for (int i = 0; i < n; ++i) {
                        if (!in_blossom[static_cast<std::size_t>(base[i])]) continue;
                        base[i] = stem;
                        if (!used[static_cast<std::size_t>(i)]) {
                            used[static_cast<std::size_t>(i)] = 1;
                            queue.push_back(i);
                        }
                    }
                } else if (parent[to] < 0) {
                    parent[to] = v;
                    if (match[to] < 0) return to;
                    used[static_cast<std::size_t>(match[to])] = 1;
                    queue.push_back(match[to]);
                }
            }
        }
        return -1;
    }
};

} // namespace

std::vector<std::pair<int, int>> max_matching(const Hypergraph& g2) {
    if (g2.k != 2) throw std::invalid_argument("max_matching: expected a 2-graph");
    const int n = g2.n;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& e : g2.edges) {
        adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
        adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }

    std::vector<int> match(static_cast<std::size_t>(n), -1);
    // Cheap greedy seed; every vertex it leaves exposed still gets a full
    // forest search below, so this only saves augmentation rounds.
    for (const auto& e : g2.edges)
        if (match[static_cast<std::size_t>(e[0])] < 0 &&
            match[static_cast<std::size_t>(e[1])] < 0) {
            match[static_cast<std::size_t>(e[0])] = e[1];
            match[static_cast<std::size_t>(e[1])] = e[0];
        }

    for (int root = 0; root < n; ++root) {
        if (match[static_cast<std::size_t>(root)] >= 0) continue;
        Forest forest(n, adj, match);
        for (int i = 0; i < n; ++i) forest.base[static_cast<std::size_t>(i)] = i;
        int tail = forest.find_augmenting(root);
        // Flip matched and unmatched edges along the found path.
        while (tail >= 0) {
            const int prev = forest.parent[tail];
            const int next = match[static_cast<std::size_t>(prev)];
            match[static_cast<std::size_t>(tail)] = prev;
            match[static_cast<std::size_t>(prev)] = tail;
            tail = next;
        }
    }

    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < n; ++v)
        if (match[static_cast<std::size_t>(v)] > v)
            pairs.emplace_back(v, match[static_cast<std::size_t>(v)]);
    return pairs;
}

BigInt matching_force_threshold(int n, long long s) {
    if (s <= 0) throw std::invalid_argument("matching_force_threshold: target must be positive");
    if (2 * s - 1 > 62) throw std::invalid_argument("matching_force_threshold: target too large");
    const BigInt clique = hypercore::binomial(static_cast<int>(2 * s - 1), 2);
    const long long tail = n - s + 1 > 0 ? n - s + 1 : 0;
    const BigInt cover =
        BigInt(hypercore::binomial(static_cast<int>(s - 1), 2)) + BigInt(s - 1) * tail;
    return std::max(clique, cover);
}

MatchingForceReport ergallai_matching(const Hypergraph& g2, long long s) {
    MatchingForceReport rep;
    rep.target = s;
    rep.threshold = matching_force_threshold(g2.n, s);
    rep.forced = BigInt(g2.edge_count()) > rep.threshold;
    rep.pairs = max_matching(g2);
    rep.size = static_cast<long long>(rep.pairs.size());
    rep.reached = rep.size >= s;
    if (rep.forced && !rep.reached)
        throw std::logic_error("ergallai_matching: edge count forces a larger matching");
    return rep;
}

} // namespace matching
