#include "homomorphism/rotate.hpp"

#include <algorithm>
#include <stdexcept>

namespace homomorphism {

RotationTable rotation_table(const hypercore::Hypergraph& g, const std::vector<int>& rooted,
                             const Perm& sigma) {
    const int k = g.k;
    if (static_cast<int>(rooted.size()) != k)
        throw std::invalid_argument("rotation_table: rooted edge has wrong size");
    if (!perm_valid(sigma) || static_cast<int>(sigma.size()) != k)
        throw std::invalid_argument("rotation_table: sigma is not a permutation of the classes");
    hypercore::Edge sorted = rooted;
    std::sort(sorted.begin(), sorted.end());
    if (!g.has_edge(sorted))
        throw std::invalid_argument("rotation_table: rooted sequence is not an edge of g");

    RotationTable t;
    t.k = k;
    t.n = g.n;
    t.rooted = rooted;
    t.sigma = sigma;

    std::vector<char> cur(g.n * k, 0);
    for (int s = 0; s < k; ++s) cur[rooted[sigma[s]] * k + s] = 1;
    t.dp.push_back(cur);

    // class bijections for the k-1 non-root positions of a witness edge
    std::vector<std::vector<int>> orders;
    {
        std::vector<int> idx(k - 1);
        for (int i = 0; i < k - 1; ++i) idx[i] = i;
        do {
            orders.push_back(idx);
        } while (std::next_permutation(idx.begin(), idx.end()));
    }

    while (true) {
        const std::vector<char>& prev = t.dp.back();
        std::vector<char> next = prev;
        bool changed = false;
        for (int w = 0; w < g.n; ++w) {
            for (int s = 0; s < k; ++s) {
                if (next[w * k + s]) continue;
                std::vector<int> rest; // the k-1 classes other than s
                for (int c = 0; c < k; ++c)
                    if (c != s) rest.push_back(c);
                bool ok = false;
                for (int ei : g.incidence[w]) {
                    std::vector<int> others;
                    for (int x : g.edges[ei])
                        if (x != w) others.push_back(x);
                    for (const auto& ord : orders) {
                        bool all = true;
                        for (int i = 0; i < k - 1 && all; ++i)
                            all = prev[others[i] * k + rest[ord[i]]] != 0;
                        if (all) {
                            ok = true;
                            break;
                        }
                    }
                    if (ok) break;
                }
                if (ok) {
                    next[w * k + s] = 1;
                    changed = true;
                }
            }
        }
        if (!changed) {
            t.fixpoint = static_cast<int>(t.dp.size()) - 1;
            break;
        }
        t.dp.push_back(std::move(next));
    }
    return t;
}

RotationContext::RotationContext(const hypercore::Hypergraph& g, std::vector<int> rooted)
    : g_(&g), rooted_(std::move(rooted)) {
    hypercore::Edge sorted = rooted_;
    std::sort(sorted.begin(), sorted.end());
    if (!g.has_edge(sorted))
        throw std::invalid_argument("RotationContext: rooted sequence is not an edge");
}

const RotationTable& RotationContext::table(const Perm& sigma) {
    auto it = tables_.find(sigma);
    if (it != tables_.end()) return it->second;
    return tables_.emplace(sigma, rotation_table(*g_, rooted_, sigma)).first->second;
}

std::optional<long long> RotationContext::least_round(const Perm& pi, const Perm& sigma) {
    return table(sigma).least(rooted_[pi[0]], 0);
}

std::optional<long long> RotationContext::least_bracket(int first, const Perm& sigma) {
    const int k = g_->k;
    long long best = 0;
    for (const Perm& pi : all_perms(k)) {
        if (pi[0] != first) continue;
        auto r = least_round(pi, perm_compose(sigma, pi));
        if (!r) return std::nullopt;
        best = std::max(best, *r);
    }
    return best;
}

std::optional<long long> RotationContext::least_bracket_star(const Perm& sigma) {
    const int k = g_->k;
    long long best = 0;
    for (const Perm& pi : all_perms(k)) {
        auto r = least_round(pi, perm_compose(sigma, pi));
        if (!r) return std::nullopt;
        best = std::max(best, *r);
    }
    return best;
}

std::optional<long long> RotationContext::least_full() {
    const int k = g_->k;
    long long best = 0;
    for (const Perm& sigma : all_perms(k)) {
        for (int i = 0; i < k; ++i) {
            auto r = table(sigma).least(rooted_[i], 0);
            if (!r) return std::nullopt;
            best = std::max(best, *r);
        }
    }
    return best;
}

bool RotationContext::holds(const RotationWitness& w) {
    if (w.rooted != rooted_) return false;
    std::optional<long long> least;
    if (w.mode == "round") least = least_round(w.pi, w.sigma);
    else if (w.mode == "bracket") least = least_bracket(w.pi[0], w.sigma);
    else if (w.mode == "bracket_star") least = least_bracket_star(w.sigma);
    else if (w.mode == "full") least = least_full();
    else throw std::invalid_argument("RotationContext: unknown witness mode " + w.mode);
    return least.has_value() && *least <= w.radius;
}

bool verify_witness(const hypercore::Hypergraph& g, const RotationWitness& w) {
    RotationContext ctx(g, w.rooted);
    return ctx.holds(w);
}

hypercore::BigInt rotation_cap_coarse(int n, int k) {
    hypercore::BigInt c = 1;
    for (int i = 0; i < 4 * k; ++i) c *= n;
    return c;
}

hypercore::BigInt rotation_cap_refined(int n, int k) {
    hypercore::BigInt c = 10000000;
    for (int i = 2; i <= k; ++i) c *= i;
    for (int i = 0; i < 4; ++i) c *= n;
    return c;
}

} // namespace homomorphism
