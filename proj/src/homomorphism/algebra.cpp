#include "homomorphism/algebra.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace homomorphism {

using hypercore::Edge;

namespace {

void require_star(const RotationWitness& w, const char* who) {
    if (w.mode != "bracket_star")
        throw std::invalid_argument(std::string(who) +
                                    ": witness must quantify over all roots");
}

}  // namespace

RotationWitness compose_rotations(const RotationWitness& a,
                                  const RotationWitness& b) {
    require_star(a, "compose_rotations");
    require_star(b, "compose_rotations");
    if (a.rooted != b.rooted)
        throw std::invalid_argument(
            "compose_rotations: witnesses are about different ordered edges");
    RotationWitness out;
    out.rooted = a.rooted;
    out.mode = "bracket_star";
    out.sigma = perm_compose(a.sigma, b.sigma);
    out.radius = a.radius + b.radius;
    out.method = "compose";
    return out;
}

RotationWitness reorder_witness(const RotationWitness& w, const Perm& pi) {
    require_star(w, "reorder_witness");
    const int k = static_cast<int>(w.rooted.size());
    if (!perm_valid(pi) || static_cast<int>(pi.size()) != k)
        throw std::invalid_argument("reorder_witness: bad permutation");
    RotationWitness out;
    out.rooted.resize(k);
    for (int i = 0; i < k; ++i) out.rooted[i] = w.rooted[pi[i]];
    out.mode = "bracket_star";
    out.sigma = perm_compose(perm_inverse(pi), perm_compose(w.sigma, pi));
    out.radius = w.radius;
    out.method = "reorder";
    return out;
}

ClosureResult generator_closure(
    int k, const std::vector<RotationWitness>& generators) {
    ClosureResult out;
    out.perms = all_perms(k);
    out.radius.assign(out.perms.size(), -1);
    std::map<Perm, int> index;
    for (int i = 0; i < static_cast<int>(out.perms.size()); ++i)
        index[out.perms[i]] = i;

    // seeds: the identity holds at radius 1 on any edge, plus the supplied
    // witnesses
    std::vector<std::pair<Perm, long long>> seeds;
    seeds.push_back({perm_id(k), 1});
    long long max_gen = 1;
    for (const auto& g : generators) {
        require_star(g, "generator_closure");
        if (static_cast<int>(g.sigma.size()) != k)
            throw std::invalid_argument("generator_closure: arity mismatch");
        if (g.radius < 0)
            throw std::invalid_argument("generator_closure: negative radius");
        seeds.push_back({g.sigma, g.radius});
        max_gen = std::max(max_gen, g.radius);
    }

    using Node = std::pair<long long, int>;
    std::priority_queue<Node, std::vector<Node>, std::greater<Node>> heap;
    auto relax = [&](const Perm& p, long long cost) {
        int id = index.at(p);
        if (out.radius[id] == -1 || cost < out.radius[id]) {
            out.radius[id] = cost;
            heap.push({cost, id});
        }
    };
    for (const auto& [p, c] : seeds) relax(p, c);
    while (!heap.empty()) {
        auto [cost, id] = heap.top();
        heap.pop();
        if (cost != out.radius[id]) continue;
        for (const auto& [p, c] : seeds) {
            relax(perm_compose(out.perms[id], p), cost + c);
            relax(perm_compose(p, out.perms[id]), cost + c);
        }
    }

    out.complete = std::all_of(out.radius.begin(), out.radius.end(),
                               [](long long r) { return r >= 0; });
    if (out.complete) {
        out.full_radius =
            *std::max_element(out.radius.begin(), out.radius.end());
        long long factorial = 1;
        for (int i = 2; i <= k; ++i) factorial *= i;
        if (out.full_radius > factorial * max_gen)
            throw std::logic_error(
                "generator_closure: radius exceeds the k!-fold bound");
    }
    return out;
}

RotationWitness closure_full_witness(const std::vector<int>& rooted,
                                     const ClosureResult& closure) {
    if (!closure.complete)
        throw std::invalid_argument(
            "closure_full_witness: closure does not cover all permutations");
    RotationWitness out;
    out.rooted = rooted;
    out.mode = "full";
    out.radius = closure.full_radius;
    out.method = "closure";
    return out;
}

std::optional<std::vector<int>> even_pair_walk(
    const hypercore::Hypergraph& pair_graph, int a1, int a2, int b1, int b2) {
    if (pair_graph.k != 2)
        throw std::invalid_argument("even_pair_walk: expected a 2-graph");
    Edge start{std::min(a1, a2), std::max(a1, a2)};
    Edge finish{std::min(b1, b2), std::max(b1, b2)};
    if (!pair_graph.has_edge(start) || !pair_graph.has_edge(finish))
        throw std::invalid_argument("even_pair_walk: endpoints are not edges");

    // adjacency from the pair graph
    std::vector<std::vector<int>> adj(pair_graph.n);
    for (const auto& e : pair_graph.edges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }

    // BFS over (previous vertex, current vertex, length parity). Appending a
    // vertex flips the parity, the walk must end on the ordered pair
    // (b1, b2), and the total length must be even; tracking parity in the
    // state keeps bounce walks like (a, b) -> (b, a) correct even when every
    // plain path between the anchors has the wrong parity. When the parity
    // cannot be met (a bipartite component with mismatched sides) no even
    // walk exists at all.
    const int n = pair_graph.n;
    auto code = [n](int prev, int cur, int par) {
        return (prev * n + cur) * 2 + par;
    };
    std::vector<int> parent(static_cast<std::size_t>(n) * n * 2, -2);
    std::queue<int> bfs;
    const int start_state = code(a1, a2, 0);
    const int goal = code(b1, b2, 0);
    parent[start_state] = -1;
    bfs.push(start_state);
    while (!bfs.empty() && parent[goal] == -2) {
        const int s = bfs.front();
        bfs.pop();
        const int par = s % 2;
        const int cur = (s / 2) % n;
        for (int z : adj[cur]) {
            const int t = code(cur, z, 1 - par);
            if (parent[t] == -2) {
                parent[t] = s;
                bfs.push(t);
            }
        }
    }
    if (parent[goal] == -2) return std::nullopt;

    std::vector<int> seq;
    for (int s = goal; s != -1; s = parent[s]) {
        seq.push_back((s / 2) % n);
        if (parent[s] == -1) seq.push_back((s / 2) / n);
    }
    std::reverse(seq.begin(), seq.end());
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        Edge e{std::min(seq[i], seq[i + 1]), std::max(seq[i], seq[i + 1])};
        if (!pair_graph.has_edge(e))
            throw std::logic_error("even_pair_walk: produced a non-walk");
    }
    if (seq.size() % 2 != 0)
        throw std::logic_error("even_pair_walk: parity tracking failed");
    return seq;
}

std::vector<int> interleave_pair_walk(int u1, int u2,
                                      const std::vector<int>& pair_walk) {
    if (pair_walk.size() < 2 || pair_walk.size() % 2 != 0)
        throw std::invalid_argument(
            "interleave_pair_walk: pair walk must have even positive length");
    std::vector<int> out;
    out.reserve(2 * pair_walk.size());
    for (std::size_t i = 0; i + 1 < pair_walk.size(); i += 2) {
        out.push_back(u1);
        out.push_back(u2);
        out.push_back(pair_walk[i]);
        out.push_back(pair_walk[i + 1]);
    }
    return out;
}

RotationWitness tight_walk_transfer(const hypercore::Hypergraph& g,
                                    const std::vector<int>& walk,
                                    const RotationWitness& on_first,
                                    const std::vector<int>& target_order) {
    require_star(on_first, "tight_walk_transfer");
    if (g.k != 4)
        throw std::invalid_argument("tight_walk_transfer: requires a 4-graph");
    if (walk.size() < 4 || walk.size() % 4 != 0)
        throw std::invalid_argument(
            "tight_walk_transfer: walk length must be a positive multiple "
            "of 4");
    const long long ell = static_cast<long long>(walk.size()) / 4;
    for (std::size_t i = 0; i + 3 < walk.size(); ++i) {
        Edge window(walk.begin() + i, walk.begin() + i + 4);
        std::sort(window.begin(), window.end());
        if (std::adjacent_find(window.begin(), window.end()) != window.end())
            throw std::invalid_argument(
                "tight_walk_transfer: repeated vertex in a window");
        if (!g.has_edge(window))
            throw std::invalid_argument(
                "tight_walk_transfer: window is not an edge");
    }

    auto read = [&](const std::vector<int>& order, std::size_t base,
                    const char* what) {
        Perm rho(4, -1);
        for (int i = 0; i < 4; ++i) {
            auto it = std::find(order.begin(), order.end(), walk[base + i]);
            if (it == order.end())
                throw std::invalid_argument(
                    std::string("tight_walk_transfer: ") + what +
                    " window does not match the given ordering");
            rho[i] = static_cast<int>(it - order.begin());
        }
        if (!perm_valid(rho))
            throw std::invalid_argument(
                std::string("tight_walk_transfer: ") + what +
                " reading is not a bijection");
        return rho;
    };
    const Perm rho_e = read(on_first.rooted, 0, "first");
    const Perm rho_f = read(target_order, walk.size() - 4, "last");

    RotationWitness out;
    out.rooted = target_order;
    out.mode = "bracket_star";
    out.sigma = perm_compose(
        rho_f, perm_compose(perm_inverse(rho_e), on_first.sigma));
    out.radius = 4 * on_first.radius + 8 * ell;
    out.method = "walk";
    return out;
}

}  // namespace homomorphism
