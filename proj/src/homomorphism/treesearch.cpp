#include "homomorphism/treesearch.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace homomorphism {

namespace {

// all sorted multisets of the given size over ids 0..count-1
void multisets(int count, int size, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(size, 0);
    if (size == 0) {
        out.push_back({});
        return;
    }
    while (true) {
        out.push_back(cur);
        int i = size - 1;
        while (i >= 0 && cur[i] == count - 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < size; ++j) cur[j] = cur[i];
    }
}

} // namespace

TreeTypes enumerate_tree_types(int k, int depth_cap, int branch_cap) {
    if (k < 2 || depth_cap < 1 || branch_cap < 1)
        throw std::invalid_argument("enumerate_tree_types: bad parameters");
    TreeTypes types;
    types.k = k;
    types.depth_cap = depth_cap;
    types.branch_cap = branch_cap;
    types.vertex_types.assign(depth_cap + 1, {});
    types.edge_types.assign(depth_cap + 1, {});

    // deepest vertices have no room below
    types.vertex_types[depth_cap].push_back({});

    for (int d = depth_cap - 1; d >= 0; --d) {
        const int below = static_cast<int>(types.vertex_types[d + 1].size());
        std::vector<std::vector<int>> ets;
        multisets(below, k - 1, ets);
        types.edge_types[d] = std::move(ets);

        const int budget = d == 0 ? branch_cap : branch_cap - 1;
        std::vector<std::vector<int>> vts;
        for (int sz = 0; sz <= budget; ++sz)
            multisets(static_cast<int>(types.edge_types[d].size()), sz, vts);
        types.vertex_types[d] = std::move(vts);
    }
    for (int vt = 0; vt < static_cast<int>(types.vertex_types[0].size()); ++vt)
        if (!types.vertex_types[0][vt].empty()) types.root_types.push_back(vt);
    return types;
}

loosetree::LooseTree TreeTypes::materialise(int root_type) const {
    struct Node {
        int id;
        int depth;
        int type;
    };
    std::vector<hypercore::Edge> edges;
    std::queue<Node> q;
    q.push({0, 0, root_type});
    int next = 1;
    while (!q.empty()) {
        Node node = q.front();
        q.pop();
        for (int et : vertex_types[node.depth][node.type]) {
            hypercore::Edge e;
            e.push_back(node.id);
            const auto& children = edge_types[node.depth][et];
            for (int t = 0; t < k - 1; ++t) {
                const int child = next++;
                e.push_back(child);
                q.push({child, node.depth + 1, children[t]});
            }
            std::sort(e.begin(), e.end());
            edges.push_back(e);
        }
    }
    return loosetree::LooseTree::create(k, next, 0, std::move(edges));
}

loosetree::LooseTree full_chain_tree(int k, int depth) {
    if (k < 2 || depth < 1) throw std::invalid_argument("full_chain_tree: bad parameters");
    std::vector<hypercore::Edge> edges;
    std::vector<int> frontier{0};
    int next = 1;
    for (int d = 0; d < depth; ++d) {
        std::vector<int> fresh;
        for (int v : frontier) {
            hypercore::Edge e;
            e.push_back(v);
            for (int t = 0; t < k - 1; ++t) {
                e.push_back(next);
                fresh.push_back(next);
                ++next;
            }
            std::sort(e.begin(), e.end());
            edges.push_back(e);
        }
        frontier = std::move(fresh);
    }
    return loosetree::LooseTree::create(k, next, 0, std::move(edges));
}

namespace {

// distance (in edges along the unique loose path) from the root
std::vector<int> root_distances(const loosetree::LooseTree& t) {
    std::vector<int> dist(t.n, -1);
    dist[t.root] = 0;
    std::queue<int> q;
    q.push(t.root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int ei : t.child_edges(v))
            for (int w : t.edges[ei])
                if (w != v && dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
    }
    return dist;
}

bool pin_ok(const TreeConstraint& c, long long dist, int cls, int w) {
    if (c.mode == TreeConstraint::Mode::rotate) {
        if (dist >= c.radius) return w == c.rooted[c.sigma[cls]];
        return true;
    }
    if (dist > c.radius)
        return std::find(c.rooted.begin(), c.rooted.end(), w) != c.rooted.end();
    return true;
}

void check_constraint(const hypercore::Hypergraph& g, const TreeConstraint& c) {
    if (static_cast<int>(c.rooted.size()) != g.k)
        throw std::invalid_argument("tree constraint: target edge has wrong size");
    if (c.mode == TreeConstraint::Mode::rotate &&
        (static_cast<int>(c.sigma.size()) != g.k || !perm_valid(c.sigma)))
        throw std::invalid_argument("tree constraint: sigma is not a class permutation");
}

using Feas = std::vector<char>;

// feasibility sets for every tree vertex, bottom-up
std::vector<Feas> tree_feasibility(const hypercore::Hypergraph& g,
                                   const loosetree::LooseTree& t, const TreeConstraint& c) {
    auto dist = root_distances(t);
    std::vector<int> order(t.n);
    for (int v = 0; v < t.n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] > dist[b]; });

    std::vector<Feas> feas(t.n, Feas(g.n, 0));
    for (int v : order) {
        for (int w = 0; w < g.n; ++w) {
            if (!pin_ok(c, dist[v], t.colour[v] - 1, w)) continue;
            bool ok = true;
            for (int ei : t.child_edges(v)) {
                std::vector<int> children;
                for (int x : t.edges[ei])
                    if (x != v) children.push_back(x);
                bool edge_ok = false;
                for (int gi : g.incidence[w]) {
                    std::vector<int> others;
                    for (int y : g.edges[gi])
                        if (y != w) others.push_back(y);
                    if (static_cast<int>(others.size()) != g.k - 1) continue;
                    std::vector<int> idx(g.k - 1);
                    for (int i = 0; i < g.k - 1; ++i) idx[i] = i;
                    do {
                        bool all = true;
                        for (int i = 0; i < g.k - 1 && all; ++i)
                            all = feas[children[i]][others[idx[i]]] != 0;
                        if (all) {
                            edge_ok = true;
                            break;
                        }
                    } while (std::next_permutation(idx.begin(), idx.end()));
                    if (edge_ok) break;
                }
                if (!edge_ok) {
                    ok = false;
                    break;
                }
            }
            if (ok) feas[v][w] = 1;
        }
    }
    return feas;
}

} // namespace

std::vector<char> tree_feasible_roots(const hypercore::Hypergraph& g,
                                      const loosetree::LooseTree& t, const TreeConstraint& c) {
    check_constraint(g, c);
    return tree_feasibility(g, t, c)[t.root];
}

std::vector<char> catalogue_feasible_roots(const TreeTypes& types,
                                           const hypercore::Hypergraph& g,
                                           const TreeConstraint& c) {
    check_constraint(g, c);
    const int k = types.k;
    if (k != g.k) throw std::invalid_argument("catalogue_feasible_roots: uniformity mismatch");

    // memo over (depth, vertex type, class): feasibility per image.
    // Vertices at equal depth and class with equal type accept exactly the
    // same images, so the whole catalogue collapses to this table.
    std::map<std::tuple<int, int, int>, Feas> memo;
    auto solve = [&](int d, int vt, int s, auto&& self) -> const Feas& {
        auto key = std::make_tuple(d, vt, s);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        // resolve child tables first; map nodes stay put, so the pointers
        // survive further insertions
        std::vector<std::vector<const Feas*>> child_feas;
        for (int et : types.vertex_types[d][vt]) {
            const auto& children = types.edge_types[d][et];
            std::vector<const Feas*> row;
            for (int t = 1; t <= k - 1; ++t)
                row.push_back(&self(d + 1, children[t - 1], (s + t) % k, self));
            child_feas.push_back(std::move(row));
        }

        Feas out(g.n, 0);
        for (int w = 0; w < g.n; ++w) {
            if (!pin_ok(c, d, s, w)) continue;
            bool ok = true;
            for (const auto& row : child_feas) {
                bool edge_ok = false;
                for (int gi : g.incidence[w]) {
                    std::vector<int> others;
                    for (int y : g.edges[gi])
                        if (y != w) others.push_back(y);
                    std::vector<int> idx(k - 1);
                    for (int i = 0; i < k - 1; ++i) idx[i] = i;
                    do {
                        bool all = true;
                        for (int i = 0; i < k - 1 && all; ++i)
                            all = (*row[i])[others[idx[i]]] != 0;
                        if (all) {
                            edge_ok = true;
                            break;
                        }
                    } while (std::next_permutation(idx.begin(), idx.end()));
                    if (edge_ok) break;
                }
                if (!edge_ok) {
                    ok = false;
                    break;
                }
            }
            if (ok) out[w] = 1;
        }
        return memo.emplace(key, std::move(out)).first->second;
    };

    Feas all(g.n, 1);
    for (int rt : types.root_types) {
        const Feas& f = solve(0, rt, 0, solve);
        for (int w = 0; w < g.n; ++w) all[w] = all[w] && f[w];
    }
    return all;
}

std::optional<VertexMap> tree_witness(const hypercore::Hypergraph& g,
                                      const loosetree::LooseTree& t, const TreeConstraint& c,
                                      int root_image) {
    check_constraint(g, c);
    auto feas = tree_feasibility(g, t, c);
    if (root_image < 0 || root_image >= g.n || !feas[t.root][root_image]) return std::nullopt;

    VertexMap m;
    m.kind = VertexMap::Kind::homomorphism;
    m.image.assign(t.n, -1);
    m.image[t.root] = root_image;
    std::queue<int> q;
    q.push(t.root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        const int w = m.image[v];
        for (int ei : t.child_edges(v)) {
            std::vector<int> children;
            for (int x : t.edges[ei])
                if (x != v) children.push_back(x);
            bool placed = false;
            for (int gi : g.incidence[w] /* witness edge search mirrors feasibility */) {
                std::vector<int> others;
                for (int y : g.edges[gi])
                    if (y != w) others.push_back(y);
                std::vector<int> idx(g.k - 1);
                for (int i = 0; i < g.k - 1; ++i) idx[i] = i;
                do {
                    bool all = true;
                    for (int i = 0; i < g.k - 1 && all; ++i)
                        all = feas[children[i]][others[idx[i]]] != 0;
                    if (all) {
                        for (int i = 0; i < g.k - 1; ++i) {
                            m.image[children[i]] = others[idx[i]];
                            q.push(children[i]);
                        }
                        placed = true;
                        break;
                    }
                } while (std::next_permutation(idx.begin(), idx.end()));
                if (placed) break;
            }
            if (!placed) return std::nullopt; // cannot happen when feas[root] held
        }
    }
    return m;
}

} // namespace homomorphism
