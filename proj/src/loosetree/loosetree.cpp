#include "loosetree/loosetree.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace loosetree {

namespace {

int tau(int c, int k) { return c % k + 1; }

} // namespace

LooseTree LooseTree::create(int k, int n, int root, std::vector<Edge> construction_edges) {
    if (k < 2) throw std::invalid_argument("LooseTree: uniformity must be at least 2");
    const int m = static_cast<int>(construction_edges.size());
    if (m == 0) throw std::invalid_argument("LooseTree: at least one edge required");
    if (n != m * (k - 1) + 1)
        throw std::invalid_argument("LooseTree: vertex count must be edges*(k-1)+1");
    if (root < 0 || root >= n) throw std::invalid_argument("LooseTree: root out of range");

    std::vector<char> seen(n, 0);
    for (int i = 0; i < m; ++i) {
        Edge& e = construction_edges[i];
        if (static_cast<int>(e.size()) != k)
            throw std::invalid_argument("LooseTree: edge of wrong size");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("LooseTree: repeated vertex in edge");
        if (e.front() < 0 || e.back() >= n)
            throw std::invalid_argument("LooseTree: vertex id out of range");
        int shared = 0;
        for (int v : e) shared += seen[v] ? 1 : 0;
        if (i == 0 ? shared != 0 : shared != 1)
            throw std::invalid_argument("LooseTree: construction order violated at edge " +
                                        std::to_string(i));
        for (int v : e) seen[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw std::invalid_argument("LooseTree: vertex " + std::to_string(v) +
                                                  " not covered by any edge");

    LooseTree t;
    t.k = k;
    t.n = n;
    t.root = root;
    t.edges = std::move(construction_edges);
    t.incidence.assign(n, {});
    for (int i = 0; i < m; ++i)
        for (int v : t.edges[i]) t.incidence[v].push_back(i);

    // derive layers and colours by BFS from the root
    t.colour.assign(n, 0);
    t.layer.assign(n, 0);
    t.colour[root] = 1;
    t.layer[root] = 1;
    std::vector<char> edge_done(m, 0);
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int ei : t.incidence[v]) {
            if (edge_done[ei]) continue;
            edge_done[ei] = 1;
            Edge fresh;
            for (int w : t.edges[ei])
                if (w != v) {
                    if (t.layer[w] != 0)
                        throw std::invalid_argument("LooseTree: cycle detected at edge " +
                                                    std::to_string(ei));
                    fresh.push_back(w);
                }
            std::sort(fresh.begin(), fresh.end());
            int c = t.colour[v];
            for (int step = 1; step <= static_cast<int>(fresh.size()); ++step) {
                const int w = fresh[step - 1];
                c = tau(c, k);
                t.layer[w] = t.layer[v] + step;
                t.colour[w] = c;
                q.push(w);
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (t.layer[v] == 0) throw std::invalid_argument("LooseTree: disconnected input");
    return t;
}

int LooseTree::max_vertex_degree() const {
    int best = 0;
    for (int v = 0; v < n; ++v) best = std::max(best, vertex_degree(v));
    return best;
}

int LooseTree::top_vertex(int edge_idx) const {
    const Edge& e = edges.at(edge_idx);
    int best = e.front();
    for (int v : e)
        if (layer[v] < layer[best]) best = v;
    return best;
}

std::vector<int> LooseTree::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (v != root && vertex_degree(v) == 1) out.push_back(v);
    return out;
}

std::vector<int> LooseTree::child_edges(int v) const {
    std::vector<int> out;
    for (int ei : incidence[v])
        if (top_vertex(ei) == v) out.push_back(ei);
    return out;
}

std::optional<int> LooseTree::parent_edge(int v) const {
    for (int ei : incidence[v])
        if (top_vertex(ei) != v) return ei;
    return std::nullopt;
}

hypercore::Hypergraph LooseTree::as_hypergraph() const {
    return hypercore::Hypergraph::create(k, n, edges);
}

TreeValidation validate(const LooseTree& t) {
    auto fail = [](std::string why) { return TreeValidation{false, std::move(why)}; };
    const int m = t.edge_count();
    if (t.n != m * (t.k - 1) + 1) return fail("vertex count is not edges*(k-1)+1");

    std::vector<char> seen(t.n, 0);
    for (int i = 0; i < m; ++i) {
        const Edge& e = t.edges[i];
        if (static_cast<int>(e.size()) != t.k) return fail("edge of wrong size");
        int shared = 0;
        for (int v : e) shared += seen[v] ? 1 : 0;
        if (i == 0 ? shared != 0 : shared != 1)
            return fail("edge " + std::to_string(i) + " breaks the construction order");
        for (int v : e) seen[v] = 1;
    }
    for (int v = 0; v < t.n; ++v)
        if (!seen[v]) return fail("uncovered vertex");

    if (t.colour[t.root] != 1) return fail("root colour is not 1");
    if (t.layer[t.root] != 1) return fail("root layer is not 1");
    for (int v = 0; v < t.n; ++v) {
        if (t.colour[v] < 1 || t.colour[v] > t.k) return fail("colour out of range");
        if (t.layer[v] < 1) return fail("layer out of range");
        if (v != t.root && t.layer[v] == 1) return fail("layer 1 contains a second vertex");
        if (t.colour[v] != (t.layer[v] - 1) % t.k + 1)
            return fail("colour classes do not refine layers mod k");
    }
    for (int i = 0; i < m; ++i) {
        std::vector<int> layers;
        for (int v : t.edges[i]) layers.push_back(t.layer[v]);
        std::sort(layers.begin(), layers.end());
        for (int s = 1; s < t.k; ++s)
            if (layers[s] != layers[0] + s)
                return fail("edge " + std::to_string(i) + " does not span consecutive layers");
    }
    for (int v = 0; v < t.n; ++v) {
        int non_own = 0;
        for (int ei : t.incidence[v]) {
            int min_layer = t.layer[t.top_vertex(ei)];
            if (min_layer != t.layer[v]) ++non_own;
        }
        if (non_own > 1) return fail("vertex " + std::to_string(v) + " has two edges from above");
    }
    return TreeValidation{};
}

TreeMetric metric(const LooseTree& t) {
    const int m = t.edge_count();
    const int total = t.n + m;
    auto bfs = [&](int start) {
        std::vector<int> dist(total, -1);
        std::queue<int> q;
        dist[start] = 0;
        q.push(start);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            if (x < t.n) {
                for (int ei : t.incidence[x])
                    if (dist[t.n + ei] == -1) {
                        dist[t.n + ei] = dist[x] + 1;
                        q.push(t.n + ei);
                    }
            } else {
                for (int v : t.edges[x - t.n])
                    if (dist[v] == -1) {
                        dist[v] = dist[x] + 1;
                        q.push(v);
                    }
            }
        }
        return dist;
    };

    TreeMetric out;
    out.vertex_vertex.assign(t.n, std::vector<int>(t.n, 0));
    out.vertex_edge.assign(t.n, std::vector<int>(m, 0));
    out.edge_edge.assign(m, std::vector<int>(m, 0));
    for (int v = 0; v < t.n; ++v) {
        auto dist = bfs(v);
        for (int u = 0; u < t.n; ++u) out.vertex_vertex[v][u] = dist[u] / 2;
        for (int e = 0; e < m; ++e) out.vertex_edge[v][e] = (dist[t.n + e] - 1) / 2;
    }
    for (int e = 0; e < m; ++e) {
        auto dist = bfs(t.n + e);
        for (int f = 0; f < m; ++f) out.edge_edge[e][f] = dist[t.n + f] / 2;
    }
    return out;
}

LooseTree binary_tree(int k, int rounds) {
    if (k < 2 || rounds < 0) throw std::invalid_argument("binary_tree: bad parameters");
    std::vector<Edge> edges;
    Edge first(k);
    for (int i = 0; i < k; ++i) first[i] = i;
    edges.push_back(first);
    int next = k;
    // degree within the growing tree, to locate the current leaves
    std::vector<int> degree(k, 1);
    for (int round = 1; round <= rounds; ++round) {
        std::vector<int> cur_leaves;
        for (int v = 0; v < next; ++v)
            if (v != 0 && degree[v] == 1) cur_leaves.push_back(v);
        for (int leaf : cur_leaves) {
            Edge e;
            e.push_back(leaf);
            for (int i = 0; i < k - 1; ++i) e.push_back(next + i);
            next += k - 1;
            degree.resize(next, 0);
            for (int v : e) ++degree[v];
            edges.push_back(e);
        }
    }
    return LooseTree::create(k, next, 0, std::move(edges));
}

LooseTree random_tree(int k, int n, int max_degree, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("random_tree: uniformity must be at least 2");
    if (max_degree < 1) throw std::invalid_argument("random_tree: degree bound must be positive");
    if (n < k || (n - 1) % (k - 1) != 0)
        throw std::invalid_argument("random_tree: need n = 1 mod (k-1), n >= k");
    std::mt19937_64 gen(seed);
    std::vector<Edge> edges;
    Edge first(k);
    for (int i = 0; i < k; ++i) first[i] = i;
    edges.push_back(first);
    std::vector<int> degree(n, 0);
    for (int v : first) ++degree[v];
    int next = k;
    while (next < n) {
        std::vector<int> candidates;
        for (int v = 0; v < next; ++v)
            if (degree[v] < max_degree) candidates.push_back(v);
        if (candidates.empty())
            throw std::runtime_error("random_tree: degree bound saturated before reaching n");
        const int v = candidates[gen() % candidates.size()];
        Edge e;
        e.push_back(v);
        for (int i = 0; i < k - 1; ++i) e.push_back(next + i);
        next += k - 1;
        for (int w : e) ++degree[w];
        edges.push_back(e);
    }
    return LooseTree::create(k, n, 0, std::move(edges));
}

namespace {

// Materialise a connected edge subset as its own tree: relabel vertices in
// ascending order and emit edges in BFS order from the chosen root, which is
// always a valid construction order.
std::pair<LooseTree, std::vector<int>> materialise(const LooseTree& t,
                                                   const std::vector<int>& edge_idxs,
                                                   int root_orig) {
    std::set<int> vset;
    vset.insert(root_orig);
    for (int ei : edge_idxs)
        for (int v : t.edges[ei]) vset.insert(v);
    std::vector<int> orig(vset.begin(), vset.end());
    std::map<int, int> local;
    for (int i = 0; i < static_cast<int>(orig.size()); ++i) local[orig[i]] = i;

    // BFS order over the selected edges
    std::map<int, std::vector<int>> at; // original vertex -> positions in edge_idxs
    for (int pos = 0; pos < static_cast<int>(edge_idxs.size()); ++pos)
        for (int v : t.edges[edge_idxs[pos]]) at[v].push_back(pos);
    std::vector<Edge> ordered;
    std::vector<char> used(edge_idxs.size(), 0);
    std::queue<int> q;
    std::set<int> enqueued{root_orig};
    q.push(root_orig);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int pos : at[v]) {
            if (used[pos]) continue;
            used[pos] = 1;
            Edge e;
            for (int w : t.edges[edge_idxs[pos]]) {
                e.push_back(local.at(w));
                if (!enqueued.count(w)) {
                    enqueued.insert(w);
                    q.push(w);
                }
            }
            std::sort(e.begin(), e.end());
            ordered.push_back(e);
        }
    }
    if (ordered.size() != edge_idxs.size())
        throw std::logic_error("materialise: selected edges are not connected");
    LooseTree piece = LooseTree::create(t.k, static_cast<int>(orig.size()),
                                        local.at(root_orig), std::move(ordered));
    return {std::move(piece), std::move(orig)};
}

} // namespace

Subtree subtree(const LooseTree& t, int v) {
    if (v < 0 || v >= t.n) throw std::invalid_argument("subtree: vertex out of range");
    // collect v and everything below it
    std::vector<int> edge_idxs;
    std::queue<int> q;
    q.push(v);
    std::set<int> vis{v};
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int ei : t.child_edges(x)) {
            edge_idxs.push_back(ei);
            for (int w : t.edges[ei])
                if (!vis.count(w)) {
                    vis.insert(w);
                    q.push(w);
                }
        }
    }
    if (edge_idxs.empty()) {
        // a bare leaf has no materialisable tree; callers must check first
        throw std::invalid_argument("subtree: vertex has no edges below it");
    }
    std::sort(edge_idxs.begin(), edge_idxs.end());
    auto [tree, orig] = materialise(t, edge_idxs, v);
    return Subtree{std::move(tree), std::move(orig)};
}

Subtree edge_subtree(const LooseTree& t, const std::vector<int>& edge_idxs, int root_orig) {
    if (root_orig < 0 || root_orig >= t.n)
        throw std::invalid_argument("edge_subtree: root out of range");
    if (edge_idxs.empty()) throw std::invalid_argument("edge_subtree: empty edge subset");
    bool root_touched = false;
    for (int ei : edge_idxs) {
        if (ei < 0 || ei >= t.edge_count())
            throw std::invalid_argument("edge_subtree: edge index out of range");
        for (int v : t.edges[ei]) root_touched = root_touched || v == root_orig;
    }
    if (!root_touched) throw std::invalid_argument("edge_subtree: root misses the edge subset");
    auto [tree, orig] = materialise(t, edge_idxs, root_orig);
    return Subtree{std::move(tree), std::move(orig)};
}

LooseTree path_tree(int k, int n) {
    if (k < 2) throw std::invalid_argument("path_tree: uniformity must be at least 2");
    if (n < k || (n - 1) % (k - 1) != 0)
        throw std::invalid_argument("path_tree: need n = 1 (mod k-1) with at least one edge");
    std::vector<Edge> edges;
    for (int start = 0; start + k <= n; start += k - 1) {
        Edge e(k);
        for (int i = 0; i < k; ++i) e[i] = start + i;
        edges.push_back(std::move(e));
    }
    return LooseTree::create(k, n, 0, std::move(edges));
}

std::vector<std::vector<int>> colour_classes(const LooseTree& t) {
    std::vector<std::vector<int>> out(t.k);
    for (int v = 0; v < t.n; ++v) out[t.colour[v] - 1].push_back(v);
    return out;
}

std::vector<std::vector<int>> shift_classes(const LooseTree& t, int j) {
    std::vector<std::vector<int>> out(t.k);
    const int kk = t.k;
    int jj = ((j % kk) + kk) % kk;
    for (int v = 0; v < t.n; ++v) {
        int shifted = (t.colour[v] - 1 + jj) % kk + 1;
        out[shifted - 1].push_back(v);
    }
    return out;
}

Decomposition decompose(const LooseTree& t, int target_size) {
    if (target_size < 1) throw std::invalid_argument("decompose: target must be positive");
    const int delta = t.max_vertex_degree();
    const long long cap = static_cast<long long>(t.k) * delta * target_size;

    std::vector<char> removed(t.n, 0);
    auto active_subtree_size = [&](int v, auto&& self) -> long long {
        long long total = 1;
        for (int ei : t.child_edges(v))
            for (int w : t.edges[ei])
                if (w != v && !removed[w]) total += self(w, self);
        return total;
    };

    struct Peeled {
        int root;
        std::vector<int> edge_idxs;
    };
    std::vector<Peeled> peeled;

    while (true) {
        long long active = 0;
        for (int v = 0; v < t.n; ++v)
            if (!removed[v]) ++active;
        if (active <= cap) break;

        // descend from the root into any child subtree still >= target
        int v = t.root;
        while (true) {
            int descend = -1;
            for (int ei : t.child_edges(v)) {
                for (int w : t.edges[ei]) {
                    if (w == v || removed[w]) continue;
                    if (active_subtree_size(w, active_subtree_size) >=
                        static_cast<long long>(target_size)) {
                        descend = w;
                        break;
                    }
                }
                if (descend != -1) break;
            }
            if (descend == -1) break;
            v = descend;
        }

        // peel the active subtree at v, keeping v itself
        std::vector<int> edge_idxs;
        std::queue<int> q;
        q.push(v);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int ei : t.child_edges(x)) {
                bool live = true;
                for (int w : t.edges[ei])
                    if (w != x && removed[w]) live = false;
                if (!live) continue;
                edge_idxs.push_back(ei);
                for (int w : t.edges[ei])
                    if (w != x) {
                        removed[w] = 1;
                        q.push(w);
                    }
            }
        }
        std::sort(edge_idxs.begin(), edge_idxs.end());
        peeled.push_back({v, std::move(edge_idxs)});
    }

    // remainder: all edges whose vertices are still active
    std::vector<int> rest;
    for (int ei = 0; ei < t.edge_count(); ++ei) {
        bool live = true;
        for (int v : t.edges[ei])
            if (removed[v]) live = false;
        if (live) rest.push_back(ei);
    }

    Decomposition dec;
    dec.target_size = target_size;
    dec.degree_bound = delta;

    std::vector<std::pair<int, std::vector<int>>> final_pieces; // (root, edges)
    if (peeled.empty()) {
        final_pieces.push_back({t.root, rest});
    } else {
        // merge the remainder with the last peeled subtree; its root is a
        // leaf of the remainder, so the union is connected
        std::vector<int> merged = rest;
        merged.insert(merged.end(), peeled.back().edge_idxs.begin(),
                      peeled.back().edge_idxs.end());
        std::sort(merged.begin(), merged.end());
        final_pieces.push_back({t.root, merged});
        for (int i = static_cast<int>(peeled.size()) - 2; i >= 0; --i)
            final_pieces.push_back({peeled[i].root, peeled[i].edge_idxs});
    }

    for (auto& [root, edge_idxs] : final_pieces) {
        auto [tree, orig] = materialise(t, edge_idxs, root);
        DecompositionPiece piece;
        piece.tree = std::move(tree);
        piece.orig = std::move(orig);
        piece.root_orig = root;
        dec.pieces.push_back(std::move(piece));
    }
    // attach relation: the root of piece i lives in exactly one earlier piece
    for (int i = 1; i < static_cast<int>(dec.pieces.size()); ++i) {
        for (int j = 0; j < i && dec.pieces[i].attach_piece == -1; ++j) {
            const auto& earlier = dec.pieces[j].orig;
            if (std::binary_search(earlier.begin(), earlier.end(), dec.pieces[i].root_orig))
                dec.pieces[i].attach_piece = j;
        }
        if (dec.pieces[i].attach_piece == -1)
            throw std::logic_error("decompose: piece root not found in earlier pieces");
    }
    return dec;
}

LooseTree load_tree_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int k = -1, n = -1, root = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<long long> vals;
        long long x;
        while (ls >> x) vals.push_back(x);
        if (!ls.eof()) throw std::runtime_error("tree text: junk on line " + std::to_string(lineno));
        if (vals.empty()) continue;
        if (k < 0) {
            if (vals.size() != 3) throw std::runtime_error("tree text: header must be 'k n root'");
            k = static_cast<int>(vals[0]);
            n = static_cast<int>(vals[1]);
            root = static_cast<int>(vals[2]);
            continue;
        }
        if (static_cast<int>(vals.size()) != k)
            throw std::runtime_error("tree text: edge of wrong size on line " + std::to_string(lineno));
        Edge e;
        for (long long v : vals) e.push_back(static_cast<int>(v));
        edges.push_back(std::move(e));
    }
    if (k < 0) throw std::runtime_error("tree text: missing header");
    try {
        return LooseTree::create(k, n, root, std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw std::runtime_error(std::string("tree text: ") + ex.what());
    }
}

std::string save_tree_text(const LooseTree& t) {
    std::ostringstream out;
    out << t.k << ' ' << t.n << ' ' << t.root << '\n';
    for (const Edge& e : t.edges) {
        for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

LooseTree load_tree_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& ex) {
        throw std::runtime_error(std::string("tree json: parse failure: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("k") || !j.contains("n") || !j.contains("root") ||
        !j.contains("edges"))
        throw std::runtime_error("tree json: requires keys k, n, root, edges");
    std::vector<Edge> edges;
    for (const auto& je : j.at("edges")) edges.push_back(je.get<Edge>());
    try {
        return LooseTree::create(j.at("k").get<int>(), j.at("n").get<int>(),
                                 j.at("root").get<int>(), std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw std::runtime_error(std::string("tree json: ") + ex.what());
    }
}

std::string save_tree_json(const LooseTree& t) {
    nlohmann::ordered_json j;
    j["k"] = t.k;
    j["n"] = t.n;
    j["root"] = t.root;
    j["edges"] = t.edges;
    return j.dump();
}

} // namespace loosetree
