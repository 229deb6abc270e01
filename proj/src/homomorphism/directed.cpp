#include "homomorphism/directed.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace homomorphism {

using hypercore::Edge;

namespace {

// fresh vertices of a child edge, ascending: position t carries colour
// tau^t of the top vertex, matching how trees assign colours
std::vector<int> fresh_of(const loosetree::LooseTree& t, int edge_idx,
                          int top) {
    std::vector<int> out;
    for (int v : t.edges[edge_idx])
        if (v != top) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> tree_distances(const loosetree::LooseTree& t) {
    std::vector<int> dist(t.n, -1);
    dist[t.root] = 0;
    std::queue<int> q;
    q.push(t.root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int ei : t.child_edges(v))
            for (int y : fresh_of(t, ei, v)) {
                dist[y] = dist[v] + 1;
                q.push(y);
            }
    }
    return dist;
}

// maps the whole subtree under v into the target edge by colour class,
// aligned so v keeps its current image
void colour_fill(const loosetree::LooseTree& t, const Edge& target, int v,
                 int image, std::vector<int>& out) {
    const int k = t.k;
    auto pos = std::find(target.begin(), target.end(), image);
    if (pos == target.end())
        throw std::logic_error("colour_fill: image is outside the target");
    const int shift = static_cast<int>(pos - target.begin()) -
                      (t.colour[v] - 1);
    std::queue<int> q;
    q.push(v);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        out[x] = target[(((t.colour[x] - 1 + shift) % k) + k) % k];
        for (int ei : t.child_edges(x))
            for (int y : fresh_of(t, ei, x)) q.push(y);
    }
}

void reach_fill(const hypercore::Hypergraph& g, const ReachabilitySet& rs,
                const loosetree::LooseTree& t, int v, int image,
                std::vector<int>& out) {
    out[v] = image;
    if (rs.radii[image] == 1) {
        colour_fill(t, g.edges[rs.target_edge], v, image, out);
        return;
    }
    const int wi = rs.witness_edge[image];
    if (wi < 0) throw std::logic_error("reach_fill: missing witness edge");
    std::vector<int> others;
    for (int y : g.edges[wi])
        if (y != image) others.push_back(y);
    for (int ei : t.child_edges(v)) {
        auto fresh = fresh_of(t, ei, v);
        for (std::size_t i = 0; i < fresh.size(); ++i)
            reach_fill(g, rs, t, fresh[i], others[i], out);
    }
}

// rotation extraction: assigns v's subtree so that colour class c lands on
// rooted[sigma[c]] from distance `level` below v onwards
void rotate_fill(const hypercore::Hypergraph& g, const RotationTable& table,
                 const loosetree::LooseTree& t, int v, int image, int level,
                 std::vector<int>& out) {
    const int k = t.k;
    const int s = t.colour[v] - 1;
    if (!table.at(level, image, s))
        throw std::logic_error("rotate_fill: table refutes this assignment");
    while (level > 0 && table.at(level - 1, image, s)) --level;
    out[v] = image;
    if (level == 0) {
        for (int ei : t.child_edges(v))
            for (int y : fresh_of(t, ei, v)) {
                int c = t.colour[y] - 1;
                rotate_fill(g, table, t, y,
                            table.rooted[table.sigma[c]], 0, out);
            }
        return;
    }
    // one witness edge through the image serves every child edge of v
    for (int gi : g.incidence[image]) {
        std::vector<int> others;
        for (int y : g.edges[gi])
            if (y != image) others.push_back(y);
        std::vector<int> idx(k - 1);
        for (int i = 0; i < k - 1; ++i) idx[i] = i;
        do {
            bool all = true;
            for (int p = 1; p <= k - 1 && all; ++p)
                all = table.at(level - 1, others[idx[p - 1]], (s + p) % k);
            if (all) {
                for (int ei : t.child_edges(v)) {
                    auto fresh = fresh_of(t, ei, v);
                    for (int p = 1; p <= k - 1; ++p)
                        rotate_fill(g, table, t, fresh[p - 1],
                                    others[idx[p - 1]], level - 1, out);
                }
                return;
            }
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    throw std::logic_error("rotate_fill: no witness edge despite the table");
}

}  // namespace

VertexMap reach_map(const hypercore::Hypergraph& g, const ReachabilitySet& rs,
                    const loosetree::LooseTree& t, int root_image) {
    if (t.k != g.k)
        throw std::invalid_argument("reach_map: uniformity mismatch");
    if (root_image < 0 || root_image >= g.n || rs.radii[root_image] < 0)
        throw std::invalid_argument(
            "reach_map: root image never reaches the target");
    VertexMap out;
    out.kind = VertexMap::Kind::homomorphism;
    out.image.assign(t.n, -1);
    reach_fill(g, rs, t, t.root, root_image, out.image);
    return out;
}

VertexMap rotation_map(const hypercore::Hypergraph& g,
                       const RotationTable& table,
                       const loosetree::LooseTree& t, int root_image,
                       int level) {
    if (t.k != g.k)
        throw std::invalid_argument("rotation_map: uniformity mismatch");
    VertexMap out;
    out.kind = VertexMap::Kind::homomorphism;
    out.image.assign(t.n, -1);
    rotate_fill(g, table, t, t.root, root_image, level, out.image);
    return out;
}

TreeEdgeMap tree_to_edge_map(const hypercore::Hypergraph& g,
                             const loosetree::LooseTree& t, int root_image,
                             const std::vector<int>& edge_order,
                             int reach_radius, int rotate_radius) {
    const int k = g.k;
    if (t.k != k)
        throw std::invalid_argument("tree_to_edge_map: uniformity mismatch");
    Edge sorted = edge_order;
    std::sort(sorted.begin(), sorted.end());
    const auto ei_opt = g.edge_index(sorted);
    if (!ei_opt)
        throw std::invalid_argument("tree_to_edge_map: target is not an edge");
    const int ei = *ei_opt;

    ReachabilitySet rs = reachability(g, ei);
    if (!rs.reachable_within(root_image, reach_radius))
        throw std::invalid_argument(
            "tree_to_edge_map: target not reachable from the root image "
            "within the budget");
    RotationTable table = rotation_table(g, edge_order, perm_id(k));

    const auto dist = tree_distances(t);
    const int switch_depth = reach_radius + 1;

    TreeEdgeMap result;
    result.map.kind = VertexMap::Kind::homomorphism;
    result.map.image.assign(t.n, -1);
    result.reach_radius = reach_radius;
    result.rotate_radius = rotate_radius;

    // reach phase down to the switch depth, rotation grafts below
    std::vector<std::pair<int, int>> grafts;  // (tree vertex, image)
    auto descend = [&](auto&& self, int v, int image) -> void {
        result.map.image[v] = image;
        if (dist[v] == switch_depth) {
            grafts.push_back({v, image});
            return;
        }
        if (rs.radii[image] == 1) {
            // already inside the target: keep colour-aligned images until
            // the switch depth, then let the grafts take over
            const Edge& target = g.edges[ei];
            auto pos = std::find(target.begin(), target.end(), image);
            const int shift =
                static_cast<int>(pos - target.begin()) - (t.colour[v] - 1);
            std::queue<int> q;
            q.push(v);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                result.map.image[x] =
                    target[(((t.colour[x] - 1 + shift) % k) + k) % k];
                if (dist[x] == switch_depth) {
                    grafts.push_back({x, result.map.image[x]});
                    continue;
                }
                for (int ce : t.child_edges(x))
                    for (int y : t.edges[ce])
                        if (y != x) q.push(y);
            }
            return;
        }
        const int wi = rs.witness_edge[image];
        if (wi < 0)
            throw std::logic_error("tree_to_edge_map: missing witness edge");
        std::vector<int> others;
        for (int y : g.edges[wi])
            if (y != image) others.push_back(y);
        for (int ce : t.child_edges(v)) {
            std::vector<int> fresh;
            for (int y : t.edges[ce])
                if (y != v) fresh.push_back(y);
            std::sort(fresh.begin(), fresh.end());
            for (std::size_t i = 0; i < fresh.size(); ++i)
                self(self, fresh[i], others[i]);
        }
    };
    descend(descend, t.root, root_image);

    for (const auto& [w, image] : grafts)
        rotate_fill(g, table, t, w, image, rotate_radius, result.map.image);

    result.exceptions.assign(k, 0);
    for (int v = 0; v < t.n; ++v)
        if (result.map.image[v] != edge_order[t.colour[v] - 1])
            ++result.exceptions[t.colour[v] - 1];
    result.bound = hypercore::BigInt(1);
    const int delta = t.max_vertex_degree();
    for (int i = 0; i < reach_radius + rotate_radius; ++i)
        result.bound *= k * delta;
    return result;
}

}  // namespace homomorphism
