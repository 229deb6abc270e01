#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "doctest.h"
#include "hypercore/hypergraph.hpp"
#include "loosetree/loosetree.hpp"

using namespace loosetree;
using hypercore::Edge;

namespace {

// independent distance oracle: BFS over "share an edge" adjacency
std::vector<int> brute_dist_from(const LooseTree& t, int src) {
    std::vector<std::vector<int>> adj(t.n);
    for (const auto& e : t.edges)
        for (int u : e)
            for (int v : e)
                if (u != v) adj[u].push_back(v);
    std::vector<int> dist(t.n, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

bool has_perfect_matching(const LooseTree& t) {
    const int m = t.edge_count();
    const int need = t.n / t.k;
    std::vector<int> pick;
    std::function<bool(int, unsigned long long)> rec =
        [&](int from, unsigned long long used) {
            if (static_cast<int>(pick.size()) == need) return true;
            for (int i = from; i < m; ++i) {
                unsigned long long mask = 0;
                for (int v : t.edges[i]) mask |= 1ull << v;
                if (mask & used) continue;
                pick.push_back(i);
                if (rec(i + 1, used | mask)) return true;
                pick.pop_back();
            }
            return false;
        };
    return rec(0, 0);
}

}  // namespace

TEST_CASE("iterated binary trees") {
    auto t0 = binary_tree(3, 0);
    CHECK(t0.n == 3);
    CHECK(t0.edge_count() == 1);
    CHECK(validate(t0).ok);

    auto t = binary_tree(3, 2);
    CHECK(t.n == 15);
    CHECK(t.edge_count() == 7);
    CHECK(t.max_vertex_degree() == 2);
    CHECK(t.leaves().size() == 8);
    CHECK(validate(t).ok);
    CHECK(has_perfect_matching(t));

    for (int k = 3; k <= 4; ++k)
        for (int r = 0; r <= 2; ++r) CHECK(validate(binary_tree(k, r)).ok);
}

TEST_CASE("construction order is enforced") {
    CHECK_THROWS(LooseTree::create(3, 5, 0, {{0, 1, 2}, {3, 4, 0}, {1, 3, 4}}));
    CHECK_THROWS(LooseTree::create(3, 5, 0, {{0, 1, 2}, {1, 2, 3}}));
    CHECK_THROWS(LooseTree::create(3, 7, 0, {{0, 1, 2}, {4, 5, 6}}));
    auto t = LooseTree::create(3, 5, 0, {{0, 1, 2}, {2, 3, 4}});
    CHECK(validate(t).ok);
    CHECK(t.top_vertex(1) == 2);
}

TEST_CASE("colours and layers follow the growth rule") {
    auto t = binary_tree(3, 1);
    CHECK(t.colour[t.root] == 1);
    CHECK(t.layer[t.root] == 1);
    // first edge 0,1,2: fresh vertices ascending get layers 2,3
    CHECK(t.layer[1] == 2);
    CHECK(t.colour[1] == 2);
    CHECK(t.layer[2] == 3);
    CHECK(t.colour[2] == 3);
    for (const auto& e : t.edges) {
        std::set<int> colours;
        for (int v : e) colours.insert(t.colour[v]);
        CHECK(colours.size() == static_cast<std::size_t>(t.k));
    }
    for (int v = 0; v < t.n; ++v)
        CHECK(t.colour[v] == ((t.layer[v] - 1) % t.k) + 1);
}

TEST_CASE("metric agrees with the BFS oracle") {
    for (auto t : {binary_tree(3, 2), binary_tree(4, 1),
                   random_tree(3, 13, 3, 21), random_tree(4, 13, 2, 22)}) {
        auto m = metric(t);
        for (int v = 0; v < t.n; ++v) {
            auto d = brute_dist_from(t, v);
            CHECK(m.vertex_vertex[v] == d);
            for (int ei = 0; ei < t.edge_count(); ++ei) {
                int best = t.n;
                for (int u : t.edges[ei]) best = std::min(best, d[u]);
                CHECK(m.vertex_edge[v][ei] == best);
            }
        }
        for (int a = 0; a < t.edge_count(); ++a)
            for (int b = 0; b < t.edge_count(); ++b) {
                if (a == b) {
                    CHECK(m.edge_edge[a][b] == 0);
                    continue;
                }
                int best = t.n;
                for (int u : t.edges[a])
                    for (int w : t.edges[b])
                        best = std::min(best, m.vertex_vertex[u][w]);
                CHECK(m.edge_edge[a][b] == best + 1);
            }
    }
}

TEST_CASE("subtrees relabel cleanly") {
    auto t = binary_tree(3, 2);
    int v = 1;  // layer-2 vertex with children
    auto sub = subtree(t, v);
    CHECK(validate(sub.tree).ok);
    CHECK(sub.orig[sub.tree.root] == v);
    CHECK(sub.tree.colour[sub.tree.root] == 1);
    CHECK(std::is_sorted(sub.orig.begin(), sub.orig.end()));
    // a leaf has no subtree
    CHECK_THROWS(subtree(t, t.leaves().front()));
}

TEST_CASE("colour classes and shifts") {
    auto t = random_tree(3, 11, 3, 5);
    auto classes = colour_classes(t);
    std::size_t total = 0;
    for (const auto& c : classes) total += c.size();
    CHECK(total == static_cast<std::size_t>(t.n));
    auto shifted = shift_classes(t, 1);
    for (int c = 1; c <= t.k; ++c)
        for (int v : shifted[c - 1]) {
            int expect = (t.colour[v] % t.k) + 1;  // tau once
            CHECK(expect == c);
        }
}

TEST_CASE("decomposition peels bounded pieces") {
    for (auto t : {binary_tree(3, 3), random_tree(3, 25, 3, 77),
                   random_tree(4, 22, 2, 78)}) {
        const int target = 4;
        auto dec = decompose(t, target);
        const int bound = 2 * t.k * dec.degree_bound * target;
        std::set<Edge> covered;
        for (std::size_t i = 0; i < dec.pieces.size(); ++i) {
            const auto& p = dec.pieces[i];
            CHECK(validate(p.tree).ok);
            if (dec.pieces.size() > 1) {
                CHECK(p.tree.n >= target);
                CHECK(p.tree.n <= bound);
            }
            if (i == 0) {
                CHECK(p.attach_piece == -1);
            } else {
                CHECK(p.attach_piece >= 0);
                CHECK(p.attach_piece < static_cast<int>(i));
                const auto& host = dec.pieces[p.attach_piece].orig;
                CHECK(std::find(host.begin(), host.end(), p.root_orig) != host.end());
            }
            for (const auto& e : p.tree.edges) {
                Edge orig_edge;
                for (int v : e) orig_edge.push_back(p.orig[v]);
                std::sort(orig_edge.begin(), orig_edge.end());
                CHECK(t.as_hypergraph().has_edge(orig_edge));
                covered.insert(orig_edge);
            }
        }
        // every source edge appears in exactly one piece
        std::size_t total_edges = 0;
        for (const auto& p : dec.pieces) total_edges += p.tree.edges.size();
        CHECK(total_edges == static_cast<std::size_t>(t.edge_count()));
        CHECK(covered.size() == static_cast<std::size_t>(t.edge_count()));

        auto one_piece = decompose(t, t.n + 1);
        CHECK(one_piece.pieces.size() == 1);
        CHECK(one_piece.pieces[0].tree.n == t.n);
    }
}

TEST_CASE("random trees respect their degree bound") {
    auto a = random_tree(3, 13, 2, 9);
    auto b = random_tree(3, 13, 2, 9);
    CHECK(a.edges == b.edges);
    CHECK(a.max_vertex_degree() <= 2);
    CHECK(validate(a).ok);
    CHECK_THROWS(random_tree(3, 6, 2, 1));   // 6 != 1 mod 2
    CHECK_THROWS(random_tree(3, 5, 1, 1));   // saturates immediately
}

TEST_CASE("tree serialization round trips") {
    auto t = random_tree(4, 16, 2, 3);
    auto txt = load_tree_text(save_tree_text(t));
    CHECK(txt.edges == t.edges);
    CHECK(txt.root == t.root);
    auto js = load_tree_json(save_tree_json(t));
    CHECK(js.edges == t.edges);
    CHECK(js.colour == t.colour);
    CHECK_THROWS(load_tree_text("3 5\n0 1 2\n2 3 4\n"));  // missing root
}
