#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "hypercore/fixtures.hpp"
#include "hypercore/hypergraph.hpp"
#include "hypercore/rational.hpp"

using namespace hypercore;

namespace {

// independent shadow: enumerate subsets of each edge by bitmask
std::vector<Edge> brute_shadow(const Hypergraph& g, int j) {
    std::set<Edge> out;
    for (const auto& e : g.edges) {
        for (unsigned mask = 0; mask < (1u << g.k); ++mask) {
            if (__builtin_popcount(mask) != j) continue;
            Edge sub;
            for (int i = 0; i < g.k; ++i)
                if (mask & (1u << i)) sub.push_back(e[i]);
            out.insert(sub);
        }
    }
    return {out.begin(), out.end()};
}

// independent tight components: union-find over pairs sharing k-1 vertices
std::vector<std::vector<int>> brute_tight_components(const Hypergraph& g) {
    const int m = static_cast<int>(g.edges.size());
    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Edge common;
            std::set_intersection(g.edges[i].begin(), g.edges[i].end(),
                                  g.edges[j].begin(), g.edges[j].end(),
                                  std::back_inserter(common));
            if (static_cast<int>(common.size()) == g.k - 1)
                parent[find(i)] = find(j);
        }
    std::map<int, std::vector<int>> buckets;
    for (int i = 0; i < m; ++i) buckets[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : buckets) out.push_back(members);
    std::sort(out.begin(), out.end());
    return out;
}

long long brute_degree(const Hypergraph& g, const Edge& s) {
    long long count = 0;
    for (const auto& e : g.edges)
        if (std::includes(e.begin(), e.end(), s.begin(), s.end())) ++count;
    return count;
}

}  // namespace

TEST_CASE("binomials and rationals") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(14, 2) == 91);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(7, 9) == 0);
    CHECK(rat_string(rat(6, 36)) == "1/6");
    CHECK(rat_string(rat(4, 2)) == "2");
    CHECK(rat_parse("15/91") == rat(15, 91));
    CHECK(rat_parse("3") == rat(3));
}

TEST_CASE("edge normalisation and incidence") {
    auto g = Hypergraph::create(3, 6, {{2, 1, 0}, {0, 1, 2}, {3, 4, 5}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges[0] == Edge{0, 1, 2});
    CHECK(g.has_edge({3, 4, 5}));
    CHECK(!g.has_edge({0, 1, 3}));
    CHECK(g.vertex_degree(0) == 1);
    CHECK(g.edge_index(Edge{3, 4, 5}).value() == 1);
    CHECK(!g.edge_index(Edge{0, 1, 4}).has_value());
    CHECK_THROWS(Hypergraph::create(3, 6, {{0, 1, 1}}));
    CHECK_THROWS(Hypergraph::create(3, 6, {{0, 1, 6}}));
}

TEST_CASE("shadows, frozen and cross-checked") {
    auto g = Hypergraph::create(3, 6, {{0, 1, 2}, {3, 4, 5}});
    auto s2 = shadow(g, 2);
    CHECK(s2.k == 2);
    CHECK(s2.edge_count() == 6);  // three pairs inside each edge

    auto s0 = shadow(g, 0);
    CHECK(s0.edge_count() == 1);
    CHECK(s0.edges[0].empty());
    CHECK(shadow(g, 3).edges == g.edges);

    for (int k = 3; k <= 5; ++k) {
        auto r = fixtures::random_graph(k, 9, rat(1, 3), 100 + k);
        for (int j = 0; j <= k; ++j) {
            auto fast = shadow(r, j);
            CHECK(fast.edges == brute_shadow(r, j));
        }
    }
}

TEST_CASE("links keep the full vertex set") {
    auto g = fixtures::complete(3, 6);
    auto l = link(g, {0});
    CHECK(l.k == 2);
    CHECK(l.n == 6);
    CHECK(l.edge_count() == 10);  // all pairs of the other five vertices
    CHECK(l.is_isolated(0));
    auto l2 = link(g, {0, 1});
    CHECK(l2.k == 1);
    CHECK(l2.edge_count() == 4);

    auto r = fixtures::random_graph(4, 9, rat(1, 2), 7);
    auto lr = link(r, {2, 5});
    const Edge key{2, 5};
    std::set<Edge> expect;
    for (const auto& e : r.edges) {
        if (!std::includes(e.begin(), e.end(), key.begin(), key.end()))
            continue;
        Edge rest;
        for (int v : e)
            if (v != 2 && v != 5) rest.push_back(v);
        expect.insert(rest);
    }
    CHECK(lr.edges == std::vector<Edge>(expect.begin(), expect.end()));
}

TEST_CASE("degrees on the split fixtures") {
    // 5+5 disjoint cliques: minimum vertex degree 6, relative 1/6
    auto g = fixtures::two_cliques(3, 5, 5);
    auto d = min_degree(g, 1);
    CHECK(d.count == 6);
    CHECK(d.relative == rat(6, 36));

    // two disjoint complete 4-graphs on 8 vertices: every within-clique
    // pair has codegree 15, every crossing pair codegree 0
    auto h = fixtures::two_cliques(4, 8, 8);
    auto inside = degree(h, {0, 1});
    CHECK(inside.count == 15);
    CHECK(inside.relative == rat(15, 91));
    CHECK(min_degree(h, 2).count == 0);
    CHECK(min_degree(h, 2).subset == Edge{0, 8});

    // every within-clique pair fails the half threshold
    auto verdict = verify_perturbed_degree(h, 2, rat(1, 100), rat(1, 2));
    CHECK(!verdict.holds);
    bool p1 = false;
    for (const auto& v : verdict.violations) p1 = p1 || v.condition == "P1";
    CHECK(p1);

    auto rep = degree(h, {0, 1});
    CHECK(rep.count == brute_degree(h, {0, 1}));
    CHECK(degree(h, {0, 8}).count == 0);
}

TEST_CASE("perturbed degree holds on complete graphs") {
    auto g = fixtures::complete(3, 8);
    auto verdict = verify_perturbed_degree(g, 2, rat(1, 10), rat(1, 2));
    CHECK(verdict.holds);
    CHECK(verdict.violations.empty());
}

TEST_CASE("tight components split the parity fixture") {
    auto g = fixtures::parity();
    CHECK(g.edge_count() == 38);
    auto comps = tight_components(g);
    std::vector<std::size_t> sizes;
    for (const auto& c : comps) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 1, 36});
    CHECK(comps == brute_tight_components(g));

    for (int s = 0; s < 3; ++s) {
        auto r = fixtures::random_graph(3, 9, rat(1, 4 + s), 55 + s);
        if (r.edge_count() == 0) continue;
        CHECK(tight_components(r) == brute_tight_components(r));
    }
}

TEST_CASE("tight walks stay inside components") {
    auto g = fixtures::parity();
    const int a = *g.edge_index(Edge{0, 1, 4, 5});
    const int b = *g.edge_index(Edge{2, 3, 6, 7});
    const int whole_second = *g.edge_index(Edge{4, 5, 6, 7});
    auto walk = tight_walk(g, a, b);
    REQUIRE(walk.has_value());
    CHECK(walk->front() == a);
    CHECK(walk->back() == b);
    for (std::size_t i = 0; i + 1 < walk->size(); ++i) {
        Edge common;
        std::set_intersection(g.edges[(*walk)[i]].begin(), g.edges[(*walk)[i]].end(),
                              g.edges[(*walk)[i + 1]].begin(), g.edges[(*walk)[i + 1]].end(),
                              std::back_inserter(common));
        CHECK(common.size() == 3);
    }
    CHECK(!tight_walk(g, a, whole_second).has_value());
    auto self_walk = tight_walk(g, a, a);
    REQUIRE(self_walk.has_value());
    CHECK(self_walk->size() == 1);
}

TEST_CASE("random graphs are deterministic in the seed") {
    auto a = fixtures::random_graph(3, 8, rat(1, 2), 42);
    auto b = fixtures::random_graph(3, 8, rat(1, 2), 42);
    CHECK(a.edges == b.edges);
    CHECK(fixtures::random_graph(3, 7, rat(1), 1).edge_count() == binomial(7, 3));
    CHECK(fixtures::random_graph(3, 7, rat(0), 1).edge_count() == 0);

    auto dense = fixtures::random_min_degree(3, 9, 1, rat(1, 2), 5);
    CHECK(min_degree(dense, 1).relative >= rat(1, 2));
}

TEST_CASE("subset enumeration is lexicographic") {
    std::vector<Edge> subs;
    for_each_subset(5, 2, [&](const Edge& s) { subs.push_back(s); });
    CHECK(subs.size() == 10);
    CHECK(subs.front() == Edge{0, 1});
    CHECK(subs.back() == Edge{3, 4});
    CHECK(std::is_sorted(subs.begin(), subs.end()));
}

TEST_CASE("serialization round trips") {
    auto g = fixtures::random_graph(4, 9, rat(2, 5), 9);
    auto t = load_graph_text(save_graph_text(g));
    CHECK(t.k == g.k);
    CHECK(t.n == g.n);
    CHECK(t.edges == g.edges);
    auto j = load_graph_json(save_graph_json(g));
    CHECK(j.edges == g.edges);
    CHECK(j.n == g.n);
    CHECK_THROWS(load_graph_text("3\n0 1 2\n"));
    CHECK_THROWS(load_graph_text("1 5\n0\n"));
}
