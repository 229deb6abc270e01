#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "hypercore/fixtures.hpp"
#include "hypercore/hypergraph.hpp"
#include "matching/blossom.hpp"
#include "matching/chain.hpp"
#include "matching/fractional.hpp"
#include "matching/simplex.hpp"
#include "matching/structure.hpp"

using namespace hypercore;
using namespace hypercore::fixtures;
using namespace matching;

namespace {

// exact Gaussian elimination; nullopt when the system is singular
std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> a,
                                             std::vector<Rat> b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rat f = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rat> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = b[i] / a[i][i];
    return x;
}

// independent LP optimum: enumerate every choice of vars-many tight
// constraints (rows or nonnegativity bounds), solve the square system, and
// keep the best feasible corner. Valid because an optimum of a bounded
// feasible LP sits at a vertex of the polytope.
Rat brute_lp_value(const LinearProgram& lp) {
    const int n = lp.vars;
    const int m = static_cast<int>(lp.rows.size());
    const int total = n + m;
    std::optional<Rat> best;

    std::vector<int> comb(static_cast<std::size_t>(n));
    std::iota(comb.begin(), comb.end(), 0);
    for (;;) {
        std::vector<std::vector<Rat>> a;
        std::vector<Rat> b;
        for (int c : comb) {
            if (c < m) {
                a.push_back(lp.rows[static_cast<std::size_t>(c)]);
                b.push_back(lp.rhs[static_cast<std::size_t>(c)]);
            } else {
                std::vector<Rat> unit(static_cast<std::size_t>(n), Rat(0));
                unit[static_cast<std::size_t>(c - m)] = 1;
                a.push_back(std::move(unit));
                b.push_back(0);
            }
        }
        if (auto x = solve_square(std::move(a), std::move(b))) {
            bool feasible = true;
            for (int j = 0; j < n && feasible; ++j)
                if ((*x)[static_cast<std::size_t>(j)] < 0) feasible = false;
            for (int i = 0; i < m && feasible; ++i) {
                Rat lhs = 0;
                for (int j = 0; j < n; ++j)
                    lhs += lp.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                           (*x)[static_cast<std::size_t>(j)];
                if (lhs > lp.rhs[static_cast<std::size_t>(i)]) feasible = false;
            }
            if (feasible) {
                Rat value = 0;
                for (int j = 0; j < n; ++j)
                    value += lp.objective[static_cast<std::size_t>(j)] *
                             (*x)[static_cast<std::size_t>(j)];
                if (!best || value > *best) best = value;
            }
        }
        // next n-combination of [total]
        int i = n - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == total - n + i) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int t = i + 1; t < n; ++t)
            comb[static_cast<std::size_t>(t)] = comb[static_cast<std::size_t>(t - 1)] + 1;
    }
    REQUIRE(best.has_value());
    return *best;
}

// independent fractional matching number for unit weights on a 2-graph:
// some optimum is half-integral, so scanning x_e over {0, 1/2, 1} in
// doubled integer units is exhaustive.
Rat brute_half_integral(const Hypergraph& g2) {
    const int m = static_cast<int>(g2.edges.size());
    REQUIRE(m <= 12);
    long long best = 0;
    std::vector<int> digit(static_cast<std::size_t>(m), 0);
    for (;;) {
        std::vector<int> load(static_cast<std::size_t>(g2.n), 0);
        bool feasible = true;
        long long sum = 0;
        for (int e = 0; e < m && feasible; ++e) {
            sum += digit[static_cast<std::size_t>(e)];
            for (int v : g2.edges[static_cast<std::size_t>(e)]) {
                load[static_cast<std::size_t>(v)] += digit[static_cast<std::size_t>(e)];
                if (load[static_cast<std::size_t>(v)] > 2) feasible = false;
            }
        }
        if (feasible) best = std::max(best, sum);
        int i = 0;
        while (i < m && digit[static_cast<std::size_t>(i)] == 2) digit[static_cast<std::size_t>(i++)] = 0;
        if (i == m) break;
        ++digit[static_cast<std::size_t>(i)];
    }
    return Rat(best, 2);
}

// independent maximum matching: branch on the smallest unresolved vertex
int brute_max_matching(const Hypergraph& g2) {
    REQUIRE(g2.n <= 16);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g2.n));
    for (const auto& e : g2.edges) {
        adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
        adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
    std::function<int(unsigned)> rec = [&](unsigned used) -> int {
        int v = -1;
        for (int i = 0; i < g2.n; ++i)
            if (!(used >> i & 1u)) {
                v = i;
                break;
            }
        if (v < 0) return 0;
        int best = rec(used | (1u << v));
        for (int u : adj[static_cast<std::size_t>(v)])
            if (!(used >> u & 1u))
                best = std::max(best, 1 + rec(used | (1u << v) | (1u << u)));
        return best;
    };
    return rec(0);
}

bool valid_pairs(const Hypergraph& g2, const std::vector<std::pair<int, int>>& pairs) {
    std::set<int> seen;
    for (const auto& [a, b] : pairs) {
        if (!g2.has_edge({a, b})) return false;
        if (!seen.insert(a).second || !seen.insert(b).second) return false;
    }
    return true;
}

LinearProgram random_packing_lp(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> vars_d(1, 3), rows_d(1, 4), coef_d(0, 3), rhs_d(0, 5),
        obj_d(0, 3);
    LinearProgram lp;
    lp.vars = vars_d(rng);
    const int m = rows_d(rng);
    for (int i = 0; i < m; ++i) {
        std::vector<Rat> row;
        for (int j = 0; j < lp.vars; ++j) row.emplace_back(coef_d(rng));
        lp.rows.push_back(std::move(row));
        lp.rhs.emplace_back(rhs_d(rng));
    }
    // dedicated cap per variable keeps every instance bounded
    for (int j = 0; j < lp.vars; ++j) {
        std::vector<Rat> row(static_cast<std::size_t>(lp.vars), Rat(0));
        row[static_cast<std::size_t>(j)] = 1;
        lp.rows.push_back(std::move(row));
        lp.rhs.emplace_back(4);
    }
    for (int j = 0; j < lp.vars; ++j) lp.objective.emplace_back(obj_d(rng));
    return lp;
}

Hypergraph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});            // outer cycle
        edges.push_back({5 + i, 5 + (i + 2) % 5});    // inner pentagram
        edges.push_back({i, i + 5});                  // spokes
    }
    return Hypergraph::create(2, 10, std::move(edges));
}

} // namespace

TEST_CASE("exact simplex agrees with corner enumeration and rejects bad input") {
    LinearProgram lp;
    lp.vars = 2;
    lp.rows = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
    lp.rhs = {Rat(1), Rat(2), Rat(5, 2)};
    lp.objective = {Rat(1), Rat(1)};
    const LinearSolution sol = solve_exact(lp);
    CHECK(sol.value == Rat(5, 2));
    CHECK(sol.primal[0] + sol.primal[1] == Rat(5, 2));

    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const LinearProgram random_lp = random_packing_lp(rng);
        CHECK(solve_exact(random_lp).value == brute_lp_value(random_lp));
    }

    LinearProgram unbounded;
    unbounded.vars = 1;
    unbounded.objective = {Rat(1)};
    CHECK_THROWS_AS(solve_exact(unbounded), std::logic_error);
    unbounded.rows = {{Rat(0)}};
    unbounded.rhs = {Rat(1)};
    CHECK_THROWS_AS(solve_exact(unbounded), std::logic_error);

    LinearProgram bad;
    bad.vars = 1;
    bad.objective = {Rat(1)};
    bad.rows = {{Rat(1)}};
    bad.rhs = {Rat(-1)};
    CHECK_THROWS_AS(solve_exact(bad), std::invalid_argument);
}

TEST_CASE("fractional matching optima on pinned instances") {
    const auto one_edge = Hypergraph::create(3, 3, {{0, 1, 2}});
    const auto m1 = max_fractional_matching(one_edge, uniform_weights(3));
    CHECK(m1.size == Rat(1));
    CHECK(m1.perfect);

    const auto overlapping = Hypergraph::create(3, 5, {{0, 1, 2}, {2, 3, 4}});
    const auto m2 = max_fractional_matching(overlapping, uniform_weights(5));
    CHECK(m2.size == Rat(1));
    CHECK_FALSE(m2.perfect); // 5/3 would be needed

    const auto k6 = complete(3, 6);
    const auto m3 = max_fractional_matching(k6, uniform_weights(6));
    CHECK(m3.size == Rat(2));
    CHECK(m3.perfect);
    // the dual is a fractional vertex cover of matching size
    for (const auto& e : k6.edges) {
        Rat covered = 0;
        for (int v : e) covered += m3.dual[static_cast<std::size_t>(v)];
        CHECK(covered >= 1);
    }

    const auto k7 = complete(3, 7);
    const auto m4 = max_fractional_matching(k7, uniform_weights(7));
    CHECK(m4.size == Rat(7, 3));
    CHECK(m4.perfect);

    // zeroing one vertex reduces the complete graph to one vertex fewer
    std::vector<Rat> weights = uniform_weights(6);
    weights[0] = 0;
    const auto m5 = max_fractional_matching(k6, weights);
    CHECK(m5.size == Rat(5, 3));
    CHECK(m5.perfect);

    // determinism: identical reruns give identical weight vectors
    const auto rerun = max_fractional_matching(k6, uniform_weights(6));
    CHECK(rerun.weights == m3.weights);
    CHECK(rerun.size == m3.size);
}

TEST_CASE("fractional matching values match the half-integral scan on 2-graphs") {
    std::mt19937_64 rng(77);
    int tested = 0;
    for (unsigned seed = 1; tested < 4 && seed < 40; ++seed) {
        const Hypergraph g = random_graph(2, 6, Rat(1, 2), seed);
        if (g.edges.empty() || g.edges.size() > 12) continue;
        ++tested;
        const auto fm = max_fractional_matching(g, uniform_weights(6));
        CHECK(fm.size == brute_half_integral(g));
    }
    CHECK(tested == 4);

    const auto c5 = Hypergraph::create(2, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    const auto fm = max_fractional_matching(c5, uniform_weights(5));
    CHECK(fm.size == Rat(5, 2)); // half on every cycle edge
    CHECK(fm.size == brute_half_integral(c5));
    (void)rng;
}

TEST_CASE("matching validity checks reject malformed weightings") {
    const auto k6 = complete(3, 6);
    std::vector<Rat> good(k6.edges.size(), Rat(0));
    good[0] = Rat(1, 2);
    CHECK(is_fractional_matching(k6, uniform_weights(6), good));
    std::vector<Rat> negative = good;
    negative[0] = Rat(-1, 2);
    CHECK_FALSE(is_fractional_matching(k6, uniform_weights(6), negative));
    std::vector<Rat> heavy(k6.edges.size(), Rat(1, 2));
    CHECK_FALSE(is_fractional_matching(k6, uniform_weights(6), heavy));
    CHECK_FALSE(is_fractional_matching(k6, uniform_weights(6), {Rat(1)}));
}

TEST_CASE("link lift realises per-link guarantees and flags failures") {
    const auto k6 = complete(3, 6);
    const auto lifted = link_lift(k6, uniform_weights(6), Rat(2));
    CHECK(lifted.hypothesis);
    CHECK(lifted.conclusion);
    CHECK(lifted.consistent);
    CHECK(lifted.failing.empty());
    CHECK(lifted.realised.size == Rat(2));

    // every edge through one hub: links of the other vertices are stars,
    // whose fractional matchings stop at one
    std::vector<Edge> star_edges;
    for (int a = 1; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b) star_edges.push_back({0, a, b});
    const auto star = Hypergraph::create(3, 7, std::move(star_edges));
    const auto failed = link_lift(star, uniform_weights(7), Rat(2));
    CHECK_FALSE(failed.hypothesis);
    CHECK(failed.failing == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK_FALSE(failed.conclusion); // the hub caps everything at one
    CHECK(failed.consistent);
    CHECK(failed.realised.size == Rat(1));

    const auto trivial = link_lift(k6, uniform_weights(6), Rat(0));
    CHECK(trivial.hypothesis);
    CHECK(trivial.conclusion);
}

TEST_CASE("blossom matching equals exhaustive search") {
    // structures with odd cycles, the classic blossom traps
    const auto c5 = Hypergraph::create(2, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(max_matching(c5).size() == 2);
    CHECK(max_matching(petersen()).size() == 5); // perfect
    const auto two_triangles =
        Hypergraph::create(2, 7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    CHECK(max_matching(two_triangles).size() == 3);

    std::mt19937_64 rng(501);
    std::uniform_int_distribution<int> n_d(4, 12);
    const Rat probs[3] = {Rat(1, 5), Rat(1, 2), Rat(4, 5)};
    for (int trial = 0; trial < 60; ++trial) {
        const int n = n_d(rng);
        const Hypergraph g = random_graph(2, n, probs[trial % 3], 9000 + trial);
        const auto pairs = max_matching(g);
        CHECK(valid_pairs(g, pairs));
        CHECK(static_cast<int>(pairs.size()) == brute_max_matching(g));
    }
}

TEST_CASE("fractional and integral matchings agree on bipartite graphs") {
    std::mt19937_64 rng(913);
    std::uniform_int_distribution<int> side(2, 6);
    std::uniform_int_distribution<int> roll(0, 99);
    for (int trial = 0; trial < 20; ++trial) {
        const int left = side(rng), right = side(rng);
        std::vector<Edge> edges;
        for (int a = 0; a < left; ++a)
            for (int b = 0; b < right; ++b)
                if (roll(rng) < 55) edges.push_back({a, left + b});
        const auto g = Hypergraph::create(2, left + right, std::move(edges));
        const auto integral = max_matching(g);
        const auto fractional = max_fractional_matching(g, uniform_weights(g.n));
        CHECK(fractional.size == Rat(static_cast<long long>(integral.size())));
    }

    // odd cycles push the fractional value strictly above the integral one,
    // but never beyond half again as much
    const auto c5 = Hypergraph::create(2, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    const Rat integral(static_cast<long long>(max_matching(c5).size()));
    const Rat fractional = max_fractional_matching(c5, uniform_weights(5)).size;
    CHECK(integral < fractional);
    CHECK(fractional <= integral * Rat(3, 2));
}

TEST_CASE("edge counts above the threshold force large matchings") {
    const auto k9 = complete(2, 9);
    const auto rep = ergallai_matching(k9, 4);
    CHECK(rep.size == 4);
    CHECK(rep.reached);

    // clique on 2s-1 vertices: meets the first branch with equality, so the
    // forcing hypothesis just fails, and its matching stops at s-1
    const auto tight = ergallai_matching(complete(2, 9), 5);
    CHECK(tight.threshold == BigInt(36));
    CHECK_FALSE(tight.forced);
    CHECK(tight.size == 4);

    // cover construction: s-1 hub vertices meeting every edge
    std::vector<Edge> cover_edges;
    for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) cover_edges.push_back({a, b});
        for (int b = 3; b < 12; ++b) cover_edges.push_back({a, b});
    }
    const auto cover = Hypergraph::create(2, 12, std::move(cover_edges));
    const auto cover_rep = ergallai_matching(cover, 4);
    CHECK(BigInt(cover.edge_count()) == cover_rep.threshold);
    CHECK_FALSE(cover_rep.forced);
    CHECK(cover_rep.size == 3);

    const auto dense = random_graph(2, 30, Rat(7, 10), 424242);
    const auto dense_rep = ergallai_matching(dense, 10);
    CHECK(dense_rep.forced);
    CHECK(dense_rep.reached);

    // implication audited across random instances and all small targets
    for (unsigned seed = 60; seed < 75; ++seed) {
        const Hypergraph g = random_graph(2, 12, Rat(1, 2), seed);
        for (long long s = 1; s <= 6; ++s) CHECK_NOTHROW(ergallai_matching(g, s));
    }
}

TEST_CASE("dense 2-graphs have a giant component with matching and triangle") {
    const auto k20 = complete(2, 20);
    const auto rep = structure_single(k20, Rat(1, 10));
    CHECK(rep.dense_enough);
    CHECK(rep.component.vertices.size() == 20);
    CHECK(rep.m1_vertices);
    CHECK(rep.m1_edges);
    CHECK(rep.m1_quarter);
    CHECK(rep.matching_size == 10);
    CHECK(rep.m2());
    CHECK(rep.m3);
    CHECK(rep.ok());

    // two disjoint cliques on ten vertices: the density hypothesis fails
    // and the giant-component predicate fails with it, without throwing
    std::vector<Edge> split_edges;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) {
            split_edges.push_back({a, b});
            split_edges.push_back({a + 5, b + 5});
        }
    const auto split = Hypergraph::create(2, 10, std::move(split_edges));
    const auto split_rep = structure_single(split, Rat(1, 10));
    CHECK_FALSE(split_rep.dense_enough);
    CHECK_FALSE(split_rep.m1_vertices);
    CHECK_FALSE(split_rep.ok());
    CHECK(split_rep.component.vertices == std::vector<int>{0, 1, 2, 3, 4});

    for (unsigned seed = 0; seed < 3; ++seed) {
        const auto g1 = random_graph(2, 40, Rat(7, 10), 100 + seed);
        const auto g2 = random_graph(2, 40, Rat(7, 10), 200 + seed);
        const auto g3 = random_graph(2, 40, Rat(7, 10), 300 + seed);
        const auto triple = structure_checks(g1, g2, g3, Rat(1, 10));
        for (const auto& gr : triple.graphs) {
            CHECK(gr.dense_enough);
            CHECK(gr.ok());
        }
        CHECK(triple.m4);
        CHECK(triple.share_first >= 0);
        // the recorded witness edge really lies in both components' graphs
        const Hypergraph* picks[3] = {&g1, &g2, &g3};
        CHECK(picks[triple.share_first]->has_edge(triple.shared_edge));
        CHECK(picks[triple.share_second]->has_edge(triple.shared_edge));
    }

    // disjoint largest components on a shared vertex set: no pair shares
    std::vector<Edge> a_edges, b_edges, c_edges;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) {
            a_edges.push_back({a, b});
            b_edges.push_back({a + 5, b + 5});
        }
    c_edges = {{0, 7}, {0, 8}, {1, 7}, {1, 8}};
    const auto sparse_triple = structure_checks(Hypergraph::create(2, 10, a_edges),
                                                Hypergraph::create(2, 10, b_edges),
                                                Hypergraph::create(2, 10, c_edges), Rat(1, 10));
    CHECK_FALSE(sparse_triple.m4);
    CHECK_FALSE(sparse_triple.ok());
}

TEST_CASE("majorization pushes convex sums upward") {
    const std::vector<Rat> flat{Rat(1), Rat(1), Rat(1), Rat(1)};
    const std::vector<Rat> spiked{Rat(4), Rat(0), Rat(0), Rat(0)};
    CHECK(majorizes(spiked, flat));
    CHECK_FALSE(majorizes(flat, spiked));
    CHECK(majorizes(flat, flat));
    CHECK_FALSE(majorizes({Rat(2), Rat(2)}, {Rat(3), Rat(1)}));
    CHECK_FALSE(majorizes({Rat(2)}, {Rat(1), Rat(1)}));
    CHECK_FALSE(majorizes({Rat(3), Rat(0)}, {Rat(1), Rat(1)})); // totals differ

    const auto square = [](const Rat& x) { return x * x; };
    const auto pairs = [](const Rat& x) { return x * (x - 1) / 2; };
    CHECK(karamata_holds(spiked, flat, square));
    CHECK(karamata_holds(spiked, flat, pairs));
    CHECK(karamata_holds(flat, flat, square));

    std::mt19937_64 rng(321);
    std::uniform_int_distribution<int> len(2, 8), val(0, 9);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = len(rng);
        std::vector<Rat> a;
        for (int i = 0; i < n; ++i) a.emplace_back(val(rng));
        // Robin Hood transfers spread the sequence while preserving its
        // total, so the original majorizes the result
        std::vector<Rat> b = a;
        for (int step = 0; step < 6; ++step) {
            auto hi = std::max_element(b.begin(), b.end());
            auto lo = std::min_element(b.begin(), b.end());
            if (*hi == *lo) break;
            *hi -= Rat(1, 2);
            *lo += Rat(1, 2);
        }
        CHECK(majorizes(a, b));
        CHECK(karamata_holds(a, b, square));
        CHECK(karamata_holds(a, b, pairs));
    }
}

TEST_CASE("lightest-vertex weighting turns integral matchings fractional") {
    const auto k6 = complete(3, 6);
    const auto perfect = matching_to_fractional(k6, {{0, 1, 2}, {3, 4, 5}}, uniform_weights(6));
    CHECK(perfect.size == Rat(2));
    CHECK(perfect.perfect);

    std::vector<Rat> weights = uniform_weights(6);
    weights[0] = Rat(1, 2);
    const auto lighter = matching_to_fractional(k6, {{0, 1, 2}, {3, 4, 5}}, weights);
    CHECK(lighter.size == Rat(3, 2));
    CHECK_FALSE(lighter.perfect);

    CHECK_THROWS_AS(matching_to_fractional(k6, {{0, 1, 2}, {2, 3, 4}}, uniform_weights(6)),
                    std::invalid_argument);
    CHECK_THROWS_AS(matching_to_fractional(Hypergraph::create(3, 6, {{0, 1, 2}}),
                                           {{3, 4, 5}}, uniform_weights(6)),
                    std::invalid_argument);
}

TEST_CASE("dense components yield quarter-size fractional matchings") {
    const auto dense = random_graph(2, 20, Rat(7, 10), 5150);
    std::vector<Rat> weights = uniform_weights(20);
    weights[3] = Rat(99, 100);
    weights[11] = Rat(99, 100);
    const auto rep = quarter_matching(dense, weights, Rat(1, 10), Rat(1, 60));
    CHECK(rep.dense_enough);
    CHECK(rep.weight_ok);
    CHECK(rep.slack_ok);
    CHECK(rep.in_hypothesis);
    CHECK(rep.fractional.size >= Rat(5)); // n/4
    CHECK(rep.ok);

    // sparse input: out of hypothesis, processed without complaint
    const auto sparse = Hypergraph::create(2, 8, {{0, 1}, {2, 3}});
    const auto vacuous = quarter_matching(sparse, uniform_weights(8), Rat(1, 10), Rat(1, 60));
    CHECK_FALSE(vacuous.in_hypothesis);
    CHECK(vacuous.ok);
    // the construction works inside the largest component only
    CHECK(vacuous.integral.size() == 1);
}

TEST_CASE("the link-by-link induction certifies perfect matchings on complete graphs") {
    const auto k3 = complete(3, 7);
    const auto rep3 = matching_chain(k3, k3, uniform_weights(7), Rat(1, 10), Rat(1, 10));
    CHECK(rep3.weights_admissible);
    CHECK(rep3.budget_ok);
    CHECK(rep3.required == Rat(7, 3));
    REQUIRE(rep3.levels.size() == 2);
    CHECK(rep3.levels[0].j == 1);
    CHECK(rep3.levels[0].sets == 7);
    CHECK(rep3.levels[0].worst_size == Rat(3)); // each link is a complete 2-graph on six
    CHECK(rep3.levels[0].ok);
    CHECK(rep3.levels[1].j == 0);
    CHECK(rep3.levels[1].sets == 1);
    CHECK(rep3.top.size == Rat(7, 3));
    CHECK(rep3.perfect);
    CHECK(rep3.ok);

    const auto k4 = complete(4, 8);
    const auto rep4 = matching_chain(k4, k4, uniform_weights(8), Rat(1, 10), Rat(1, 10));
    REQUIRE(rep4.levels.size() == 3);
    CHECK(rep4.levels[0].j == 2);
    CHECK(rep4.levels[0].sets == 28);
    CHECK(rep4.levels[0].max_isolated == 0);
    CHECK(rep4.levels[1].sets == 8);
    CHECK(rep4.top.size == Rat(2));
    CHECK(rep4.perfect);
    CHECK(rep4.ok);
}

TEST_CASE("the induction reports link shortfalls even when the top value is perfect") {
    const auto pair = Hypergraph::create(3, 7, {{0, 1, 2}, {3, 4, 5}});

    // a weighted isolated vertex is inadmissible
    const auto bad = matching_chain(pair, pair, uniform_weights(7), Rat(1, 10), Rat(1, 7));
    CHECK_FALSE(bad.weights_admissible);
    CHECK_FALSE(bad.ok);

    std::vector<Rat> weights = uniform_weights(7);
    weights[6] = 0;
    const auto rep = matching_chain(pair, pair, weights, Rat(1, 10), Rat(1, 7));
    CHECK(rep.weights_admissible);
    CHECK(rep.budget_ok);
    CHECK(rep.required == Rat(2));
    REQUIRE(rep.levels.size() == 2);
    // each vertex link holds a single 2-edge, far below the required two,
    // and leaves four vertices isolated against a budget of 7/10
    CHECK(rep.levels[0].worst_size == Rat(1));
    CHECK(rep.levels[0].worst_set == Edge{0});
    CHECK_FALSE(rep.levels[0].isolated_bounded);
    CHECK(rep.levels[0].violations.size() == 6);
    CHECK_FALSE(rep.levels[0].ok);
    // the graph itself still has a perfect matching: the chain is a
    // sufficient route to perfection, not a necessary one
    CHECK(rep.top.size == Rat(2));
    CHECK(rep.perfect);
    CHECK_FALSE(rep.ok);
}
