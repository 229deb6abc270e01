#include "matching/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "matching/blossom.hpp"

namespace matching {

using hypercore::Edge;
using hypercore::Hypergraph;
using hypercore::Rat;

namespace {

int find_root(std::vector<int>& up, int v) {
    while (up[static_cast<std::size_t>(v)] != v) {
        up[static_cast<std::size_t>(v)] = up[static_cast<std::size_t>(up[static_cast<std::size_t>(v)])];
        v = up[static_cast<std::size_t>(v)];
    }
    return v;
}

Hypergraph induced_2graph(const Hypergraph& g2, const std::vector<int>& within) {
    std::vector<char> inside(static_cast<std::size_t>(g2.n), 0);
    for (int v : within) inside[static_cast<std::size_t>(v)] = 1;
    std::vector<Edge> edges;
    for (const Edge& e : g2.edges)
        if (inside[static_cast<std::size_t>(e[0])] && inside[static_cast<std::size_t>(e[1])])
            edges.push_back(e);
    return Hypergraph::create(2, g2.n, std::move(edges));
}

} // namespace

std::vector<ComponentInfo> components(const Hypergraph& g2) {
    if (g2.k != 2) throw std::invalid_argument("components: expected a 2-graph");
    std::vector<int> up(static_cast<std::size_t>(g2.n));
    std::iota(up.begin(), up.end(), 0);
    for (const Edge& e : g2.edges) {
        const int a = find_root(up, e[0]);
        const int b = find_root(up, e[1]);
        if (a != b) up[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::map<int, ComponentInfo> buckets;
    for (int v = 0; v < g2.n; ++v)
        buckets[find_root(up, v)].vertices.push_back(v);
    for (const Edge& e : g2.edges) buckets[find_root(up, e[0])].edge_count += 1;

    std::vector<ComponentInfo> out;
    out.reserve(buckets.size());
    for (auto& [root, info] : buckets) out.push_back(std::move(info));
    std::sort(out.begin(), out.end(), [](const ComponentInfo& a, const ComponentInfo& b) {
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() > b.vertices.size();
        return a.vertices < b.vertices;
    });
    return out;
}

ComponentInfo largest_component(const Hypergraph& g2) {
    auto all = components(g2);
    if (all.empty()) throw std::invalid_argument("largest_component: empty vertex set");
    return all.front();
}

std::optional<std::array<int, 3>> find_triangle(const Hypergraph& g2,
                                                const std::vector<int>& within) {
    if (g2.k != 2) throw std::invalid_argument("find_triangle: expected a 2-graph");
    std::vector<std::vector<char>> adj(
        static_cast<std::size_t>(g2.n), std::vector<char>(static_cast<std::size_t>(g2.n), 0));
    for (const Edge& e : g2.edges) {
        adj[static_cast<std::size_t>(e[0])][static_cast<std::size_t>(e[1])] = 1;
        adj[static_cast<std::size_t>(e[1])][static_cast<std::size_t>(e[0])] = 1;
    }
    std::vector<int> verts = within;
    std::sort(verts.begin(), verts.end());
    const std::size_t m = verts.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (!adj[static_cast<std::size_t>(verts[i])][static_cast<std::size_t>(verts[j])])
                continue;
            for (std::size_t l = j + 1; l < m; ++l)
                if (adj[static_cast<std::size_t>(verts[i])][static_cast<std::size_t>(verts[l])] &&
                    adj[static_cast<std::size_t>(verts[j])][static_cast<std::size_t>(verts[l])])
                    return std::array<int, 3>{verts[i], verts[j], verts[l]};
        }
    return std::nullopt;
}

GraphStructureReport structure_single(const Hypergraph& g2, const Rat& gamma) {
    if (g2.k != 2) throw std::invalid_argument("structure_single: expected a 2-graph");
    GraphStructureReport rep;
    rep.n = g2.n;
    rep.edge_count = g2.edge_count();

    const Rat half_plus = Rat(1, 2) + gamma;
    const Rat all_pairs = Rat(hypercore::binomial(g2.n, 2));
    rep.dense_enough = Rat(rep.edge_count) > half_plus * all_pairs;

    rep.component = largest_component(g2);
    const int outside = g2.n - static_cast<int>(rep.component.vertices.size());
    rep.edge_floor = half_plus * all_pairs - Rat(hypercore::binomial(outside, 2));
    rep.m1_vertices = Rat(static_cast<long long>(rep.component.vertices.size())) >
                      half_plus * Rat(g2.n);
    rep.m1_edges = Rat(rep.component.edge_count) > rep.edge_floor;
    rep.m1_quarter = rep.edge_floor >= (Rat(1, 4) + gamma) * all_pairs;

    const Hypergraph inside = induced_2graph(g2, rep.component.vertices);
    rep.matching_size = static_cast<long long>(max_matching(inside).size());
    rep.matching_required = (Rat(1, 4) + gamma / 3) * Rat(g2.n);

    if (auto tri = find_triangle(g2, rep.component.vertices)) {
        rep.triangle = *tri;
        rep.m3 = true;
    }
    return rep;
}

TripleStructureReport structure_checks(const Hypergraph& g1, const Hypergraph& g2,
                                       const Hypergraph& g3, const Rat& gamma) {
    if (g1.n != g2.n || g2.n != g3.n)
        throw std::invalid_argument("structure_checks: graphs must share a vertex set");
    TripleStructureReport rep;
    const Hypergraph* graphs[3] = {&g1, &g2, &g3};
    for (int i = 0; i < 3; ++i) rep.graphs[static_cast<std::size_t>(i)] = structure_single(*graphs[i], gamma);

    std::array<std::set<Edge>, 3> comp_edges;
    for (int i = 0; i < 3; ++i) {
        const Hypergraph inside =
            induced_2graph(*graphs[i], rep.graphs[static_cast<std::size_t>(i)].component.vertices);
        comp_edges[static_cast<std::size_t>(i)] =
            std::set<Edge>(inside.edges.begin(), inside.edges.end());
    }
    for (int i = 0; i < 3 && !rep.m4; ++i)
        for (int j = i + 1; j < 3 && !rep.m4; ++j)
            for (const Edge& e : comp_edges[static_cast<std::size_t>(i)])
                if (comp_edges[static_cast<std::size_t>(j)].count(e)) {
                    rep.share_first = i;
                    rep.share_second = j;
                    rep.shared_edge = e;
                    rep.m4 = true;
                    break;
                }
    return rep;
}

bool majorizes(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) return false;
    std::vector<Rat> x = a, y = b;
    std::sort(x.rbegin(), x.rend());
    std::sort(y.rbegin(), y.rend());
    Rat px = 0, py = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        px += x[i];
        py += y[i];
        if (px < py) return false;
    }
    return px == py;
}

bool karamata_holds(const std::vector<Rat>& a, const std::vector<Rat>& b,
                    const std::function<Rat(const Rat&)>& f) {
    Rat fa = 0, fb = 0;
    for (const Rat& v : a) fa += f(v);
    for (const Rat& v : b) fb += f(v);
    return fa >= fb;
}

FractionalMatching matching_to_fractional(const Hypergraph& g,
                                          const std::vector<Edge>& chosen,
                                          const std::vector<Rat>& omega) {
    if (static_cast<int>(omega.size()) != g.n)
        throw std::invalid_argument("matching_to_fractional: omega length mismatch");
    std::vector<char> used(static_cast<std::size_t>(g.n), 0);
    FractionalMatching out;
    out.weights.assign(g.edges.size(), Rat(0));
    for (const Edge& raw : chosen) {
        Edge e = raw;
        std::sort(e.begin(), e.end());
        const auto idx = g.edge_index(e);
        if (!idx) throw std::invalid_argument("matching_to_fractional: edge not in graph");
        Rat lightest = 1;
        for (int v : e) {
            if (used[static_cast<std::size_t>(v)])
                throw std::invalid_argument("matching_to_fractional: edges overlap");
            used[static_cast<std::size_t>(v)] = 1;
            lightest = std::min(lightest, omega[static_cast<std::size_t>(v)]);
        }
        out.weights[static_cast<std::size_t>(*idx)] = lightest;
        out.size += lightest;
    }
    if (!is_fractional_matching(g, omega, out.weights))
        throw std::logic_error("matching_to_fractional: construction violated a budget");
    out.perfect = is_perfect(g, omega, out);
    return out;
}

QuarterMatching quarter_matching(const Hypergraph& g2, const std::vector<Rat>& omega,
                                 const Rat& gamma, const Rat& eta) {
    if (g2.k != 2) throw std::invalid_argument("quarter_matching: expected a 2-graph");
    if (static_cast<int>(omega.size()) != g2.n)
        throw std::invalid_argument("quarter_matching: omega length mismatch");

    QuarterMatching rep;
    rep.required = Rat(g2.n, 4);

    const Rat all_pairs = Rat(hypercore::binomial(g2.n, 2));
    rep.dense_enough = Rat(g2.edge_count()) > (Rat(1, 2) + gamma) * all_pairs;
    Rat total = 0;
    for (const Rat& w : omega) total += w;
    rep.weight_ok = total >= (Rat(1) - eta) * Rat(g2.n);
    rep.slack_ok = eta <= gamma / 6;
    rep.in_hypothesis = rep.dense_enough && rep.weight_ok && rep.slack_ok;

    const ComponentInfo comp = largest_component(g2);
    const Hypergraph inside = induced_2graph(g2, comp.vertices);
    for (const auto& [a, b] : max_matching(inside)) rep.integral.push_back(Edge{a, b});
    rep.fractional = matching_to_fractional(g2, rep.integral, omega);

    rep.ok = !rep.in_hypothesis || rep.fractional.size >= rep.required;
    if (!rep.ok)
        throw std::logic_error("quarter_matching: in-hypothesis instance fell short of n/4");
    return rep;
}

} // namespace matching
