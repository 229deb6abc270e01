#include "robustgraph/gstar.hpp"

#include <algorithm>
#include <stdexcept>

namespace robustgraph {

using hypercore::Edge;
using hypercore::Hypergraph;

namespace {

Edge merge_sorted(const Edge& a, const Edge& b) {
    Edge out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Largest component of a 2-graph as (vertex set, pair list); ties by order
// are broken toward the component holding the smallest vertex.
ComponentChoice pick_component(const Edge& a, const Hypergraph& lk) {
    const auto comps = hypercore::tight_components(lk);
    if (comps.empty())
        throw std::logic_error("build_gstar: shadow member with an empty link");

    ComponentChoice out;
    out.a = a;
    std::vector<std::vector<int>> vertex_sets;
    vertex_sets.reserve(comps.size());
    for (const auto& comp : comps) {
        std::vector<int> vs;
        for (int idx : comp) {
            vs.push_back(lk.edges[idx][0]);
            vs.push_back(lk.edges[idx][1]);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        vertex_sets.push_back(std::move(vs));
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < comps.size(); ++i) {
        const auto& cur = vertex_sets[i];
        const auto& champ = vertex_sets[best];
        if (cur.size() > champ.size() ||
            (cur.size() == champ.size() && cur.front() < champ.front()))
            best = i;
    }
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (i != best && vertex_sets[i].size() == vertex_sets[best].size())
            out.tie = true;

    out.vertices = vertex_sets[best];
    for (int idx : comps[best]) out.pairs.push_back(lk.edges[idx]);
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

} // namespace

RobustSubgraph build_gstar(const Hypergraph& g) {
    if (g.k < 3) throw std::invalid_argument("build_gstar: requires k >= 3");

    RobustSubgraph out;
    out.base = g;

    const Hypergraph sh = hypercore::shadow(g, g.k - 2);
    std::map<Edge, std::vector<int>> witness_of; // gstar edge -> component ids
    for (const Edge& a : sh.edges) {
        ComponentChoice choice = pick_component(a, hypercore::link(g, a));
        const int cid = static_cast<int>(out.components.size());
        for (const Edge& p : choice.pairs)
            witness_of[merge_sorted(a, p)].push_back(cid);
        out.component_index[a] = cid;
        out.components.push_back(std::move(choice));
    }

    std::vector<Edge> edges;
    edges.reserve(witness_of.size());
    for (const auto& [e, ids] : witness_of) edges.push_back(e);
    out.gstar = Hypergraph::create(g.k, g.n, std::move(edges));

    out.provenance.assign(out.gstar.edges.size(), {});
    out.component_edges.assign(out.components.size(), {});
    for (auto& [e, ids] : witness_of) {
        const auto idx = out.gstar.edge_index(e);
        if (!idx) throw std::logic_error("build_gstar: lost an edge during assembly");
        std::sort(ids.begin(), ids.end());
        for (int cid : ids) out.component_edges[cid].push_back(*idx);
        out.provenance[*idx] = std::move(ids);
    }
    for (auto& list : out.component_edges) std::sort(list.begin(), list.end());
    return out;
}

std::vector<int> label_edge_set(const RobustSubgraph& rs, const Edge& a) {
    if (static_cast<int>(a.size()) > rs.base.k - 2)
        throw std::invalid_argument("label_edge_set: set larger than k-2");
    if (!std::is_sorted(a.begin(), a.end()))
        throw std::invalid_argument("label_edge_set: set must be sorted");

    std::vector<int> out;
    for (std::size_t cid = 0; cid < rs.components.size(); ++cid) {
        const Edge& w = rs.components[cid].a;
        if (std::includes(w.begin(), w.end(), a.begin(), a.end()))
            out.insert(out.end(), rs.component_edges[cid].begin(),
                       rs.component_edges[cid].end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool provenance_sound(const RobustSubgraph& rs) {
    if (rs.gstar.n != rs.base.n || rs.gstar.k != rs.base.k) return false;

    // membership invariants, checked directly on the stored object
    if (rs.provenance.size() != rs.gstar.edges.size()) return false;
    for (std::size_t i = 0; i < rs.gstar.edges.size(); ++i) {
        const Edge& e = rs.gstar.edges[i];
        if (!rs.base.has_edge(e)) return false;
        if (rs.provenance[i].empty()) return false;
        for (int cid : rs.provenance[i]) {
            if (cid < 0 || cid >= static_cast<int>(rs.components.size())) return false;
            const ComponentChoice& c = rs.components[cid];
            if (!std::includes(e.begin(), e.end(), c.a.begin(), c.a.end()))
                return false;
            Edge rest;
            std::set_difference(e.begin(), e.end(), c.a.begin(), c.a.end(),
                                std::back_inserter(rest));
            if (!std::binary_search(c.pairs.begin(), c.pairs.end(), rest))
                return false;
        }
    }

    // bit-exact replay of the construction
    const RobustSubgraph fresh = build_gstar(rs.base);
    if (fresh.gstar.edges != rs.gstar.edges) return false;
    if (fresh.provenance != rs.provenance) return false;
    if (fresh.component_edges != rs.component_edges) return false;
    if (fresh.components.size() != rs.components.size()) return false;
    for (std::size_t i = 0; i < rs.components.size(); ++i) {
        const ComponentChoice& x = rs.components[i];
        const ComponentChoice& y = fresh.components[i];
        if (x.a != y.a || x.vertices != y.vertices || x.pairs != y.pairs ||
            x.tie != y.tie)
            return false;
    }
    return true;
}

ContainmentCheck containment_check(const RobustSubgraph& rs, const Edge& b) {
    if (static_cast<int>(b.size()) > rs.base.k - 4)
        throw std::invalid_argument(
            "containment_check: the link must stay at least 4-uniform");

    ContainmentCheck out;
    out.b = b;

    const RobustSubgraph reduced = build_gstar(hypercore::link(rs.base, b));
    const Hypergraph lifted = hypercore::link(rs.gstar, b);
    out.holds = true;
    for (const Edge& f : reduced.gstar.edges) {
        if (!lifted.has_edge(f)) {
            out.holds = false;
            out.witness = f;
            break;
        }
    }
    return out;
}

} // namespace robustgraph
