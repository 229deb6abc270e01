#include "robustgraph/colouring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace robustgraph {

using hypercore::Edge;
using hypercore::Rat;

namespace {

// components, widest first; ties fall toward the smallest vertex so the
// ranking is deterministic on equal orders
void sort_components(std::vector<MonoComponent>& comps) {
    std::stable_sort(comps.begin(), comps.end(),
                     [](const MonoComponent& a, const MonoComponent& b) {
                         if (a.vertices.size() != b.vertices.size())
                             return a.vertices.size() > b.vertices.size();
                         return a.vertices.front() < b.vertices.front();
                     });
}

} // namespace

ColouringAnalysis analyse_colouring(const ColouredPairs& c, const Rat& alpha) {
    if (c.pairs.size() != c.colour.size())
        throw std::invalid_argument("analyse_colouring: one colour per pair");

    ColouringAnalysis out;

    std::map<Edge, int> colour_of;
    std::vector<std::vector<int>> incident(c.n); // pair indices per vertex
    for (std::size_t i = 0; i < c.pairs.size(); ++i) {
        const Edge& p = c.pairs[i];
        if (p.size() != 2 || p[0] == p[1] || p[0] < 0 || p[1] >= c.n)
            throw std::invalid_argument("analyse_colouring: malformed pair");
        if (!colour_of.emplace(p, c.colour[i]).second)
            throw std::invalid_argument("analyse_colouring: duplicate pair");
        incident[p[0]].push_back(static_cast<int>(i));
        incident[p[1]].push_back(static_cast<int>(i));
    }

    std::vector<int> covered;
    for (int v = 0; v < c.n; ++v)
        if (!incident[v].empty()) covered.push_back(v);

    // hypothesis: degree of every covered vertex
    out.degree_ok = !covered.empty();
    const Rat need = (Rat(1) - alpha) * Rat(c.n);
    for (int v : covered)
        if (Rat(static_cast<long long>(incident[v].size())) < need) {
            out.degree_ok = false;
            break;
        }

    // hypothesis: at most two colours at each vertex
    for (int v : covered) {
        std::set<int> seen;
        for (int i : incident[v]) seen.insert(c.colour[i]);
        if (static_cast<int>(seen.size()) > out.busiest_count) {
            out.busiest_count = static_cast<int>(seen.size());
            out.busiest_vertex = v;
        }
    }
    out.locally_two = out.busiest_count <= 2;

    // hypothesis: no rainbow triangle
    for (std::size_t i = 0; i < c.pairs.size() && out.rainbow_free; ++i) {
        const int u = c.pairs[i][0];
        const int v = c.pairs[i][1];
        for (int w = 0; w < c.n; ++w) {
            if (w == u || w == v) continue;
            const auto uw = colour_of.find(Edge{std::min(u, w), std::max(u, w)});
            const auto vw = colour_of.find(Edge{std::min(v, w), std::max(v, w)});
            if (uw == colour_of.end() || vw == colour_of.end()) continue;
            if (c.colour[i] != uw->second && c.colour[i] != vw->second &&
                uw->second != vw->second) {
                out.rainbow_free = false;
                out.rainbow_witness = {u, v, w};
                break;
            }
        }
    }
    out.regime = out.degree_ok && out.locally_two && out.rainbow_free;

    // monochromatic components via BFS restricted to one colour
    std::set<std::pair<int, int>> open; // (colour, pair index)
    for (std::size_t i = 0; i < c.pairs.size(); ++i)
        open.insert({c.colour[i], static_cast<int>(i)});
    while (!open.empty()) {
        const auto [col, seed] = *open.begin();
        MonoComponent comp;
        comp.colour = col;
        std::vector<int> stack{seed};
        open.erase(open.begin());
        while (!stack.empty()) {
            const int pi = stack.back();
            stack.pop_back();
            comp.pair_indices.push_back(pi);
            for (int v : c.pairs[pi]) {
                comp.vertices.push_back(v);
                for (int nx : incident[v]) {
                    if (c.colour[nx] != col) continue;
                    const auto it = open.find({col, nx});
                    if (it != open.end()) {
                        open.erase(it);
                        stack.push_back(nx);
                    }
                }
            }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        comp.vertices.erase(std::unique(comp.vertices.begin(), comp.vertices.end()),
                            comp.vertices.end());
        std::sort(comp.pair_indices.begin(), comp.pair_indices.end());
        out.components.push_back(std::move(comp));
    }
    sort_components(out.components);

    if (out.components.empty()) {
        out.notes.push_back("no pairs to analyse");
        return out;
    }

    out.h1_spans = out.components[0].vertices == covered;

    const Rat n = Rat(c.n);
    out.h1_large = Rat(static_cast<long long>(out.components[0].vertices.size())) >=
                   (Rat(1) - 3 * alpha) * n;
    if (!out.h1_large) out.notes.push_back("widest component falls short of (1-3a)n");

    if (out.h1_spans) {
        for (std::size_t i = 1; i < out.components.size() && out.others_disjoint; ++i)
            for (std::size_t j = i + 1; j < out.components.size(); ++j) {
                const auto& a = out.components[i].vertices;
                const auto& b = out.components[j].vertices;
                std::vector<int> inter;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(inter));
                if (!inter.empty()) {
                    out.others_disjoint = false;
                    out.notes.push_back("trailing components overlap");
                    break;
                }
            }
    } else {
        if (out.components.size() < 2) {
            out.h2_large_and_covering = false;
            out.notes.push_back("widest component does not span and no second exists");
        } else {
            const auto& h1 = out.components[0].vertices;
            const auto& h2 = out.components[1].vertices;
            bool covers = true;
            for (int v : covered)
                if (!std::binary_search(h1.begin(), h1.end(), v) &&
                    !std::binary_search(h2.begin(), h2.end(), v)) {
                    covers = false;
                    break;
                }
            out.h2_large_and_covering =
                covers && Rat(static_cast<long long>(h2.size())) >= (Rat(1) - 3 * alpha) * n;
            if (!out.h2_large_and_covering)
                out.notes.push_back("second component too small or the top two do not cover");
        }
    }

    for (std::size_t i = 2; i < out.components.size(); ++i)
        if (2 * static_cast<long long>(out.components[i].vertices.size()) >
            static_cast<long long>(c.n)) {
            out.tail_small = false;
            out.notes.push_back("a trailing component exceeds n/2");
            break;
        }

    out.conclusions_ok = out.h1_large && out.tail_small &&
                         (out.h1_spans ? out.others_disjoint : out.h2_large_and_covering);
    return out;
}

ColouringAnalysis analyse_vertex_colouring(int n, const std::vector<int>& classes,
                                           const Rat& alpha) {
    if (static_cast<int>(classes.size()) != n)
        throw std::invalid_argument("analyse_vertex_colouring: one class per vertex");

    ColouringAnalysis out;
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v)
        if (classes[v] >= 0) groups[classes[v]].push_back(v);

    out.psi_classes = static_cast<int>(groups.size());
    out.psi_two_classes = out.psi_classes <= 2;
    for (auto& [id, vs] : groups) {
        MonoComponent comp;
        comp.colour = id;
        comp.vertices = vs;
        out.components.push_back(std::move(comp));
    }
    sort_components(out.components);

    if (!out.components.empty()) {
        out.h1_large = Rat(static_cast<long long>(out.components[0].vertices.size())) >=
                       (Rat(1) - 3 * alpha) * Rat(n);
        out.conclusions_ok = out.psi_two_classes;
    }
    return out;
}

} // namespace robustgraph
