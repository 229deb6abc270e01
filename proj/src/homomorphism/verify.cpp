#include "homomorphism/homomorphism.hpp"

#include <algorithm>
#include <set>

namespace homomorphism {

MapVerdict verify_map(const loosetree::LooseTree& t, const hypercore::Hypergraph& g,
                      const VertexMap& m) {
    auto fail = [](std::string why) { return MapVerdict{false, std::move(why)}; };
    if (t.k != g.k) return fail("uniformity mismatch between tree and graph");
    if (static_cast<int>(m.image.size()) != t.n) return fail("image vector has wrong length");
    for (int v = 0; v < t.n; ++v) {
        if (m.image[v] < 0 || m.image[v] >= g.n)
            return fail("vertex " + std::to_string(v) + " is unassigned or out of range");
    }
    for (int ei = 0; ei < t.edge_count(); ++ei) {
        hypercore::Edge img;
        for (int v : t.edges[ei]) img.push_back(m.image[v]);
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end())
            return fail("edge " + std::to_string(ei) + " collapses two vertices");
        if (!g.has_edge(img))
            return fail("edge " + std::to_string(ei) + " does not map onto a graph edge");
    }
    if (m.kind == VertexMap::Kind::embedding) {
        std::set<int> used;
        for (int v = 0; v < t.n; ++v)
            if (!used.insert(m.image[v]).second)
                return fail("embedding reuses graph vertex " + std::to_string(m.image[v]));
    }
    return MapVerdict{};
}

} // namespace homomorphism
