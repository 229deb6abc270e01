#pragma once

#include <string>
#include <vector>

#include "hypercore/hypergraph.hpp"
#include "loosetree/loosetree.hpp"

namespace homomorphism {

// Assignment of graph vertices to tree vertices. A homomorphism must map
// every tree edge onto an edge of the graph with k distinct images; an
// embedding is additionally injective on the whole vertex set.
struct VertexMap {
    enum class Kind { homomorphism, embedding };
    Kind kind = Kind::homomorphism;
    std::vector<int> image; // tree vertex -> graph vertex, -1 = unassigned
};

struct MapVerdict {
    bool ok = true;
    std::string violation;
};

// Checks a complete map against its declared kind.
MapVerdict verify_map(const loosetree::LooseTree& t, const hypercore::Hypergraph& g,
                      const VertexMap& m);

} // namespace homomorphism
