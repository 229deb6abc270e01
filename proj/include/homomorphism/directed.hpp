#pragma once

#include <vector>

#include "homomorphism/homomorphism.hpp"
#include "homomorphism/reach.hpp"
#include "homomorphism/rotate.hpp"
#include "hypercore/rational.hpp"
#include "loosetree/loosetree.hpp"

namespace homomorphism {

// Explicit homomorphism extraction from the dynamic programs. These build
// the maps whose existence the reachability and rotation verdicts assert,
// so the verdicts can be checked constructively.

// Homomorphism with the root at root_image and all vertices far from the
// root landing inside the reachability target: vertices at distance at
// least radii(root_image) - 1 map into the target edge. Throws when the
// root image never reaches the target.
VertexMap reach_map(const hypercore::Hypergraph& g, const ReachabilitySet& rs,
                    const loosetree::LooseTree& t, int root_image);

// Homomorphism pinned by a rotation table: the root maps to root_image and
// every vertex of colour class c at distance >= level maps to
// rooted[sigma[c]]. Requires the table to assert feasibility at that level.
VertexMap rotation_map(const hypercore::Hypergraph& g,
                       const RotationTable& table,
                       const loosetree::LooseTree& t, int root_image,
                       int level);

// Composite map: root at root_image, and outside a set of at most
// (k Delta)^(reach_radius + rotate_radius) vertices per colour class, class
// c lands exactly on edge_order[c]. exceptions[c] counts the misses.
struct TreeEdgeMap {
    VertexMap map;
    std::vector<long long> exceptions;
    hypercore::BigInt bound;
    int reach_radius = 0;
    int rotate_radius = 0;
};

TreeEdgeMap tree_to_edge_map(const hypercore::Hypergraph& g,
                             const loosetree::LooseTree& t, int root_image,
                             const std::vector<int>& edge_order,
                             int reach_radius, int rotate_radius);

}  // namespace homomorphism
