#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "homomorphism/homomorphism.hpp"
#include "homomorphism/perm.hpp"
#include "hypercore/hypergraph.hpp"
#include "loosetree/loosetree.hpp"

namespace homomorphism {

// Canonical catalogue of rooted loose-tree shapes with bounded depth and
// bounded vertex degree. Sibling order never affects homomorphism existence,
// so shapes are identified by the multiset of their child structures:
//   * a vertex type at depth d is a sorted multiset of edge types at depth d
//     (its downward edges);
//   * an edge type at depth d is a sorted multiset of k-1 vertex types at
//     depth d+1 (its fresh endpoints).
// Non-root vertices spend one degree unit on their upward edge; the root
// uses its full budget downward.
struct TreeTypes {
    int k = 0;
    int depth_cap = 0;
    int branch_cap = 0;
    // vertex_types[d][vt] lists edge-type ids at depth d
    std::vector<std::vector<std::vector<int>>> vertex_types;
    // edge_types[d][et] lists vertex-type ids at depth d+1
    std::vector<std::vector<std::vector<int>>> edge_types;
    std::vector<int> root_types; // depth-0 vertex types with at least one edge

    std::size_t tree_count() const { return root_types.size(); }

    // Materialise one catalogued shape as a concrete tree (BFS labels).
    loosetree::LooseTree materialise(int root_type) const;
};

TreeTypes enumerate_tree_types(int k, int depth_cap, int branch_cap);

// The full chain tree: every vertex except those at the deepest level
// carries exactly one downward edge. Depth >= 1. These shapes are exactly
// the adversaries that witness failed reachability and rotation claims, and
// they fall inside every catalogue with branch_cap >= 2.
loosetree::LooseTree full_chain_tree(int k, int depth);

// Constraint for a single concrete tree.
struct TreeConstraint {
    enum class Mode { reach, rotate };
    Mode mode = Mode::reach;
    long long radius = 0;               // C
    std::vector<int> rooted;            // ordered target edge u_0..u_{k-1}
    Perm sigma;                         // rotate: class c pins to rooted[sigma[c]] at dist >= C
                                        // reach: members at dist > C must map into the target set
};

// Exact feasibility of one tree under the constraint, for every root image
// at once: out[w] says a homomorphism exists with root -> w. Bottom-up over
// the tree, trying every witness edge and every class bijection per vertex,
// so sibling edges are free to use different witnesses.
std::vector<char> tree_feasible_roots(const hypercore::Hypergraph& g,
                                      const loosetree::LooseTree& t, const TreeConstraint& c);

// Conjunction over the whole catalogue, evaluated per vertex type so shared
// shapes are solved once: out[w] = every catalogued tree accepts root image
// w. Exact for the same reason as tree_feasible_roots.
std::vector<char> catalogue_feasible_roots(const TreeTypes& types,
                                           const hypercore::Hypergraph& g,
                                           const TreeConstraint& c);

// Extract one explicit homomorphism for a concrete tree, if any exists with
// the given root image.
std::optional<VertexMap> tree_witness(const hypercore::Hypergraph& g,
                                      const loosetree::LooseTree& t, const TreeConstraint& c,
                                      int root_image);

} // namespace homomorphism
