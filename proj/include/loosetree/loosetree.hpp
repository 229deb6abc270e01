#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypercore/hypergraph.hpp"

namespace loosetree {

using hypercore::Edge;

// Loose tree: a connected k-graph buildable edge by edge so that every edge
// after the first shares exactly one vertex with the union of its
// predecessors. Stored rooted, with the induced proper k-colouring and
// layering:
//   * colour(root) = 1, layer(root) = 1, L_1 = {root};
//   * every edge has one vertex per layer i..i+k-1 where i is the layer of
//     its top (unique closest-to-root) vertex;
//   * colour(v) = ((layer(v)-1) mod k) + 1.
// Colours and layers are derived deterministically by BFS from the root: the
// t-th smallest fresh vertex of an edge discovered from v gets layer
// layer(v)+t and colour tau^t(colour(v)), tau = (1 2 ... k).
struct LooseTree {
    int k = 2;
    int n = 0;
    int root = 0;
    std::vector<Edge> edges; // construction order
    std::vector<int> colour; // 1..k
    std::vector<int> layer;  // >= 1
    std::vector<std::vector<int>> incidence;

    static LooseTree create(int k, int n, int root, std::vector<Edge> construction_edges);

    int edge_count() const { return static_cast<int>(edges.size()); }
    int vertex_degree(int v) const { return static_cast<int>(incidence[v].size()); }
    int max_vertex_degree() const;

    // Unique minimum-layer vertex of an edge; all other members sit exactly
    // one of the k-1 following layers.
    int top_vertex(int edge_idx) const;

    // Vertices of degree one other than the root.
    std::vector<int> leaves() const;

    // Edge indices at v whose top is v, i.e. the edges leading away from the
    // root, in construction order.
    std::vector<int> child_edges(int v) const;

    // The edge through which v is reached from the root, if any.
    std::optional<int> parent_edge(int v) const;

    hypercore::Hypergraph as_hypergraph() const;
};

struct TreeValidation {
    bool ok = true;
    std::string violation; // first failed invariant, empty when ok
};

// Re-checks every structural invariant of a built tree from scratch.
TreeValidation validate(const LooseTree& t);

// All pairwise distances, computed by BFS on the incidence bipartite graph
// (vertices on one side, edges on the other):
//   vertex-vertex: edges on the unique loose path (0 for v itself, 1 within
//                  a shared edge); vertex-edge: 0 when v is a member;
//   edge-edge: 0 for the same edge, 1 for overlapping edges.
struct TreeMetric {
    std::vector<std::vector<int>> vertex_vertex;
    std::vector<std::vector<int>> vertex_edge; // [v][edge_idx]
    std::vector<std::vector<int>> edge_edge;
};

TreeMetric metric(const LooseTree& t);

// Iterated binary loose tree: round 0 is a single edge rooted at vertex 0;
// each round attaches one fresh edge to every current leaf. Even rounds have
// a perfect matching and maximum vertex degree 2.
LooseTree binary_tree(int k, int rounds);

// Random loose tree on n vertices (n = 1 mod (k-1)) with maximum vertex
// degree at most max_degree, grown by attaching edges to uniformly chosen
// vertices with remaining capacity. Throws when the parameters are
// infeasible for this growth process.
LooseTree random_tree(int k, int n, int max_degree, std::uint64_t seed);

// Subtree of v: v together with everything below it, materialised as a tree
// of its own (vertices relabelled to 0..size-1 in ascending original order).
// orig maps local ids back. The local colouring is the original one shifted
// so that v receives colour 1.
struct Subtree {
    LooseTree tree;
    std::vector<int> orig;
};

Subtree subtree(const LooseTree& t, int v);

// Tree spanned by an arbitrary connected edge subset, re-rooted at
// root_orig (which must lie in the subset). Edges are re-ordered
// breadth-first from the new root, so the subset's original construction
// order is irrelevant. The subset must be non-empty: a single vertex is not
// a representable tree.
Subtree edge_subtree(const LooseTree& t, const std::vector<int>& edge_idxs, int root_orig);

// Loose path on n vertices: consecutive edges sharing single link vertices.
// Requires n = 1 (mod k-1) and at least one edge.
LooseTree path_tree(int k, int n);

// Colour classes C_1..C_k as sorted vertex lists (index c-1 holds class c).
std::vector<std::vector<int>> colour_classes(const LooseTree& t);

// Classes after relabelling by tau^j: entry c-1 lists the vertices whose
// shifted colour tau^j(colour(v)) equals c.
std::vector<std::vector<int>> shift_classes(const LooseTree& t, int j);

// Ordered pieces of a peeling decomposition. Each piece after the first is
// rooted at a vertex that appears as a leaf of an earlier piece; pieces
// overlap only in those shared roots.
struct DecompositionPiece {
    LooseTree tree;
    std::vector<int> orig;      // local vertex -> vertex of the source tree
    int root_orig = -1;         // source-tree id of the piece root
    int attach_piece = -1;      // earlier piece containing root_orig (-1 for the first)
};

struct Decomposition {
    std::vector<DecompositionPiece> pieces;
    int target_size = 0;
    int degree_bound = 0; // max vertex degree of the source tree
};

// Peels subtrees of size in [target_size, k*D*target_size] whose child
// subtrees are all smaller than target_size (D = max vertex degree), merges
// the final remainder into the last peeled piece, and reverses the order.
// Piece sizes stay within [target_size, 2*k*D*target_size] except when the
// whole tree is a single piece.
Decomposition decompose(const LooseTree& t, int target_size);

// --- serialization ---

// Text format: header "k n root", then edges in construction order.
LooseTree load_tree_text(const std::string& text);
std::string save_tree_text(const LooseTree& t);

// JSON mirror: {"k":, "n":, "root":, "edges": [[...], ...]}.
LooseTree load_tree_json(const std::string& json_text);
std::string save_tree_json(const LooseTree& t);

} // namespace loosetree
