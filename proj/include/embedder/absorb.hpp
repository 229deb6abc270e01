#pragma once

#include <string>
#include <vector>

#include "homomorphism/homomorphism.hpp"
#include "hypercore/hypergraph.hpp"
#include "loosetree/loosetree.hpp"

namespace embedder {

// Loose star: edges of the host graph meeting pairwise exactly in the
// centre. Edge order matters downstream (the splice routes into the first
// edge), so it is kept as constructed.
struct Star {
    int centre = -1;
    std::vector<hypercore::Edge> edges;

    // The edges with the centre removed, in edge order.
    std::vector<std::vector<int>> leaf_sets() const;
};

// k-1 vertex-disjoint stars. Position i (0-based) serves slot i+2 of the
// ordered k-tuples the tuple can digest: the star's centre joins the base
// edge there, and its leaf sets must accept the slot's vertex as a
// replacement centre.
struct AbsorbingTuple {
    std::vector<Star> stars;

    std::vector<int> centres() const;  // star order
    std::vector<int> vertices() const; // sorted union over all stars
};

struct TupleVerdict {
    bool ok = true;
    std::string violation;
};

// Structural soundness: k-1 stars of exactly d edges each, every edge
// present in the graph, edges of one star sharing only the centre, and the
// star vertex sets pairwise disjoint.
TupleVerdict verify_tuple(const hypercore::Hypergraph& g, const AbsorbingTuple& t, int d);

// Whether the tuple digests the ordered target (w_1..w_k): the base edge
// {w_1} + centres exists, and for each later slot every leaf set of the
// matching star avoids w_i and forms an edge with it. Coincidences like
// w_i equalling its own centre are fine; w_1 inside the centres is not,
// since the base edge then collapses.
bool tuple_absorbs(const hypercore::Hypergraph& g, const AbsorbingTuple& t,
                   const std::vector<int>& target);

struct AbsorberReport {
    std::vector<AbsorbingTuple> family;
    int d = 0;
    int p = 0;
    long long targets = 0;  // ordered k-tuples of distinct vertices
    long long covered = 0;  // targets digested by at least p family tuples
    long long min_coverage = 0;
    std::vector<std::vector<int>> uncovered; // every target short of p

    bool complete() const { return uncovered.empty(); }
};

// Deterministic greedy family builder: sweeps the ordered targets in lex
// order once per coverage round, building a fresh vertex-disjoint tuple
// (also disjoint from `forbidden`) for each target still short of the
// round's quota. One sweep per round is exhaustive because blocking only
// grows: a build that fails never succeeds later. Shortfalls are reported,
// not thrown.
AbsorberReport find_absorbers(const hypercore::Hypergraph& g, const std::vector<int>& forbidden,
                              int d, int p);

struct ImmersionResult {
    homomorphism::VertexMap psi; // full embedding of the tree
    // star_anchor[t][s] = tree vertex carrying star s of tuple t; every
    // tree edge at that vertex maps onto a distinct edge of the star.
    std::vector<std::vector<int>> star_anchor;
};

// Embeds the whole tree with root -> root_image so that every star of every
// tuple sits on some tree vertex as described above. Splices one star at a
// time: picks an unembedded tree vertex at loose-path distance exactly 3
// from the embedded part, routes a fresh length-2 connecting path in the
// graph to the largest leaf of the star's first edge, maps the three path
// edges onto the two connector edges plus that star edge, and hangs the
// remaining tree edges at the splice vertex onto the star's other edges.
// Whatever the splices leave over is embedded greedily. Images avoid
// `forbidden` and all absorber vertices except the spliced ones; leaves of
// star edges no tree edge landed on stay outside the image.
//
// Throws invalid_argument when the tree is smaller than 3*(tuples+1)*k*d
// (the growth the splices may need; vacuous for an empty family) and
// runtime_error naming the blocking star when routing fails.
ImmersionResult immerse(const hypercore::Hypergraph& g, const loosetree::LooseTree& t,
                        int root_image, const std::vector<AbsorbingTuple>& tuples,
                        const std::vector<int>& forbidden);

// Mutable companion of the completion loop: the full target tree, which of
// its edges are realised so far, the image vector, and the tuple pool.
struct PipelineState {
    loosetree::LooseTree tree;
    hypercore::Hypergraph graph;
    std::vector<char> edge_embedded;
    std::vector<int> psi; // tree vertex -> graph vertex, -1 while unassigned
    std::vector<AbsorbingTuple> tuples;
    std::vector<char> consumed;
};

PipelineState make_state(const hypercore::Hypergraph& g, const loosetree::LooseTree& t,
                         const std::vector<int>& psi, const std::vector<char>& edge_embedded,
                         const std::vector<AbsorbingTuple>& tuples);

// Realises one more tree edge, all of whose vertices except one (the
// attachment x_1, image u_1) are still unembedded. Scans the unconsumed
// tuples for one whose centres v_2..v_k extend u_1 to a base edge and whose
// stars still sit immersed on the current map, then picks fresh vertices
// u_2..u_k accepted by every leaf set and rewires: the new tree vertices
// take the centres, and each tree vertex parked on a centre moves to its
// u_i, which keeps all of its edges (images of star edges) valid. The tuple
// is consumed and the whole embedded part is re-verified.
//
// Extending an edge that is already embedded is the identity. Throws
// invalid_argument on a malformed frontier edge, runtime_error when no
// unconsumed tuple fits, and logic_error if re-verification fails.
void extend_by_absorption(PipelineState& state, int tree_edge);

// Validity of the embedded part: the realised edges form a loose tree
// around the root and the restriction of psi to it is an embedding.
homomorphism::MapVerdict verify_state(const PipelineState& state);

} // namespace embedder
