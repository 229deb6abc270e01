#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypercore/rational.hpp"

namespace hypercore {

// An edge is a sorted vector of distinct vertex ids.
using Edge = std::vector<int>;

// k-uniform hypergraph on dense vertices 0..n-1.
//
// Invariants maintained by create():
//   * every edge has exactly k distinct vertices, stored ascending;
//   * the edge list is sorted lexicographically with no duplicates;
//   * incidence[v] lists the indices of edges containing v, ascending.
//
// k = 0 and k = 1 are permitted internally (they arise as shadows); the
// public loaders insist on k >= 2.
struct Hypergraph {
    int k = 2;
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> incidence;

    static Hypergraph create(int k, int n, std::vector<Edge> raw_edges);

    bool has_edge(const Edge& sorted_edge) const;
    std::optional<int> edge_index(const Edge& sorted_edge) const;

    long long edge_count() const { return static_cast<long long>(edges.size()); }
    int vertex_degree(int v) const;
    bool is_isolated(int v) const;
    std::vector<int> isolated_vertices() const;

    void rebuild_incidence();
};

// Report for the degree of a set: how many edges contain it, and the exact
// fraction of the possible completions that are present.
struct DegreeReport {
    Edge subset;
    long long count = 0;
    Rat relative = 0;
};

struct PerturbedViolation {
    std::string condition; // "P1", "P2" or "P3"
    int j = 0;
    Edge witness; // offending set; empty for the density condition
};

struct PerturbedDegreeVerdict {
    bool holds = false;
    int ell = 0;
    Rat alpha = 0;
    Rat delta = 0;
    std::vector<PerturbedViolation> violations;
};

// j-th shadow: all j-sets contained in at least one edge. Accepts the full
// internal range 0 <= j <= k; the 0-shadow of a nonempty graph is the single
// empty edge, which seeds the downward inductions.
Hypergraph shadow(const Hypergraph& g, int j);

// Link of a set S with |S| < k: the (k-|S|)-graph on the SAME vertex set
// whose edges are e \ S for edges e containing S. Vertices of S become
// isolated in the link rather than being removed.
Hypergraph link(const Hypergraph& g, const Edge& s);

// Degree of a set S with 0 <= |S| <= k: count of edges containing S and the
// relative degree count / binom(n-|S|, k-|S|).
DegreeReport degree(const Hypergraph& g, const Edge& s);

// Minimum degree over all ell-subsets of the vertex set; reports the
// lexicographically first minimiser.
DegreeReport min_degree(const Hypergraph& g, int ell);

// Partition of edge indices into tight components: classes of the transitive
// closure of "consecutive edges share k-1 vertices". Components are sorted
// internally and listed by smallest member.
std::vector<std::vector<int>> tight_components(const Hypergraph& g);

// Shortest tight walk between two edges as a sequence of edge indices, or
// nullopt when they lie in different tight components.
std::optional<std::vector<int>> tight_walk(const Hypergraph& g, int from_edge, int to_edge);

// Checks the perturbed minimum-degree conditions for every j in [ell]:
//   (P1) every edge of the j-shadow has relative degree >= delta in g;
//   (P2) the complement of the j-shadow has edge density <= alpha;
//   (P3) every edge of the (j-1)-shadow has relative degree < alpha in the
//        complement of the j-shadow.
// For j = 1 the (j-1)-shadow edge is the empty set and its relative degree in
// the complement is the fraction of isolated vertices.
PerturbedDegreeVerdict verify_perturbed_degree(const Hypergraph& g, int ell,
                                               const Rat& alpha, const Rat& delta);

// Enumeration helper: calls fn(subset) for every r-subset of {0..n-1} in
// lexicographic order. fn receives a sorted Edge.
void for_each_subset(int n, int r, const std::function<void(const Edge&)>& fn);

// --- serialization ---

// Text format: header line "k n", then one edge per line as k vertex ids.
// Blank lines are ignored. Malformed input throws std::runtime_error.
Hypergraph load_graph_text(const std::string& text);
std::string save_graph_text(const Hypergraph& g);

// JSON mirror: {"k": int, "n": int, "edges": [[...], ...]}.
Hypergraph load_graph_json(const std::string& json_text);
std::string save_graph_json(const Hypergraph& g);

} // namespace hypercore
