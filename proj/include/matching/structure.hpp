#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "hypercore/hypergraph.hpp"
#include "matching/fractional.hpp"

namespace matching {

// Connected component of a 2-graph: sorted vertex list plus the number of
// edges it induces. Isolated vertices form singleton components.
struct ComponentInfo {
    std::vector<int> vertices;
    long long edge_count = 0;
};

// All components, largest first (ties broken by lexicographic vertex list,
// so the ordering is deterministic).
std::vector<ComponentInfo> components(const hypercore::Hypergraph& g2);

ComponentInfo largest_component(const hypercore::Hypergraph& g2);

// First triangle whose vertices all lie in the given set, scanning in
// lexicographic order; nullopt when the induced subgraph is triangle-free.
std::optional<std::array<int, 3>> find_triangle(const hypercore::Hypergraph& g2,
                                                const std::vector<int>& within);

// Structural facts about a dense 2-graph, centred on its largest component:
// the component must span more than (1/2+gamma)n vertices, induce more than
// (1/2+gamma)C(n,2) - C(n-|C|,2) edges (itself at least (1/4+gamma)C(n,2)),
// carry a matching of size (1/4+gamma/3)n, and contain a triangle. All
// predicates are computed even when the density hypothesis fails; the
// dense_enough flag records whether the guarantees were owed at all.
struct GraphStructureReport {
    int n = 0;
    long long edge_count = 0;
    bool dense_enough = false;
    ComponentInfo component;
    hypercore::Rat edge_floor = 0;
    bool m1_vertices = false;
    bool m1_edges = false;
    bool m1_quarter = false;
    long long matching_size = 0;
    hypercore::Rat matching_required = 0;
    std::array<int, 3> triangle{-1, -1, -1};
    bool m3 = false;
    bool m2() const { return hypercore::Rat(matching_size) >= matching_required; }
    bool ok() const { return m1_vertices && m1_edges && m1_quarter && m2() && m3; }
};

GraphStructureReport structure_single(const hypercore::Hypergraph& g2,
                                      const hypercore::Rat& gamma);

// Three dense 2-graphs on one vertex set: each gets the single-graph
// checks, and additionally two of the three largest components must share
// an edge. The first sharing pair found (and a shared edge) is recorded.
struct TripleStructureReport {
    std::array<GraphStructureReport, 3> graphs;
    int share_first = -1;
    int share_second = -1;
    hypercore::Edge shared_edge;
    bool m4 = false;
    bool ok() const {
        return m4 && graphs[0].ok() && graphs[1].ok() && graphs[2].ok();
    }
};

TripleStructureReport structure_checks(const hypercore::Hypergraph& g1,
                                       const hypercore::Hypergraph& g2,
                                       const hypercore::Hypergraph& g3,
                                       const hypercore::Rat& gamma);

// a majorizes b: equal length and total, and every prefix sum of a (both
// sorted in decreasing order) at least the matching prefix sum of b.
bool majorizes(const std::vector<hypercore::Rat>& a, const std::vector<hypercore::Rat>& b);

// Majorization pushes convex sums upward: sum f(a_i) >= sum f(b_i) for
// convex f whenever a majorizes b. The caller supplies f; convexity is the
// caller's promise, and the comparison itself is exact.
bool karamata_holds(const std::vector<hypercore::Rat>& a,
                    const std::vector<hypercore::Rat>& b,
                    const std::function<hypercore::Rat(const hypercore::Rat&)>& f);

// Turns pairwise-disjoint edges into an omega-fractional matching by
// weighting each edge with its lightest vertex. Always valid: the lightest
// vertex caps the edge below every member's budget, and disjointness keeps
// each budget used at most once.
FractionalMatching matching_to_fractional(const hypercore::Hypergraph& g,
                                          const std::vector<hypercore::Edge>& chosen,
                                          const std::vector<hypercore::Rat>& omega);

// Quarter-size guarantee on a dense 2-graph: a maximum integral matching of
// the largest component, weighted by lightest vertices, reaches size n/4
// whenever the graph is dense enough, the weights sum to (1-eta)n or more,
// and eta <= gamma/6 (which keeps the weight deficit below the matching
// surplus). Out-of-hypothesis inputs are still processed and reported.
struct QuarterMatching {
    std::vector<hypercore::Edge> integral;
    FractionalMatching fractional;
    hypercore::Rat required = 0; // n/4
    bool dense_enough = false;
    bool weight_ok = false; // sum(omega) >= (1-eta) n
    bool slack_ok = false;  // eta <= gamma/6
    bool in_hypothesis = false;
    bool ok = false; // !in_hypothesis or fractional.size >= required
};

QuarterMatching quarter_matching(const hypercore::Hypergraph& g2,
                                 const std::vector<hypercore::Rat>& omega,
                                 const hypercore::Rat& gamma, const hypercore::Rat& eta);

} // namespace matching
