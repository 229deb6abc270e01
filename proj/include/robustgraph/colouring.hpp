#pragma once

#include <array>
#include <string>
#include <vector>

#include "hypercore/hypergraph.hpp"
#include "hypercore/rational.hpp"

namespace robustgraph {

// An edge-coloured 2-graph given as an explicit pair list; colour[i]
// colours pairs[i]. Vertices outside every pair are ignored by the
// analysis, bounds are evaluated against n.
struct ColouredPairs {
    int n = 0;
    std::vector<hypercore::Edge> pairs;
    std::vector<int> colour;
};

// A connected component of one colour class.
struct MonoComponent {
    int colour = -1;
    std::vector<int> vertices;     // sorted
    std::vector<int> pair_indices; // into ColouredPairs::pairs
};

// Structural scan of a coloured pair graph: the two hypotheses that the
// dense regime guarantees (no rainbow triangle, at most two colours at each
// vertex) plus the component profile conclusions that follow from them.
// Violations are reported, never repaired; callers decide whether a failed
// hypothesis or a failed conclusion matters. The same struct also carries
// the verdicts for a vertex colouring, where only the class fields apply.
struct ColouringAnalysis {
    // hypotheses
    bool degree_ok = false;  // every covered vertex meets (1-alpha)n pairs
    bool rainbow_free = true;
    std::array<int, 3> rainbow_witness{{-1, -1, -1}};
    bool locally_two = true;
    int busiest_vertex = -1;
    int busiest_count = 0;
    bool regime = false;     // all three hypotheses hold

    // monochromatic components, widest first, ties toward smaller vertices
    std::vector<MonoComponent> components;
    bool h1_spans = false;       // H_1 covers every covered vertex

    // conclusions
    bool others_disjoint = true;       // spanning case: H_2.. pairwise disjoint
    bool h2_large_and_covering = true; // otherwise: H_2 nearly spans, H_1+H_2 cover
    bool h1_large = true;              // |V(H_1)| >= (1-3 alpha) n
    bool tail_small = true;            // |V(H_i)| <= n/2 for i >= 3
    bool conclusions_ok = false;
    std::vector<std::string> notes;

    // vertex colouring verdicts
    int psi_classes = 0;
    bool psi_two_classes = true;
};

ColouringAnalysis analyse_colouring(const ColouredPairs& c, const hypercore::Rat& alpha);

// classes[v] is the class of vertex v or -1 for vertices outside the
// domain; verifies the two-class bound and reports the class profile.
ColouringAnalysis analyse_vertex_colouring(int n, const std::vector<int>& classes,
                                           const hypercore::Rat& alpha);

} // namespace robustgraph
