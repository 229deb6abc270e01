#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hypercore/rational.hpp"
#include "robustgraph/colouring.hpp"
#include "robustgraph/gstar.hpp"
#include "robustgraph/reachmatrix.hpp"

namespace robustgraph {

// Pair graph attached to one shadow set A. The labelling walks the sets of
// the mod-2 shadow from size k-2 downward; at each A it either keeps the
// whole 2-shadow of the link (every member of E_A already reaches every
// other) or narrows to the pairs induced on the second-widest monochromatic
// component of the colouring at A.
struct KGraph {
    hypercore::Edge a;
    std::vector<int> vertices;          // sorted, every vertex meets a pair
    std::vector<hypercore::Edge> pairs; // sorted pair list
    bool full = false;                  // pairs equal the whole 2-shadow at A
    int case_tag = 0;                   // 0 bottom level, 1 kept whole, 2 narrowed
};

// E_A split by pairing chains: a member is plus when some sequential
// pairing of its vertices beyond A stays inside the K graphs of its
// prefixes, minus when some pairing leaves them. Both can hold at once.
struct LabelSets {
    std::vector<int> members; // E_A as sorted gstar edge ids
    std::vector<int> plus;
    std::vector<int> minus;
};

// Verification record for one A. The polynomial radius budgets act as caps
// at this scale; every check records the radius it actually needed, and a
// fixpoint refusal is a genuine refutation rather than a budget timeout.
struct ACheck {
    hypercore::Edge a;
    int case_tag = 0;
    bool a3_ok = false;     // |V(K_A)| against (1/2 + 3 alpha) n
    bool a4_ok = false;     // kept-whole case: members mutually reachable
    long long a4_radius = -1;
    bool a51_found = false; // narrowed case: witnessed unreachable member pair
    std::array<int, 2> a51_witness{{-1, -1}};
    bool a52_ok = false;    // narrowed case: plus labels mutually reachable
    long long a52_radius = -1;
    bool a53_ok = false;    // narrowed case: minus labels reachable from every edge
    long long a53_radius = -1;
    long long phi_radius = -1; // widest radius used when joining pair colours
};

struct LabelStructure {
    hypercore::Rat alpha;
    std::vector<hypercore::Edge> a_family; // processed sets, larger sizes first
    std::map<hypercore::Edge, KGraph> K;
    std::map<hypercore::Edge, LabelSets> labels;
    std::map<hypercore::Edge, ColouringAnalysis> colourings; // narrowed cases
    std::vector<ACheck> checks;
    std::vector<std::string> anomalies;

    // odd k only: vertex classes over the non-isolated part of gstar
    bool has_psi = false;
    std::vector<int> psi;
    ColouringAnalysis psi_analysis;
};

// Requires the matrix of the same gstar. All reachability verdicts run on
// gstar; the pair graphs and shadows come from the base graph.
LabelStructure build_labels(const RobustSubgraph& rs, const hypercore::Rat& alpha,
                            const ReachMatrix& matrix);

} // namespace robustgraph
