#pragma once

#include <map>
#include <vector>

#include "hypercore/hypergraph.hpp"

namespace robustgraph {

// Selection made at one (k-2)-set A: the largest connected component of the
// 2-graph link of A, kept as its vertex set and pair list. When several
// components share the maximum order the one containing the smallest vertex
// wins and the tie is flagged; the hypotheses that make the choice unique in
// the dense regime do not hold for arbitrary inputs.
struct ComponentChoice {
    hypercore::Edge a;
    std::vector<int> vertices;            // sorted
    std::vector<hypercore::Edge> pairs;   // sorted pair list
    bool tie = false;
};

// The robust spanning subgraph together with full provenance: which
// component selections produced each edge. gstar shares the vertex set of
// base and E(gstar) is the union over A of {A + pair : pair in C_A}.
struct RobustSubgraph {
    hypercore::Hypergraph base;
    hypercore::Hypergraph gstar;
    std::vector<ComponentChoice> components;        // lex order of A
    std::map<hypercore::Edge, int> component_index; // A -> index into components
    std::vector<std::vector<int>> component_edges;  // per component: gstar edge ids
    std::vector<std::vector<int>> provenance;       // per gstar edge: component ids
};

RobustSubgraph build_gstar(const hypercore::Hypergraph& g);

// E_A for any set A with |A| <= k-2: the gstar edges owning a provenance
// witness that contains A. |A| = k-2 recovers the component selection at A,
// and the empty set recovers all of gstar. Sorted edge indices.
std::vector<int> label_edge_set(const RobustSubgraph& rs, const hypercore::Edge& a);

// Replays the construction from scratch and checks the membership
// invariants: the replay must reproduce gstar, the components and the
// provenance bit for bit, every gstar edge needs a witness, and each
// witness must certify its edge.
bool provenance_sound(const RobustSubgraph& rs);

// Containment of the doubly-derived link: the robust subgraph of the link
// of B in base sits inside the link of B in gstar. Checked edge by edge for
// one B with |B| <= k-4; the witness is an offending edge when it fails.
struct ContainmentCheck {
    hypercore::Edge b;
    bool holds = false;
    hypercore::Edge witness;
};

ContainmentCheck containment_check(const RobustSubgraph& rs, const hypercore::Edge& b);

} // namespace robustgraph
