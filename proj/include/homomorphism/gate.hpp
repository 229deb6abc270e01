#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypercore/hypergraph.hpp"

namespace homomorphism {

// One graph/edge pair fed through the dynamic-programming vs brute-force
// cross-check.
struct GateInstance {
    hypercore::Hypergraph graph;
    int edge_idx = 0;
    std::string name;
};

struct GateReport {
    long long instances = 0;
    long long checks = 0;
    long long disagreements = 0;
    std::vector<std::string> details;  // one line per disagreement

    bool ok() const { return instances > 0 && disagreements == 0; }
};

// Compares, per instance, every reachability and rotation verdict the
// dynamic programs produce against independent evaluation of the full
// canonical tree catalogue with the given caps. Both directions are
// checked: a verdict that holds must be witnessed by every catalogued
// tree, and a verdict that fails must be refuted by some catalogued tree
// (the chain-shaped trees in the catalogue are exact refuters for radii
// within the caps).
GateReport oracle_equivalence(const std::vector<GateInstance>& instances,
                              int depth_cap, int branch_cap,
                              std::uint64_t seed);

// Deterministic default instance set used when a caller needs the gate but
// the harness has not supplied one.
std::vector<GateInstance> default_gate_instances();

// Process-wide flag: has any gate run finished clean?
bool gate_passed();

// Runs the default gate once per process if nothing has passed yet; throws
// if the cross-check disagrees. Certification entry points call this before
// trusting any dynamic-programming verdict.
void require_gate();

}  // namespace homomorphism
