#pragma once

#include <optional>
#include <vector>

#include "homomorphism/perm.hpp"
#include "homomorphism/rotate.hpp"
#include "hypercore/hypergraph.hpp"

namespace homomorphism {

// Toolbox for deriving new rotation facts from established ones without
// rerunning the dynamic program. Every rule here is exact: the derived
// radius is valid whenever the input radii are, and tests re-verify the
// outputs against the dynamic program on small graphs.

// [C1,*,s1] and [C2,*,s2] on the same ordered edge give [C1+C2,*,s1 s2].
RotationWitness compose_rotations(const RotationWitness& a,
                                  const RotationWitness& b);

// Reading the same edge in a different order: if e is [C,*,s]-rotatable and
// e'[i] = e[pi[i]], then e' is [C,*,pi^-1 s pi]-rotatable.
RotationWitness reorder_witness(const RotationWitness& w, const Perm& pi);

// Cheapest known radius for every permutation generated by composing the
// given witnesses (all on one ordered edge) together with the free seed
// [1,*,id].
struct ClosureResult {
    std::vector<Perm> perms;          // all of S_k, enumeration order
    std::vector<long long> radius;    // -1 when not generated
    bool complete = false;            // every permutation reached
    long long full_radius = -1;       // max radius when complete
};

ClosureResult generator_closure(int k,
                                const std::vector<RotationWitness>& generators);

RotationWitness closure_full_witness(const std::vector<int>& rooted,
                                     const ClosureResult& closure);

// k = 4 walk machinery. A tight walk w_1..w_{4l} has every four consecutive
// vertices forming an edge; it runs from the first window to the last.

// Even-length pair walk inside a 2-graph: a sequence p_1..p_{2l} with every
// consecutive pair an edge, starting (a1,a2) and ending (b1,b2). Returns
// nullopt when the endpoints sit in different components or when every
// connecting walk has odd length (bipartite parity obstruction).
std::optional<std::vector<int>> even_pair_walk(
    const hypercore::Hypergraph& pair_graph, int a1, int a2, int b1, int b2);

// Lifts a pair walk to a tight walk: block i reads (u1, u2, p_{2i-1}, p_{2i}).
std::vector<int> interleave_pair_walk(int u1, int u2,
                                      const std::vector<int>& pair_walk);

// Transfers a rotation fact along a tight walk. With rho_e, rho_f read off
// the boundary windows (walk[i] = e[rho_e[i]], last window against the
// target order), an input [C,*,s] on the first edge yields
// [4C+8l, *, rho^-1 s] on the target order, rho = rho_e rho_f^-1.
RotationWitness tight_walk_transfer(const hypercore::Hypergraph& g,
                                    const std::vector<int>& walk,
                                    const RotationWitness& on_first,
                                    const std::vector<int>& target_order);

}  // namespace homomorphism
