#pragma once

#include <cstdint>

#include "hypercore/hypergraph.hpp"

namespace hypercore::fixtures {

// Complete k-graph on n vertices.
Hypergraph complete(int k, int n);

// Two vertex-disjoint complete k-graphs on n1 and n2 vertices.
Hypergraph two_cliques(int k, int n1, int n2);

// The parity obstruction: a 4-graph on vertices 0..7 split into halves
// {0..3} and {4..7}, containing every edge meeting the first half in an
// even number of vertices. Its tight components are separated by that
// intersection size, so no loose path crosses between them.
Hypergraph parity();

// Include each k-set independently with probability p (exact rational
// threshold against a 64-bit draw; deterministic for a fixed seed).
Hypergraph random_graph(int k, int n, const Rat& p, std::uint64_t seed);

// Rejection-sample random graphs until the relative ell-degree reaches the
// target. Density is chosen above the target; throws after max_attempts.
Hypergraph random_min_degree(int k, int n, int ell, const Rat& target,
                             std::uint64_t seed, int max_attempts = 64);

} // namespace hypercore::fixtures
