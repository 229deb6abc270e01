#pragma once

#include <vector>

#include "hypercore/hypergraph.hpp"
#include "matching/fractional.hpp"

namespace matching {

// Downward induction certifying a perfect omega-fractional matching on a
// robust subgraph gstar of a base graph. For j = k-2 down to 0 and every
// j-set S in the j-th shadow of the base, the link of S in gstar must
// admit an omega-fractional matching of size sum(omega)/k; each claim is
// decided by its own exact solve. The j = 0 instance is gstar itself, where
// reaching sum(omega)/k forces every vertex budget tight, i.e. perfection.
// Isolated-vertex counts per link are recorded against the alpha*n budget
// the perturbed-degree condition promises; members of S are not counted,
// since the link construction leaves them edgeless by definition.

struct ChainEntry {
    hypercore::Edge set;
    hypercore::Rat lp_size = 0;
    long long isolated = 0;
    bool ok = false; // lp_size >= sum(omega)/k
};

struct ChainLevel {
    int j = 0;
    long long sets = 0;
    hypercore::Rat worst_size = 0;
    hypercore::Edge worst_set;
    long long max_isolated = 0;
    bool isolated_bounded = true;       // every count <= alpha * n
    std::vector<ChainEntry> violations; // entries that fell short
    bool ok = false;
};

struct ChainReport {
    hypercore::Rat total_weight = 0;
    hypercore::Rat required = 0;       // total_weight / k
    bool weights_admissible = false;   // omega in [0,1], zero on isolated vertices of base
    bool budget_ok = false;            // total_weight >= (1-eta) n
    std::vector<ChainLevel> levels;    // j = k-2 first, j = 0 last
    FractionalMatching top;            // optimum on gstar itself
    bool perfect = false;
    bool ok = false; // admissible, budgeted, and every level ok
};

ChainReport matching_chain(const hypercore::Hypergraph& gstar,
                           const hypercore::Hypergraph& base,
                           const std::vector<hypercore::Rat>& omega,
                           const hypercore::Rat& alpha, const hypercore::Rat& eta);

} // namespace matching
