#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homomorphism/perm.hpp"
#include "hypercore/hypergraph.hpp"

namespace homomorphism {

// Fixpoint tables for rotation constraints around one ordered edge
// u = (u_0, ..., u_{k-1}) of g and one pin permutation sigma.
//
// dp[m][w][s] says: every rooted loose tree whose root lies in colour class
// s admits a homomorphism sending the root to w and every class-c vertex at
// tree distance >= m to u[sigma[c]]. Level 0 pins everything, so
// dp[0][w][s] = (w == u[sigma[s]]); one level up, some incident edge must
// map the remaining k-1 classes onto feasible children. Homomorphisms may
// reuse vertices, so a single witness edge per state serves every sibling
// subtree at once; this makes the recursion exact, monotone, and saturating
// within n*k rounds. A refutation at the fixpoint is therefore exact.
struct RotationTable {
    int k = 0;
    int n = 0;
    std::vector<int> rooted; // the ordered edge
    Perm sigma;
    std::vector<std::vector<char>> dp; // dp[m]: n*k entries, w*k + s
    int fixpoint = 0;                  // first level equal to its predecessor

    bool at(int m, int w, int s) const {
        const int lvl = m < fixpoint ? m : fixpoint;
        return dp[lvl][w * k + s] != 0;
    }
    // least level admitting (w, s), or nullopt if the fixpoint refuses it
    std::optional<long long> least(int w, int s) const {
        for (int m = 0; m <= fixpoint; ++m)
            if (dp[m][w * k + s]) return m;
        return std::nullopt;
    }
};

RotationTable rotation_table(const hypercore::Hypergraph& g, const std::vector<int>& rooted,
                             const Perm& sigma);

// Witness for a rotation claim on one ordered edge.
//   mode "round":        homomorphisms rooted at rooted[pi[0]] with class-c
//                        pins u[sigma[c]] at distance >= radius;
//   mode "bracket":      all orderings with first element pi[0]; pins follow
//                        the composed permutation sigma-after-ordering;
//   mode "bracket_star": all orderings;
//   mode "full":         all orderings and all pin permutations.
struct RotationWitness {
    std::vector<int> rooted;
    std::string mode;
    Perm pi;    // meaningful for round/bracket
    Perm sigma; // meaningful except for full
    long long radius = 0;
    std::string method; // how the witness was produced ("dp", "seed", "compose", ...)
};

// Query cache for one (graph, ordered edge): builds sigma-tables on demand.
class RotationContext {
  public:
    RotationContext(const hypercore::Hypergraph& g, std::vector<int> rooted);

    const hypercore::Hypergraph& graph() const { return *g_; }
    const std::vector<int>& rooted() const { return rooted_; }

    const RotationTable& table(const Perm& sigma);

    // least radii for each mode; nullopt when the fixpoint refutes the claim
    std::optional<long long> least_round(const Perm& pi, const Perm& sigma);
    std::optional<long long> least_bracket(int first, const Perm& sigma);
    std::optional<long long> least_bracket_star(const Perm& sigma);
    std::optional<long long> least_full();

    bool holds(const RotationWitness& w);

  private:
    const hypercore::Hypergraph* g_;
    std::vector<int> rooted_;
    std::map<Perm, RotationTable> tables_;
};

// One-shot verification against a fresh context.
bool verify_witness(const hypercore::Hypergraph& g, const RotationWitness& w);

// Theoretical caps recorded in reports (saturation always ends far below).
hypercore::BigInt rotation_cap_coarse(int n, int k);   // n^{4k}
hypercore::BigInt rotation_cap_refined(int n, int k);  // 10^7 k! n^4

} // namespace homomorphism
