#include "matching/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace matching {

using hypercore::Edge;
using hypercore::Hypergraph;
using hypercore::Rat;

ChainReport matching_chain(const Hypergraph& gstar, const Hypergraph& base,
                           const std::vector<Rat>& omega, const Rat& alpha,
                           const Rat& eta) {
    if (gstar.k != base.k || gstar.n != base.n)
        throw std::invalid_argument("matching_chain: gstar and base must share shape");
    if (static_cast<int>(omega.size()) != base.n)
        throw std::invalid_argument("matching_chain: omega length mismatch");
    if (base.k < 2) throw std::invalid_argument("matching_chain: k must be at least 2");

    ChainReport rep;
    rep.weights_admissible = true;
    for (int v = 0; v < base.n; ++v) {
        const Rat& w = omega[static_cast<std::size_t>(v)];
        if (w < 0 || w > 1) rep.weights_admissible = false;
        if (base.is_isolated(v) && w != 0) rep.weights_admissible = false;
        rep.total_weight += w;
    }
    rep.required = rep.total_weight / base.k;
    rep.budget_ok = rep.total_weight >= (Rat(1) - eta) * Rat(base.n);

    const Rat isolated_budget = alpha * Rat(base.n);

    bool levels_ok = true;
    for (int j = base.k - 2; j >= 0; --j) {
        ChainLevel level;
        level.j = j;

        const Hypergraph sets = hypercore::shadow(base, j);
        bool first = true;
        for (const Edge& s : sets.edges) {
            const Hypergraph lk = hypercore::link(gstar, s);
            const FractionalMatching fm = max_fractional_matching(lk, omega);

            ChainEntry entry;
            entry.set = s;
            entry.lp_size = fm.size;
            for (int v = 0; v < base.n; ++v) {
                if (std::find(s.begin(), s.end(), v) != s.end()) continue;
                if (lk.is_isolated(v)) ++entry.isolated;
            }
            entry.ok = fm.size >= rep.required;

            ++level.sets;
            if (first || entry.lp_size < level.worst_size) {
                level.worst_size = entry.lp_size;
                level.worst_set = s;
            }
            first = false;
            level.max_isolated = std::max(level.max_isolated, entry.isolated);
            if (!s.empty() && Rat(entry.isolated) > isolated_budget)
                level.isolated_bounded = false;
            if (!entry.ok) level.violations.push_back(entry);

            if (j == 0) {
                rep.top = fm;
                rep.perfect = is_perfect(gstar, omega, fm);
            }
        }
        level.ok = level.sets > 0 && level.violations.empty();
        levels_ok = levels_ok && level.ok;
        rep.levels.push_back(std::move(level));
    }

    rep.ok = rep.weights_admissible && rep.budget_ok && levels_ok && rep.perfect;
    return rep;
}

} // namespace matching
