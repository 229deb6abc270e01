#include "matching/fractional.hpp"

#include <stdexcept>

namespace matching {

using hypercore::Hypergraph;
using hypercore::Rat;

std::vector<Rat> uniform_weights(int n) {
    return std::vector<Rat>(static_cast<std::size_t>(n), Rat(1));
}

namespace {

void check_omega(const Hypergraph& g, const std::vector<Rat>& omega) {
    if (static_cast<int>(omega.size()) != g.n)
        throw std::invalid_argument("fractional: omega length mismatch");
    for (const Rat& w : omega)
        if (w < 0 || w > 1) throw std::invalid_argument("fractional: omega outside [0,1]");
}

Rat total_weight(const std::vector<Rat>& omega) {
    Rat s = 0;
    for (const Rat& w : omega) s += w;
    return s;
}

} // namespace

bool is_fractional_matching(const Hypergraph& g, const std::vector<Rat>& omega,
                            const std::vector<Rat>& weights) {
    if (weights.size() != g.edges.size()) return false;
    for (const Rat& x : weights)
        if (x < 0) return false;
    std::vector<Rat> load(static_cast<std::size_t>(g.n), Rat(0));
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        for (int v : g.edges[e]) load[static_cast<std::size_t>(v)] += weights[e];
    for (int v = 0; v < g.n; ++v)
        if (load[static_cast<std::size_t>(v)] > omega[static_cast<std::size_t>(v)]) return false;
    return true;
}

bool is_perfect(const Hypergraph& g, const std::vector<Rat>& omega,
                const FractionalMatching& m) {
    return m.size == total_weight(omega) / g.k;
}

FractionalMatching max_fractional_matching(const Hypergraph& g,
                                           const std::vector<Rat>& omega) {
    check_omega(g, omega);

    LinearProgram lp;
    lp.vars = static_cast<int>(g.edges.size());
    lp.objective.assign(static_cast<std::size_t>(lp.vars), Rat(1));
    lp.rows.assign(static_cast<std::size_t>(g.n),
                   std::vector<Rat>(static_cast<std::size_t>(lp.vars), Rat(0)));
    lp.rhs = omega;
    for (int e = 0; e < lp.vars; ++e)
        for (int v : g.edges[static_cast<std::size_t>(e)])
            lp.rows[static_cast<std::size_t>(v)][static_cast<std::size_t>(e)] = 1;

    const LinearSolution sol = solve_exact(lp);

    FractionalMatching out;
    out.weights = sol.primal;
    out.dual = sol.dual;
    out.size = sol.value;
    out.pivots = sol.pivots;
    if (!is_fractional_matching(g, omega, out.weights))
        throw std::logic_error("fractional: solver returned an invalid matching");
    out.perfect = is_perfect(g, omega, out);
    return out;
}

LinkLiftReport link_lift(const Hypergraph& g, const std::vector<Rat>& omega,
                         const Rat& m) {
    check_omega(g, omega);

    LinkLiftReport rep;
    rep.target = m;
    rep.total_weight = total_weight(omega);
    rep.budget_ok = m <= rep.total_weight / g.k;

    bool saw_link = false;
    for (int v = 0; v < g.n; ++v) {
        if (g.is_isolated(v)) continue;
        const Hypergraph lk = hypercore::link(g, {v});
        const FractionalMatching fm = max_fractional_matching(lk, omega);
        if (!saw_link || fm.size < rep.min_link_size) rep.min_link_size = fm.size;
        saw_link = true;
        if (fm.size < m) rep.failing.push_back(v);
    }

    rep.hypothesis = rep.budget_ok && rep.failing.empty();
    rep.realised = max_fractional_matching(g, omega);
    rep.conclusion = rep.realised.size >= m;
    rep.consistent = !rep.hypothesis || rep.conclusion;
    if (!rep.consistent)
        throw std::logic_error("fractional: link hypothesis held but the lift fell short");
    return rep;
}

} // namespace matching
