#include "matching/simplex.hpp"

#include <stdexcept>
#include <string>

namespace matching {

using hypercore::Rat;

namespace {

void check_input(const LinearProgram& lp) {
    if (lp.vars < 0) throw std::invalid_argument("simplex: negative variable count");
    if (static_cast<int>(lp.objective.size()) != lp.vars)
        throw std::invalid_argument("simplex: objective length mismatch");
    if (lp.rows.size() != lp.rhs.size())
        throw std::invalid_argument("simplex: row/rhs length mismatch");
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        if (static_cast<int>(lp.rows[i].size()) != lp.vars)
            throw std::invalid_argument("simplex: ragged row " + std::to_string(i));
        if (lp.rhs[i] < 0)
            throw std::invalid_argument("simplex: negative rhs in row " + std::to_string(i));
    }
}

// The returned pair is only trusted after this audit; the solver itself is
// then never a single point of failure in downstream verdicts.
void certify(const LinearProgram& lp, const LinearSolution& sol) {
    const int m = static_cast<int>(lp.rows.size());
    Rat primal_value = 0;
    for (int j = 0; j < lp.vars; ++j) {
        if (sol.primal[j] < 0) throw std::logic_error("simplex: negative primal variable");
        primal_value += lp.objective[j] * sol.primal[j];
    }
    for (int i = 0; i < m; ++i) {
        Rat lhs = 0;
        for (int j = 0; j < lp.vars; ++j) lhs += lp.rows[i][j] * sol.primal[j];
        if (lhs > lp.rhs[i]) throw std::logic_error("simplex: primal constraint violated");
        if (sol.dual[i] < 0) throw std::logic_error("simplex: negative dual variable");
    }
    Rat dual_value = 0;
    for (int i = 0; i < m; ++i) dual_value += lp.rhs[i] * sol.dual[i];
    for (int j = 0; j < lp.vars; ++j) {
        Rat covered = 0;
        for (int i = 0; i < m; ++i) covered += lp.rows[i][j] * sol.dual[i];
        if (covered < lp.objective[j]) throw std::logic_error("simplex: dual constraint violated");
    }
    if (primal_value != dual_value || primal_value != sol.value)
        throw std::logic_error("simplex: primal and dual objectives disagree");
}

} // namespace

LinearSolution solve_exact(const LinearProgram& lp) {
    check_input(lp);
    const int n = lp.vars;
    const int m = static_cast<int>(lp.rows.size());

    LinearSolution sol;
    sol.primal.assign(n, 0);
    sol.dual.assign(m, 0);

    if (n == 0 || m == 0) {
        // Without rows every positive-cost column is unbounded; without
        // columns the optimum is the empty sum.
        if (m == 0)
            for (int j = 0; j < n; ++j)
                if (lp.objective[j] > 0) throw std::logic_error("simplex: unbounded program");
        certify(lp, sol);
        return sol;
    }

    // Tableau layout: columns [0,n) structural, [n,n+m) slack, column n+m the
    // right-hand side. The cost row stores negated reduced costs, so the
    // optimum is reached once it is componentwise nonnegative and the
    // accumulated right-hand entry equals the objective value.
    const int cols = n + m + 1;
    std::vector<std::vector<Rat>> t(m + 1, std::vector<Rat>(cols, 0));
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = lp.rows[i][j];
        t[i][n + i] = 1;
        t[i][n + m] = lp.rhs[i];
        basis[i] = n + i;
    }
    for (int j = 0; j < n; ++j) t[m][j] = -lp.objective[j];

    for (;;) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (t[m][j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;

        int leave = -1;
        Rat best_ratio = 0;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][n + m] / t[i][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) throw std::logic_error("simplex: unbounded program");

        const Rat pivot = t[leave][enter];
        for (int j = 0; j < cols; ++j) t[leave][j] /= pivot;
        for (int i = 0; i <= m; ++i) {
            if (i == leave) continue;
            const Rat factor = t[i][enter];
            if (factor == 0) continue;
            for (int j = 0; j < cols; ++j) t[i][j] -= factor * t[leave][j];
        }
        basis[leave] = enter;
        ++sol.pivots;
    }

    for (int i = 0; i < m; ++i)
        if (basis[i] < n) sol.primal[basis[i]] = t[i][n + m];
    // At optimality the slack columns of the cost row carry the dual values.
    for (int i = 0; i < m; ++i) sol.dual[i] = t[m][n + i];
    sol.value = t[m][n + m];

    certify(lp, sol);
    return sol;
}

} // namespace matching
