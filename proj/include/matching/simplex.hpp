#pragma once

#include <vector>

#include "hypercore/rational.hpp"

namespace matching {

// A linear program in the packing form used throughout this library:
//   maximise  objective . x
//   subject to  rows[i] . x <= rhs[i]  for every row i,  x >= 0.
// All right-hand sides must be nonnegative so that the slack basis is
// feasible; the fractional-matching programs built here always are.
struct LinearProgram {
    int vars = 0;
    std::vector<std::vector<hypercore::Rat>> rows; // dense, rows[i].size() == vars
    std::vector<hypercore::Rat> rhs;
    std::vector<hypercore::Rat> objective;
};

// Optimal primal/dual pair with equal objective values. Every solve checks
// the pair before returning: primal feasibility, dual feasibility
// (dual >= 0 and rows^T dual >= objective componentwise), and exact equality
// of the two objectives. A violated check throws, so a returned solution is
// a complete optimality certificate rather than a best-effort answer.
struct LinearSolution {
    std::vector<hypercore::Rat> primal; // one value per variable
    std::vector<hypercore::Rat> dual;   // one value per row
    hypercore::Rat value = 0;
    long long pivots = 0;
};

// Dense tableau simplex over exact rationals. Bland's rule picks the
// lowest-index improving column and the lowest-index basic variable among
// ratio ties, which rules out cycling, so termination needs no pivot cap.
// Throws std::invalid_argument on malformed input (negative rhs, ragged
// rows) and std::logic_error if the program is unbounded or the final
// certificate fails to validate.
LinearSolution solve_exact(const LinearProgram& lp);

} // namespace matching
