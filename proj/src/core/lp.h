// Exact linear programming over the rationals.
//
// Solves  maximize c·x  subject to  A x <= b  with x free, by a dense
// two-phase simplex using Bland's rule (guaranteed termination, no
// numerical tolerance anywhere). Instances in this library are tiny
// (tens of rows/columns), so a dense exact tableau is the right tool.
#pragma once

#include "core/rational.h"

#include <vector>

namespace tropgerm {

enum class LpStatus { Infeasible, Optimal, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat value;               // objective value, valid iff status == Optimal
    std::vector<Rat> point;  // optimizer, valid iff status == Optimal
};

// maximize c·x subject to A x <= b, x ∈ Q^n free.
// A has m rows of length n; b has length m; c has length n.
LpResult lp_maximize(const std::vector<std::vector<Rat>>& A,
                     const std::vector<Rat>& b,
                     const std::vector<Rat>& c);

// Convenience: is {x : A x <= b} nonempty?
bool lp_feasible(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b);

}  // namespace tropgerm
