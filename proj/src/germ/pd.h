// Canonical inverse of a triangular germ (Poincaré–Dulac shape): coordinate
// j is (λ_j + x_j) ∧ P_j(x_1,…,x_{j−1}) with finite λ_j, and the inverse is
// built by the recursion g_j(y) = (y_j ∧ P_j(g_1(y),…,g_{j−1}(y))) − λ_j.
#pragma once

#include "germ/germ.h"

namespace tropgerm {

// True iff every coordinate j has the unit monomial x_j with a finite
// coefficient and all its other monomials only involve x_1,…,x_{j−1}.
bool is_triangular(const Germ& f);

// The recursive inverse; rejects non-triangular input.
Germ pd_inverse(const Germ& f);

}  // namespace tropgerm
