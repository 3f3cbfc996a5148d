// Tropical germs at infinity: d coordinates, each a tropical polynomial in
// d variables with no constant term (so ∞ is fixed), composition, the
// linear part, and the contracting test.
#pragma once

#include "core/newton.h"
#include "core/poly.h"
#include "linalg/matrix.h"

#include <vector>

namespace tropgerm {

struct Germ {
    int dim = 0;
    std::vector<TropPoly> coords;

    Germ() = default;
    Germ(int d, std::vector<TropPoly> cs);  // validates
};

// Checks the germ invariants: positive dimension, one non-empty d-variable
// polynomial per coordinate, no constant terms.
void validate_germ(const Germ& f);

Germ identity_germ(int d);

// Coordinatewise essential form.
Germ germ_essential(const Germ& f);

// Standard composition a∘b: substitutes b's coordinates into each
// coordinate of a (so (compose_germ(a,b))(x) = a(b(x))).
Germ compose_germ(const Germ& a, const Germ& b);

// Coordinatewise germ equality at ∞.
bool germ_equal(const Germ& a, const Germ& b);

// Entry (i,j) = coefficient of the j-th unit exponent in coordinate i
// (∞ when absent).
TropMatrix linear_part(const Germ& f);

// True iff every tropical eigenvalue of the linear part is > 0, with ∞
// counting as positive.
bool is_contracting(const Germ& f);

}  // namespace tropgerm
