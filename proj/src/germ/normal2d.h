// Dimension-2 normal forms of weakly non-degenerate germs, their
// classification into the three families, and the canonical closed-form
// inverses.
//
// Normal form: f = ((a1 + p1·x1) ∧ (a2 + p2·x2), (b1 + q1·x1) ∧ (b2 + q2·x2))
// with coefficient ∞ exactly where the exponent is ∞, and the min-pair
// conditions p1∧p2 = q1∧q2 = p1∧q1 = p2∧q2 = 1.
#pragma once

#include "germ/germ.h"

#include <cstdint>
#include <optional>

namespace tropgerm {

enum class NormalFamily { Linear, PositiveNonLinear, NegativeNonLinear };

struct Germ2DNormal {
    NormalFamily tag = NormalFamily::Linear;
    TropScalar a1, a2, b1, b2;
    // Exponents; nullopt encodes ∞ (the matching coefficient is then ∞ too).
    std::optional<std::int64_t> p1, p2, q1, q2;
};

struct Classify2DResult {
    bool weakly_nondegenerate = false;
    std::optional<Germ2DNormal> normal;  // engaged iff weakly_nondegenerate
};

// Reduces both coordinates to essential form and extracts the normal-form
// parameters. Any germ whose essential coordinates do not fit the two-term
// axis shape is necessarily degenerate and is reported as such.
Classify2DResult classify_2d(const Germ& f);

// The germ a normal form denotes.
Germ normal_to_germ(const Germ2DNormal& n);

// Linear part [[a1+δ(p1), a2+δ(p2)], [b1+δ(q1), b2+δ(q2)]] with
// δ(p) = 0 for p = 1 and ∞ otherwise.
TropMatrix normal_linear_part(const Germ2DNormal& n);

// The closed-form canonical inverse of a weakly non-degenerate normal form:
// linear family via the generic inverse matrix; positive non-linear
// ((y1 ∧ (a2+p2·y2−p2·b2)) − a1, (y2 ∧ (b1+q1·y1−q1·a1)) − b2); negative
// non-linear ((y2 ∧ (b2+q2·y1−q2·a2)) − b1, (y1 ∧ (a1+p1·y2−p1·b1)) − a2).
Germ canonical_inverse_2d(const Germ2DNormal& n);

// Linear family: unique iff a1+b2 ≠ a2+b1; non-linear families: always.
bool has_unique_formal_inverse(const Germ2DNormal& n);

}  // namespace tropgerm
