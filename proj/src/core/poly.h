// Multivariate min-plus polynomials with exact rational coefficients.
//
// A polynomial is a finite map from exponent vectors (non-negative integers,
// fixed length dim) to finite rational coefficients; an absent exponent has
// coefficient ∞, and the empty map is the constant ∞. The function it
// defines is x ↦ min_I (coef_I + ⟨I, x⟩).
#pragma once

#include "core/rational.h"
#include "core/scalar.h"

#include <cstdint>
#include <map>
#include <vector>

namespace tropgerm {

using Exponent = std::vector<std::int64_t>;

// ⟨I, x⟩ with rational x.
Rat exp_dot(const Exponent& e, const std::vector<Rat>& x);

// J - I entrywise (may be negative).
std::vector<std::int64_t> exp_sub(const Exponent& j, const Exponent& i);

// Componentwise partial order: I ≼ J iff J - I is non-negative entrywise.
bool exp_leq(const Exponent& i, const Exponent& j);

struct TropPoly {
    int dim = 0;
    std::map<Exponent, Rat> terms;

    TropPoly() = default;
    explicit TropPoly(int d) : dim(d) {}

    bool empty() const { return terms.empty(); }

    // Min-merges one term into the map (generic-lift semantics: identical
    // exponents keep the smaller coefficient, never cancel).
    void add_term(const Exponent& e, const Rat& c);

    static TropPoly constant(int dim, const Rat& c);       // exponent 0
    static TropPoly monomial(int dim, Exponent e, Rat c);
    static TropPoly variable(int dim, int j);              // x_j (0-based j)
};

bool operator==(const TropPoly& a, const TropPoly& b);
inline bool operator!=(const TropPoly& a, const TropPoly& b) { return !(a == b); }

// min over terms of coef ⊙ ⟨I, x⟩; any factor with positive exponent at an
// ∞ coordinate makes the term ∞, a zero exponent contributes 0 regardless.
TropScalar trop_eval(const TropPoly& p, const std::vector<TropScalar>& x);
TropScalar trop_eval(const TropPoly& p, const std::vector<Rat>& x);

TropPoly poly_min(const TropPoly& a, const TropPoly& b);  // tropical sum ⊕
TropPoly poly_mul(const TropPoly& a, const TropPoly& b);  // tropical product ⊙
TropPoly poly_pow(const TropPoly& a, std::int64_t k);     // k-fold ⊙, k ≥ 0
TropPoly poly_shift(const TropPoly& a, const Rat& c);     // ⊙ by the constant c

}  // namespace tropgerm
