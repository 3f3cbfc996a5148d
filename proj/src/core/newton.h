// Newton diagrams of tropical polynomials, canonical forms at ∞, and
// generic-lift composition.
//
// Diagram membership, corner detection, essential-term selection, and the
// eval-agreement bound are all decided by exact rational LPs; there is no
// convex-hull code and no floating point.
#pragma once

#include "core/poly.h"

#include <map>
#include <vector>

namespace tropgerm {

enum class MonomialClass { OnDiagramCorner, OnDiagramInterior, AboveDiagram };

struct NewtonData {
    std::vector<Exponent> monomials;         // all exponents of φ, sorted
    std::vector<Exponent> diagram_vertices;  // Vert(φ), sorted
    std::map<Exponent, MonomialClass> classification;
};

// Vert(φ) = { I : ∃ w ≥ 1 with ⟨w, J−I⟩ ≥ 0 for every monomial J };
// a diagram monomial is a corner when some such w separates strictly
// (equivalently, with gap ≥ 1 after scaling). Coefficients play no role.
NewtonData newton_data(const TropPoly& p);

// Restriction of the term map to Vert(φ); keeps coefficients; idempotent.
TropPoly normal_form(const TropPoly& p);

// Keeps exactly the monomials whose strict-minimality region accumulates
// at ∞: one LP per monomial over base point x, recession direction r ≥ 1
// with ⟨J−I, r⟩ ≥ 0 for all J, maximizing the strictness slack δ in
// (φ_J−φ_I) + ⟨J−I, x⟩ ≥ δ for all J ≠ I; kept iff sup δ > 0 (an
// unbounded supremum counts). Defines the same function germ at ∞ as φ.
TropPoly essential_form(const TropPoly& p);

// Same germ at ∞: essential forms agree as term maps.
bool germ_equal(const TropPoly& a, const TropPoly& b);

// A verified rational bound M such that φ, normal_form(φ), essential_form(φ)
// evaluate identically at every point with all coordinates ≥ M. Found by
// doubling and certified with one exact LP per discarded monomial.
Rat agreement_bound(const TropPoly& p);

// Min-plus substitution of g = (g_1, ..., g_d) into φ (d = dim φ): each
// monomial coef ⊙ ⟨I,·⟩ becomes coef ⊙ Σ_k i_k ⊙ g_k expanded
// distributively, identical exponents merged by minimum (generic-lift
// semantics), then reduced to essential form.
TropPoly compose(const TropPoly& phi, const std::vector<TropPoly>& g);

}  // namespace tropgerm
