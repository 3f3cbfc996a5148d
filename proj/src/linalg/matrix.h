// Tropical square matrices: determinant, degeneracy, sign, minors,
// characteristic polynomial, eigenvalues, trace, and the generic inverse.
//
// Everything permutation-based is decided by exhaustive enumeration, capped
// at d = 8 (40320 permutations) with an explicit capability error above.
#pragma once

#include "core/poly.h"
#include "core/scalar.h"

#include <vector>

namespace tropgerm {

inline constexpr int kMatrixEnumerationBound = 8;

struct TropMatrix {
    int d = 0;
    std::vector<std::vector<TropScalar>> a;  // d rows of d entries

    TropMatrix() = default;
    explicit TropMatrix(int dim);
    const TropScalar& at(int i, int j) const { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    TropScalar& at(int i, int j) { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
};

bool operator==(const TropMatrix& x, const TropMatrix& y);

using Permutation = std::vector<int>;  // images of 0..d-1

enum class Degeneracy { NonDegenerate, WeaklyNonDegenerateOnly, Degenerate };

struct DegeneracyClass {
    Degeneracy tag = Degeneracy::Degenerate;
    std::vector<Permutation> witnesses;  // all minimizing permutations (finite det)
};

enum class TropSign { Positive, Negative, Undetermined };

// min over permutations σ of Σ_i a_{i,σ(i)}; ∞ when every permutation
// meets an ∞ entry. The empty 0×0 matrix has determinant 0 (empty product).
TropScalar det_trop(const TropMatrix& m);

// Exact count of minimizing permutations: Degenerate iff det = ∞,
// NonDegenerate iff exactly one witness, weakly-only otherwise.
DegeneracyClass degeneracy(const TropMatrix& m);

// Sign read off the witness permutation parities; requires finite det.
TropSign sign_trop(const TropMatrix& m);

// Minor keeping the given row and column index sets (ascending order).
TropMatrix submatrix(const TropMatrix& m, const std::vector<int>& rows,
                     const std::vector<int>& cols);

// True iff every square minor with finite tropical determinant attains it
// by exactly one permutation (an ∞ determinant imposes nothing).
bool all_minors_nondegenerate(const TropMatrix& m);

// Tropical characteristic polynomial: det of A with a_ii replaced by
// a_ii ∧ λ, as a univariate polynomial. Coefficient of λ-degree k is the
// minimum over k-subsets S of the diagonal of the principal minor
// determinant with rows/columns S deleted; the degree-d coefficient is 0.
TropPoly char_poly(const TropMatrix& m);

// Roots of the characteristic polynomial with multiplicities, read off the
// lower convex hull of the coefficient points (k, c_k): each hull edge
// contributes its negated slope with multiplicity equal to its horizontal
// length; a vanishing tail (c_k = ∞ for k < k_min) contributes k_min roots
// at ∞. Sorted ascending, ∞ last.
std::vector<TropScalar> eigenvalues(const TropMatrix& m);

// Minimum of the diagonal.
TropScalar trace_trop(const TropMatrix& m);

// Generic inverse of a weakly non-degenerate matrix: entry (i,j) is the
// determinant of the minor deleting row j and column i, minus det(A).
TropMatrix generic_inverse_linear(const TropMatrix& m);

}  // namespace tropgerm
