// Tropical divisors in the plane, monomialization data for germs with a
// computable canonical inverse, sampled strict-transform verification, the
// two-dimensional dynamical classification, the parallel-diagram cone test,
// and towers of iterated modification functions.
#pragma once

#include "core/poly.h"
#include "germ/germ.h"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropgerm {

// ---- weighted corner-locus curves in the plane -----------------------------

enum class CurveCellKind { Segment, Ray };

// One cell of a weighted rational polyhedral curve. A segment stores its two
// endpoints with a lexicographically before b and the primitive integer
// direction from a to b; a ray stores its finite endpoint in a (b repeats a)
// and points outward along direction. Weights are positive integers.
struct CurveCell {
    CurveCellKind kind = CurveCellKind::Segment;
    std::array<Rat, 2> a{Rat(0), Rat(0)};
    std::array<Rat, 2> b{Rat(0), Rat(0)};
    std::array<std::int64_t, 2> direction{0, 0};
    std::int64_t weight = 1;
};

bool operator==(const CurveCell& x, const CurveCell& y);
inline bool operator!=(const CurveCell& x, const CurveCell& y) { return !(x == y); }

// A weighted rational curve: the finite endpoints of all cells (sorted and
// deduplicated) plus the cells in a canonical order, so equal curves compare
// equal memberwise. An unclipped line is stored as two opposite rays from a
// canonical anchor: its crossing with {x1 = 0}, or with {x2 = 0} when the
// line is vertical.
struct PolyhedralCurve2D {
    std::vector<std::array<Rat, 2>> vertices;
    std::vector<CurveCell> cells;
};

bool operator==(const PolyhedralCurve2D& x, const PolyhedralCurve2D& y);
inline bool operator!=(const PolyhedralCurve2D& x, const PolyhedralCurve2D& y) {
    return !(x == y);
}

// Corner locus of a two-variable polynomial over the whole plane. Terms that
// are nowhere uniquely minimal are discarded first (they never move the
// minimum); each cell is then the locus where a pair of surviving terms ties
// for the minimum on a set with non-empty relative interior, clipped by the
// remaining terms. Its weight is the component gcd of the exponent difference
// of the tying pair (the lattice length of the dual edge of the
// coefficient-induced Newton subdivision). A polynomial whose minimum is
// achieved by a single term everywhere yields the empty curve. Rejects
// polynomials that are empty or not in two variables.
PolyhedralCurve2D divisor_2d(const TropPoly& phi);

// Balancing test: at every finite vertex the weight-scaled primitive
// directions of the incident cells (segments counted at both endpoints,
// pointing away from the vertex) sum to zero.
bool curve_balanced(const PolyhedralCurve2D& c);

// Forms the function sums (tropical products) of the two lists, reduces both
// to essential form, and tests whether they agree up to a single additive
// rational constant. Rejects empty lists, empty polynomials, and dimension
// mismatches.
bool divisor_sum_equal(const std::vector<TropPoly>& fs, const std::vector<TropPoly>& gs);

// ---- canonical inverse dispatch --------------------------------------------

// Canonical inverse for the supported shapes: weakly non-degenerate
// two-dimensional germs (closed forms per normal-form family), triangular
// germs in any dimension (coordinate recursion), and linear germs with
// finite tropical determinant (generic inverse matrix). Degenerate input is
// an InputError; any other shape is a CapabilityError.
Germ canonical_inverse(const Germ& f);

// ---- monomialization --------------------------------------------------------

// The pair of modification functions attached to an invertible germ: the
// graph coordinates u_i = pi_i(x) of f, the graph coordinates v_i = eta_i(y)
// of its canonical inverse, and the swap that carries one graph to the
// other. validity_region, when engaged, is the lower corner of a quadrant on
// which every swapped strict-transform point lands in the target cycle; it
// is left disengaged when that holds on the whole plane (and in dimension
// at least 3, where no corner is computed).
struct MonomializationData {
    int dim = 0;
    std::vector<TropPoly> pi_functions;
    std::vector<TropPoly> eta_functions;
    std::string swap_map;
    std::optional<std::vector<Rat>> validity_region;
};

MonomializationData monomialize(const Germ& f);

// One membership failure of the sampled verification: the sample x, the
// coordinate that failed, the required value eta_i(f(x)), and the actual
// coordinate x_i after the swap.
struct VerificationFailure {
    std::vector<Rat> point;
    int coordinate = 0;
    TropScalar expected;
    TropScalar got;
};

struct VerificationReport {
    std::int64_t passes = 0;  // samples passing in every coordinate
    std::vector<VerificationFailure> failures;
    bool all_passed() const { return failures.empty(); }
};

// Samples N deterministic low-discrepancy rational points x in the quadrant
// with the given lower corner (radical-inverse sequences in bases 2 and 3,
// scaled into a span-10 box, so reports reproduce bit-for-bit), forms the
// strict-transform point (x, f(x)), applies the swap to get (y, v) =
// (f(x), x), and tests membership in the target cycle coordinatewise:
// either v_i = eta_i(y) exactly, or the minimum in eta_i(y) is attained by
// at least two monomials and v_i >= eta_i(y) (vertical movement is allowed
// exactly over the tie locus of that coordinate's function). The base must
// be two-dimensional.
VerificationReport verify_monomialization(const MonomializationData& m,
                                          const std::vector<Rat>& region_corner,
                                          std::int64_t samples);

// ---- two-dimensional dynamical classification ------------------------------

// Which contracting plane germs admit a dynamical monomialization (source
// and target modifications along the same divisors): CaseA the linear germs
// that are diagonal (a2 = b1 = infinity) or have a1 = b2; CaseB the
// triangular shape p2 = infinity, q1 >= 2 with b2 = q1*a1; CaseC its mirror
// q1 = infinity, p2 >= 2 with a1 = p2*b2; everything else needs an infinite
// tower. Rejects germs that are degenerate or not contracting.
enum class HopfCase2D { CaseA, CaseB, CaseC, NoDynamicalMonomialization };

HopfCase2D classify_hopf_2d(const Germ& f);

// Necessary condition for cone-shaped data in any dimension: (a) each
// coordinate's diagram vertex set lies on an affine hyperplane, (b) one
// normal direction works for all coordinates at once (exact rational
// feasibility), and (c) the union of the vertex sets contains every unit
// exponent.
bool cone_necessary_check(const Germ& f);

// ---- towers of iterates -----------------------------------------------------

// Iterates f^(k) for |k| <= depth: f^(0) is the identity, positive iterates
// compose f repeatedly, negative iterates compose the canonical inverse
// repeatedly, and every iterate is reduced to essential form. The forward
// chain satisfies f^(k+1) = f o f^(k) for k >= 0 and the backward chain
// f^(k-1) = f^(-1) o f^(k) for k <= 0. Chains that cross zero (such as
// f o f^(-1) = identity) hold when the canonical inverse is a two-sided
// inverse, as for monomial germs, but fail in general: the canonical
// inverse is only a pseudo-inverse, and composition keeps every surviving
// essential term rather than cancelling it.
struct ModificationTower {
    int dim = 0;
    int depth = 0;
    std::map<int, Germ> iterates;
    std::string shift_map;  // how the induced action shifts graph coordinates
};

ModificationTower tower(const Germ& f, int depth);

}  // namespace tropgerm
