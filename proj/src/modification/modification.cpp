#include "modification/modification.h"

#include "core/errors.h"
#include "core/newton.h"
#include "germ/normal2d.h"
#include "germ/pd.h"
#include "linalg/matrix.h"

#include <algorithm>
#include <numeric>
#include <utility>

namespace tropgerm {

namespace {

using Q2 = std::array<Rat, 2>;

bool pt_less(const Q2& p, const Q2& q) {
    if (p[0] != q[0]) return p[0] < q[0];
    return p[1] < q[1];
}

bool cell_less(const CurveCell& x, const CurveCell& y) {
    if (x.kind != y.kind) return x.kind == CurveCellKind::Segment;
    if (x.a != y.a) return pt_less(x.a, y.a);
    if (x.b != y.b) return pt_less(x.b, y.b);
    if (x.direction[0] != y.direction[0]) return x.direction[0] < y.direction[0];
    if (x.direction[1] != y.direction[1]) return x.direction[1] < y.direction[1];
    return x.weight < y.weight;
}

Rat dot_q2(const std::vector<std::int64_t>& e, const Q2& p) {
    return Rat(e[0]) * p[0] + Rat(e[1]) * p[1];
}

std::int64_t dot_i2(const std::vector<std::int64_t>& e, const std::array<std::int64_t, 2>& u) {
    return e[0] * u[0] + e[1] * u[1];
}

// One strict inequality a*x1 + b*x2 > c.
struct StrictRow {
    Rat a, b, c;
};

// Exact feasibility of a system of strict linear inequalities in the plane,
// by Fourier-Motzkin elimination (strict combined with strict stays strict,
// and a nonempty open rational polyhedron contains a rational point).
bool strict_system_feasible(const std::vector<StrictRow>& rows) {
    std::vector<StrictRow> one;
    std::vector<StrictRow> pos, neg;
    for (const StrictRow& r : rows) {
        if (r.a > 0) pos.push_back(r);
        else if (r.a < 0) neg.push_back(r);
        else one.push_back(r);
    }
    for (const StrictRow& p : pos) {
        for (const StrictRow& n : neg) {
            StrictRow comb;
            comb.a = Rat(0);
            comb.b = -n.a * p.b + p.a * n.b;
            comb.c = -n.a * p.c + p.a * n.c;
            one.push_back(comb);
        }
    }
    std::optional<Rat> lo, hi;
    for (const StrictRow& r : one) {
        if (r.b > 0) {
            const Rat bound = r.c / r.b;
            if (!lo || bound > *lo) lo = bound;
        } else if (r.b < 0) {
            const Rat bound = r.c / r.b;
            if (!hi || bound < *hi) hi = bound;
        } else if (!(r.c < 0)) {
            return false;
        }
    }
    if (lo && hi) return *lo < *hi;
    return true;
}

// Keeps exactly the terms that are uniquely minimal somewhere in the plane.
// Dropping the others never changes the function's value (wherever a dropped
// term attains the minimum, some kept term attains it too), and the survivors
// are the vertices of the dual subdivision: no three collinear-exponent
// survivors ever tie along a whole line, so every wall of the corner locus is
// cut out by exactly one pair of surviving terms.
TropPoly plane_essential(const TropPoly& phi) {
    const std::vector<std::pair<Exponent, Rat>> ts(phi.terms.begin(), phi.terms.end());
    TropPoly out(phi.dim);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        std::vector<StrictRow> rows;
        for (std::size_t j = 0; j < ts.size(); ++j) {
            if (j == i) continue;
            const std::vector<std::int64_t> d = exp_sub(ts[j].first, ts[i].first);
            rows.push_back(StrictRow{Rat(d[0]), Rat(d[1]), ts[i].second - ts[j].second});
        }
        if (strict_system_feasible(rows)) out.add_term(ts[i].first, ts[i].second);
    }
    return out;
}

}  // namespace

bool operator==(const CurveCell& x, const CurveCell& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b &&
           x.direction == y.direction && x.weight == y.weight;
}

bool operator==(const PolyhedralCurve2D& x, const PolyhedralCurve2D& y) {
    return x.vertices == y.vertices && x.cells == y.cells;
}

PolyhedralCurve2D divisor_2d(const TropPoly& phi) {
    if (phi.dim != 2)
        throw InputError("divisor_2d: polynomial must be in two variables");
    if (phi.empty())
        throw InputError("divisor_2d: polynomial has no terms");
    const TropPoly psi = plane_essential(phi);
    const std::vector<std::pair<Exponent, Rat>> ts(psi.terms.begin(), psi.terms.end());
    const std::size_t m = ts.size();

    PolyhedralCurve2D curve;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const Exponent& ei = ts[i].first;
            const Rat& ci = ts[i].second;
            // Terms i and j tie on the line <A, x> = C.
            const std::vector<std::int64_t> A = exp_sub(ei, ts[j].first);
            const Rat C = ts[j].second - ci;
            const std::int64_t g = std::gcd(A[0], A[1]);
            std::array<std::int64_t, 2> u{-A[1] / g, A[0] / g};
            if (u[0] < 0 || (u[0] == 0 && u[1] < 0)) {
                u[0] = -u[0];
                u[1] = -u[1];
            }
            Q2 base;
            if (A[1] != 0) base = Q2{Rat(0), C / A[1]};
            else base = Q2{C / A[0], Rat(0)};

            // Clip {base + t*u} by "term i at most term k" for every other k.
            std::optional<Rat> lo, hi;
            bool empty = false;
            for (std::size_t k = 0; k < m && !empty; ++k) {
                if (k == i || k == j) continue;
                const std::vector<std::int64_t> D = exp_sub(ei, ts[k].first);
                const Rat alpha = ci - ts[k].second + dot_q2(D, base);
                const std::int64_t beta = dot_i2(D, u);
                if (beta > 0) {
                    const Rat bound = -alpha / beta;
                    if (!hi || bound < *hi) hi = bound;
                } else if (beta < 0) {
                    const Rat bound = -alpha / beta;
                    if (!lo || bound > *lo) lo = bound;
                } else if (alpha > 0) {
                    empty = true;
                }
            }
            if (empty) continue;
            if (lo && hi && !(*lo < *hi)) continue;  // no relative interior

            CurveCell cell;
            cell.weight = g;
            if (lo && hi) {
                cell.kind = CurveCellKind::Segment;
                cell.a = Q2{base[0] + *lo * u[0], base[1] + *lo * u[1]};
                cell.b = Q2{base[0] + *hi * u[0], base[1] + *hi * u[1]};
                cell.direction = u;
                curve.cells.push_back(cell);
            } else if (lo) {
                cell.kind = CurveCellKind::Ray;
                cell.a = Q2{base[0] + *lo * u[0], base[1] + *lo * u[1]};
                cell.b = cell.a;
                cell.direction = u;
                curve.cells.push_back(cell);
            } else if (hi) {
                cell.kind = CurveCellKind::Ray;
                cell.a = Q2{base[0] + *hi * u[0], base[1] + *hi * u[1]};
                cell.b = cell.a;
                cell.direction = {-u[0], -u[1]};
                curve.cells.push_back(cell);
            } else {
                // Unclipped line: two opposite rays from the anchor.
                cell.kind = CurveCellKind::Ray;
                cell.a = base;
                cell.b = base;
                cell.direction = u;
                curve.cells.push_back(cell);
                cell.direction = {-u[0], -u[1]};
                curve.cells.push_back(cell);
            }
        }
    }

    std::sort(curve.cells.begin(), curve.cells.end(), cell_less);
    for (const CurveCell& c : curve.cells) {
        curve.vertices.push_back(c.a);
        if (c.kind == CurveCellKind::Segment) curve.vertices.push_back(c.b);
    }
    std::sort(curve.vertices.begin(), curve.vertices.end(), pt_less);
    curve.vertices.erase(std::unique(curve.vertices.begin(), curve.vertices.end()),
                         curve.vertices.end());
    return curve;
}

bool curve_balanced(const PolyhedralCurve2D& c) {
    for (const Q2& v : c.vertices) {
        Rat sx(0), sy(0);
        for (const CurveCell& cell : c.cells) {
            if (cell.a == v) {
                sx += Rat(cell.weight) * cell.direction[0];
                sy += Rat(cell.weight) * cell.direction[1];
            }
            if (cell.kind == CurveCellKind::Segment && cell.b == v) {
                sx -= Rat(cell.weight) * cell.direction[0];
                sy -= Rat(cell.weight) * cell.direction[1];
            }
        }
        if (sx != 0 || sy != 0) return false;
    }
    return true;
}

bool divisor_sum_equal(const std::vector<TropPoly>& fs, const std::vector<TropPoly>& gs) {
    if (fs.empty() || gs.empty())
        throw InputError("divisor_sum_equal: empty function list");
    const int d = fs.front().dim;
    const auto check = [&](const std::vector<TropPoly>& v) {
        for (const TropPoly& p : v) {
            if (p.dim != d)
                throw InputError("divisor_sum_equal: dimension mismatch between functions");
            if (p.empty())
                throw InputError("divisor_sum_equal: polynomial has no terms");
        }
    };
    check(fs);
    check(gs);

    TropPoly fsum = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) fsum = poly_mul(fsum, fs[i]);
    TropPoly gsum = gs.front();
    for (std::size_t i = 1; i < gs.size(); ++i) gsum = poly_mul(gsum, gs[i]);
    fsum = essential_form(fsum);
    gsum = essential_form(gsum);

    if (fsum.terms.size() != gsum.terms.size()) return false;
    std::optional<Rat> delta;
    auto it = fsum.terms.begin();
    auto jt = gsum.terms.begin();
    for (; it != fsum.terms.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        const Rat diff = it->second - jt->second;
        if (!delta) delta = diff;
        else if (*delta != diff) return false;
    }
    return true;
}

namespace {

bool is_linear_germ(const Germ& f) {
    for (const TropPoly& c : f.coords) {
        for (const auto& [e, coef] : c.terms) {
            (void)coef;
            std::int64_t deg = 0;
            for (std::int64_t x : e) deg += x;
            if (deg != 1) return false;
        }
    }
    return true;
}

}  // namespace

Germ canonical_inverse(const Germ& f0) {
    validate_germ(f0);
    const Germ f = germ_essential(f0);
    if (f.dim == 2) {
        const Classify2DResult c = classify_2d(f);
        if (!c.weakly_nondegenerate)
            throw InputError("canonical_inverse: germ is degenerate");
        return canonical_inverse_2d(*c.normal);
    }
    if (is_triangular(f)) return pd_inverse(f);
    if (is_linear_germ(f)) {
        const TropMatrix lin = linear_part(f);
        if (det_trop(lin).is_inf())
            throw InputError("canonical_inverse: linear part has infinite tropical determinant");
        const TropMatrix inv = generic_inverse_linear(lin);
        std::vector<TropPoly> coords;
        for (int i = 0; i < f.dim; ++i) {
            TropPoly p(f.dim);
            for (int j = 0; j < f.dim; ++j) {
                if (inv.at(i, j).is_finite()) {
                    Exponent e(static_cast<std::size_t>(f.dim), 0);
                    e[static_cast<std::size_t>(j)] = 1;
                    p.add_term(e, inv.at(i, j).value());
                }
            }
            coords.push_back(p);
        }
        return Germ(f.dim, std::move(coords));
    }
    throw CapabilityError(
        "canonical_inverse: implemented for two-dimensional, triangular, and linear germs");
}

namespace {

// Lower corner of the quadrant on which the swapped strict transform is
// certified to land in the target cycle. The two clipped families need a
// corner where all branch regions meet; for every other supported shape the
// membership test passes on the whole plane.
std::optional<std::vector<Rat>> validity_corner(const Germ2DNormal& n) {
    if (n.tag == NormalFamily::PositiveNonLinear && n.p2 && n.q1) {
        const Rat P(*n.p2), Q(*n.q1);
        const Rat den = P * Q - 1;
        const Rat a1 = n.a1.value(), a2 = n.a2.value();
        const Rat b1 = n.b1.value(), b2 = n.b2.value();
        return std::vector<Rat>{(a1 + P * b2 - a2 - P * b1) / den,
                                (b2 + Q * a1 - b1 - Q * a2) / den};
    }
    if (n.tag == NormalFamily::NegativeNonLinear && n.p1 && n.q2) {
        const Rat P(*n.p1), Q(*n.q2);
        const Rat den = P * Q - 1;
        const Rat a1 = n.a1.value(), a2 = n.a2.value();
        const Rat b1 = n.b1.value(), b2 = n.b2.value();
        return std::vector<Rat>{(b1 + Q * a2 - b2 - Q * a1) / den,
                                (a2 + P * b1 - a1 - P * b2) / den};
    }
    return std::nullopt;
}

}  // namespace

MonomializationData monomialize(const Germ& f0) {
    validate_germ(f0);
    const Germ f = germ_essential(f0);
    const Germ g = germ_essential(canonical_inverse(f));
    MonomializationData m;
    m.dim = f.dim;
    m.pi_functions = f.coords;
    m.eta_functions = g.coords;
    m.swap_map = "F(x, u) = (u, x)";
    if (f.dim == 2) {
        const Classify2DResult c = classify_2d(f);
        m.validity_region = validity_corner(*c.normal);
    }
    return m;
}

namespace {

// k-th term of the base-b radical-inverse (van der Corput) sequence in [0, 1).
Rat radical_inverse(std::int64_t k, int base) {
    Rat r(0);
    Rat digit_weight(1, base);
    while (k > 0) {
        r += Rat(k % base) * digit_weight;
        k /= base;
        digit_weight /= base;
    }
    return r;
}

int tie_multiplicity(const TropPoly& p, const std::vector<Rat>& y) {
    bool first = true;
    Rat best(0);
    int count = 0;
    for (const auto& [e, c] : p.terms) {
        const Rat v = c + exp_dot(e, y);
        if (first || v < best) {
            best = v;
            count = 1;
            first = false;
        } else if (v == best) {
            ++count;
        }
    }
    return count;
}

}  // namespace

VerificationReport verify_monomialization(const MonomializationData& m,
                                          const std::vector<Rat>& region_corner,
                                          std::int64_t samples) {
    if (m.dim != 2)
        throw CapabilityError(
            "verify_monomialization: sampling implemented for two-dimensional bases");
    if (m.pi_functions.size() != 2 || m.eta_functions.size() != 2)
        throw InputError("verify_monomialization: need two modification functions per side");
    for (const TropPoly& p : m.pi_functions)
        if (p.dim != 2 || p.empty())
            throw InputError("verify_monomialization: malformed modification function");
    for (const TropPoly& p : m.eta_functions)
        if (p.dim != 2 || p.empty())
            throw InputError("verify_monomialization: malformed modification function");
    if (region_corner.size() != 2)
        throw InputError("verify_monomialization: region corner must have two coordinates");
    if (samples <= 0)
        throw InputError("verify_monomialization: sample count must be positive");

    const Rat span(10);
    VerificationReport rep;
    for (std::int64_t k = 1; k <= samples; ++k) {
        const std::vector<Rat> x{region_corner[0] + radical_inverse(k, 2) * span,
                                 region_corner[1] + radical_inverse(k, 3) * span};
        std::vector<Rat> y;
        y.reserve(2);
        for (const TropPoly& p : m.pi_functions) y.push_back(trop_eval(p, x).value());
        bool ok = true;
        for (int i = 0; i < 2; ++i) {
            const TropScalar need = trop_eval(m.eta_functions[static_cast<std::size_t>(i)], y);
            const TropScalar got{x[static_cast<std::size_t>(i)]};
            if (got == need) continue;
            // Vertical movement is allowed exactly over the tie locus of the
            // coordinate's function, and only upward.
            if (got > need &&
                tie_multiplicity(m.eta_functions[static_cast<std::size_t>(i)], y) >= 2)
                continue;
            rep.failures.push_back(VerificationFailure{x, i, need, got});
            ok = false;
        }
        if (ok) ++rep.passes;
    }
    return rep;
}

HopfCase2D classify_hopf_2d(const Germ& f0) {
    validate_germ(f0);
    if (f0.dim != 2)
        throw InputError("classify_hopf_2d: germ must be two-dimensional");
    const Classify2DResult c = classify_2d(f0);
    if (!c.weakly_nondegenerate)
        throw InputError("classify_hopf_2d: germ is degenerate");
    if (!is_contracting(f0))
        throw InputError("classify_hopf_2d: germ is not contracting");
    const Germ2DNormal& n = *c.normal;
    switch (n.tag) {
        case NormalFamily::Linear: {
            if (n.a2.is_inf() && n.b1.is_inf()) return HopfCase2D::CaseA;
            if (n.a1 == n.b2) return HopfCase2D::CaseA;
            return HopfCase2D::NoDynamicalMonomialization;
        }
        case NormalFamily::PositiveNonLinear: {
            if (!n.p2 && n.q1) {
                if (n.b2.value() == Rat(*n.q1) * n.a1.value()) return HopfCase2D::CaseB;
                return HopfCase2D::NoDynamicalMonomialization;
            }
            if (!n.q1 && n.p2) {
                if (n.a1.value() == Rat(*n.p2) * n.b2.value()) return HopfCase2D::CaseC;
                return HopfCase2D::NoDynamicalMonomialization;
            }
            return HopfCase2D::NoDynamicalMonomialization;
        }
        case NormalFamily::NegativeNonLinear:
            return HopfCase2D::NoDynamicalMonomialization;
    }
    throw InputError("classify_hopf_2d: unreachable family tag");
}

namespace {

// Row rank of an exact rational matrix by Gauss elimination.
int rat_rank(std::vector<std::vector<Rat>> mat) {
    const std::size_t rows = mat.size();
    if (rows == 0) return 0;
    const std::size_t cols = mat.front().size();
    int rank = 0;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t piv = lead;
        while (piv < rows && mat[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(mat[piv], mat[lead]);
        const Rat pivot = mat[lead][col];
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || mat[r][col] == 0) continue;
            const Rat factor = mat[r][col] / pivot;
            for (std::size_t cc = col; cc < cols; ++cc)
                mat[r][cc] -= factor * mat[lead][cc];
        }
        ++lead;
        ++rank;
    }
    return rank;
}

}  // namespace

bool cone_necessary_check(const Germ& f0) {
    validate_germ(f0);
    const Germ f = germ_essential(f0);
    const int d = f.dim;
    std::vector<std::vector<Exponent>> verts;
    verts.reserve(static_cast<std::size_t>(d));
    for (const TropPoly& c : f.coords) verts.push_back(newton_data(c).diagram_vertices);

    // (a) every coordinate's diagram vertex set lies on an affine hyperplane
    for (const std::vector<Exponent>& vs : verts) {
        std::vector<std::vector<Rat>> diffs;
        for (std::size_t i = 1; i < vs.size(); ++i) {
            std::vector<Rat> row;
            row.reserve(static_cast<std::size_t>(d));
            for (int j = 0; j < d; ++j)
                row.push_back(Rat(vs[i][static_cast<std::size_t>(j)] -
                                  vs[0][static_cast<std::size_t>(j)]));
            diffs.push_back(std::move(row));
        }
        if (rat_rank(std::move(diffs)) >= d) return false;
    }

    // (b) one normal works for every coordinate at once: a nonzero (w, t)
    // with <w, e> = t_j for each diagram vertex e of coordinate j exists
    // exactly when the constraint matrix drops rank (w = 0 forces t = 0).
    std::vector<std::vector<Rat>> rows;
    for (int j = 0; j < d; ++j) {
        for (const Exponent& e : verts[static_cast<std::size_t>(j)]) {
            std::vector<Rat> row(static_cast<std::size_t>(2 * d), Rat(0));
            for (int i = 0; i < d; ++i) row[static_cast<std::size_t>(i)] = Rat(e[static_cast<std::size_t>(i)]);
            row[static_cast<std::size_t>(d + j)] = Rat(-1);
            rows.push_back(std::move(row));
        }
    }
    if (rat_rank(std::move(rows)) >= 2 * d) return false;

    // (c) the union of the diagram vertex sets covers every unit exponent
    for (int j = 0; j < d; ++j) {
        Exponent unit(static_cast<std::size_t>(d), 0);
        unit[static_cast<std::size_t>(j)] = 1;
        bool found = false;
        for (const std::vector<Exponent>& vs : verts) {
            for (const Exponent& e : vs) {
                if (e == unit) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) return false;
    }
    return true;
}

ModificationTower tower(const Germ& f0, int depth) {
    if (depth < 0) throw InputError("tower: depth must be non-negative");
    validate_germ(f0);
    const Germ f = germ_essential(f0);
    ModificationTower t;
    t.dim = f.dim;
    t.depth = depth;
    t.shift_map =
        "h(u^(-n), ..., u^(-1), x, u^(1), ..., u^(n)) = "
        "(u^(-(n-1)), ..., x, u^(1), ..., u^(n), f(u^(n))): each graph block "
        "moves one slot toward the negative end and the last block is refreshed "
        "through f, so on the inverse limit the induced map is the coordinate shift";
    t.iterates[0] = identity_germ(f.dim);
    if (depth == 0) return t;
    const Germ g = germ_essential(canonical_inverse(f));
    Germ fwd = f;
    Germ bwd = g;
    t.iterates[1] = fwd;
    t.iterates[-1] = bwd;
    for (int k = 2; k <= depth; ++k) {
        fwd = compose_germ(f, fwd);
        bwd = compose_germ(g, bwd);
        t.iterates[k] = fwd;
        t.iterates[-k] = bwd;
    }
    return t;
}

}  // namespace tropgerm
