#include "germ/normal2d.h"

#include "core/errors.h"

#include <utility>

namespace tropgerm {

namespace {

struct AxisTerms {
    // Exponent and coefficient of the x1-axis monomial (k,0), if any.
    std::optional<std::int64_t> e1;
    TropScalar c1;
    // Exponent and coefficient of the x2-axis monomial (0,k), if any.
    std::optional<std::int64_t> e2;
    TropScalar c2;
    bool shape_ok = true;  // false on a mixed monomial or duplicate axis
};

AxisTerms split_axes(const TropPoly& essential) {
    AxisTerms out;
    for (const auto& [e, c] : essential.terms) {
        if (e[0] >= 1 && e[1] == 0) {
            if (out.e1) out.shape_ok = false;
            out.e1 = e[0];
            out.c1 = TropScalar(c);
        } else if (e[0] == 0 && e[1] >= 1) {
            if (out.e2) out.shape_ok = false;
            out.e2 = e[1];
            out.c2 = TropScalar(c);
        } else {
            out.shape_ok = false;
        }
    }
    return out;
}

bool is_one(const std::optional<std::int64_t>& p) { return p && *p == 1; }
bool one_or_absent(const std::optional<std::int64_t>& p) { return !p || *p == 1; }

TropScalar delta(const std::optional<std::int64_t>& p) {
    return is_one(p) ? TropScalar::unit() : TropScalar::infinity();
}

// One of each min-pair must equal 1 (finite exponents only; an engaged
// exponent is >= 1 by construction).
bool min_pair_is_one(const std::optional<std::int64_t>& p,
                     const std::optional<std::int64_t>& q) {
    return is_one(p) || is_one(q);
}

void validate_normal(const Germ2DNormal& n) {
    auto check_slot = [](const TropScalar& coef, const std::optional<std::int64_t>& p,
                         const char* name) {
        if (coef.is_finite() != p.has_value()) {
            throw InputError(std::string("normal form slot ") + name +
                             ": coefficient is finite iff the exponent is");
        }
        if (p && *p < 1) {
            throw InputError(std::string("normal form exponent ") + name +
                             " must be a positive integer");
        }
    };
    check_slot(n.a1, n.p1, "1");
    check_slot(n.a2, n.p2, "2");
    check_slot(n.b1, n.q1, "3");
    check_slot(n.b2, n.q2, "4");
    if (!min_pair_is_one(n.p1, n.p2) || !min_pair_is_one(n.q1, n.q2) ||
        !min_pair_is_one(n.p1, n.q1) || !min_pair_is_one(n.p2, n.q2)) {
        throw InputError("normal form violates the min-pair conditions");
    }
    switch (n.tag) {
        case NormalFamily::Linear:
            if (!(one_or_absent(n.p1) && one_or_absent(n.p2) &&
                  one_or_absent(n.q1) && one_or_absent(n.q2))) {
                throw InputError("linear normal form requires exponents in {1, ∞}");
            }
            break;
        case NormalFamily::PositiveNonLinear:
            if (!is_one(n.p1) || !is_one(n.q2) ||
                (one_or_absent(n.p2) && one_or_absent(n.q1))) {
                throw InputError(
                    "positive non-linear normal form requires p1 = q2 = 1 and a "
                    "finite exponent >= 2 among p2, q1");
            }
            break;
        case NormalFamily::NegativeNonLinear:
            if (!is_one(n.p2) || !is_one(n.q1) ||
                (one_or_absent(n.p1) && one_or_absent(n.q2))) {
                throw InputError(
                    "negative non-linear normal form requires p2 = q1 = 1 and a "
                    "finite exponent >= 2 among p1, q2");
            }
            break;
    }
}

void require_weakly_nondegenerate(const Germ2DNormal& n) {
    if (det_trop(normal_linear_part(n)).is_inf()) {
        throw InputError("normal form is degenerate (linear part determinant ∞)");
    }
}

}  // namespace

Classify2DResult classify_2d(const Germ& f) {
    validate_germ(f);
    if (f.dim != 2) throw InputError("classify_2d requires a 2-dimensional germ");
    const AxisTerms t1 = split_axes(essential_form(f.coords[0]));
    const AxisTerms t2 = split_axes(essential_form(f.coords[1]));
    Classify2DResult res;
    if (!t1.shape_ok || !t2.shape_ok) {
        // A mixed or repeated-axis essential monomial forces an all-∞ row in
        // the linear part, so the germ is degenerate.
        return res;
    }
    Germ2DNormal n;
    n.a1 = t1.c1;
    n.p1 = t1.e1;
    n.a2 = t1.c2;
    n.p2 = t1.e2;
    n.b1 = t2.c1;
    n.q1 = t2.e1;
    n.b2 = t2.c2;
    n.q2 = t2.e2;
    if (det_trop(normal_linear_part(n)).is_inf()) return res;
    if (one_or_absent(n.p1) && one_or_absent(n.p2) && one_or_absent(n.q1) &&
        one_or_absent(n.q2)) {
        n.tag = NormalFamily::Linear;
    } else if (is_one(n.p1) && is_one(n.q2)) {
        n.tag = NormalFamily::PositiveNonLinear;
    } else if (is_one(n.p2) && is_one(n.q1)) {
        n.tag = NormalFamily::NegativeNonLinear;
    } else {
        // Weak non-degeneracy forces one of the two diagonals to consist of
        // unit exponents.
        throw TropError("classify_2d: family extraction failed unexpectedly");
    }
    validate_normal(n);
    res.weakly_nondegenerate = true;
    res.normal = n;
    return res;
}

Germ normal_to_germ(const Germ2DNormal& n) {
    validate_normal(n);
    TropPoly f1(2), f2(2);
    if (n.p1) f1.add_term({*n.p1, 0}, n.a1.value());
    if (n.p2) f1.add_term({0, *n.p2}, n.a2.value());
    if (n.q1) f2.add_term({*n.q1, 0}, n.b1.value());
    if (n.q2) f2.add_term({0, *n.q2}, n.b2.value());
    return Germ(2, {std::move(f1), std::move(f2)});
}

TropMatrix normal_linear_part(const Germ2DNormal& n) {
    TropMatrix m(2);
    m.at(0, 0) = n.a1 + delta(n.p1);
    m.at(0, 1) = n.a2 + delta(n.p2);
    m.at(1, 0) = n.b1 + delta(n.q1);
    m.at(1, 1) = n.b2 + delta(n.q2);
    return m;
}

Germ canonical_inverse_2d(const Germ2DNormal& n) {
    validate_normal(n);
    require_weakly_nondegenerate(n);
    TropPoly g1(2), g2(2);
    switch (n.tag) {
        case NormalFamily::Linear: {
            const TropMatrix inv = generic_inverse_linear(normal_linear_part(n));
            for (int i = 0; i < 2; ++i) {
                TropPoly& gi = (i == 0) ? g1 : g2;
                for (int j = 0; j < 2; ++j) {
                    if (inv.at(i, j).is_finite()) {
                        Exponent e = {0, 0};
                        e[static_cast<std::size_t>(j)] = 1;
                        gi.add_term(e, inv.at(i, j).value());
                    }
                }
            }
            break;
        }
        case NormalFamily::PositiveNonLinear: {
            // g = ((y1 ∧ (a2 + p2·y2 − p2·b2)) − a1,
            //      (y2 ∧ (b1 + q1·y1 − q1·a1)) − b2).
            const Rat a1 = n.a1.value(), b2 = n.b2.value();
            g1.add_term({1, 0}, -a1);
            if (n.p2) g1.add_term({0, *n.p2}, n.a2.value() - Rat(*n.p2) * b2 - a1);
            g2.add_term({0, 1}, -b2);
            if (n.q1) g2.add_term({*n.q1, 0}, n.b1.value() - Rat(*n.q1) * a1 - b2);
            break;
        }
        case NormalFamily::NegativeNonLinear: {
            // g = ((y2 ∧ (b2 + q2·y1 − q2·a2)) − b1,
            //      (y1 ∧ (a1 + p1·y2 − p1·b1)) − a2).
            const Rat a2 = n.a2.value(), b1 = n.b1.value();
            g1.add_term({0, 1}, -b1);
            if (n.q2) g1.add_term({*n.q2, 0}, n.b2.value() - Rat(*n.q2) * a2 - b1);
            g2.add_term({1, 0}, -a2);
            if (n.p1) g2.add_term({0, *n.p1}, n.a1.value() - Rat(*n.p1) * b1 - a2);
            break;
        }
    }
    return Germ(2, {std::move(g1), std::move(g2)});
}

bool has_unique_formal_inverse(const Germ2DNormal& n) {
    validate_normal(n);
    require_weakly_nondegenerate(n);
    if (n.tag != NormalFamily::Linear) return true;
    return n.a1 + n.b2 != n.a2 + n.b1;
}

}  // namespace tropgerm
