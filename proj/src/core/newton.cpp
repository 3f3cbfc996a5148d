#include "core/newton.h"

#include "core/errors.h"
#include "core/lp.h"

#include <cstddef>
#include <utility>

namespace tropgerm {

namespace {

// Feasibility of { w : w >= 1, <w, J - I> >= gap for all J != I } (and
// <w, J - I> >= 0 for J = I trivially). gap = 0 decides diagram membership,
// gap = 1 decides corners (strict separation scales to gap 1).
bool diagram_lp(const TropPoly& p, const Exponent& i, const Rat& gap) {
    const auto d = static_cast<std::size_t>(p.dim);
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    for (std::size_t k = 0; k < d; ++k) {  // -w_k <= -1
        std::vector<Rat> row(d, Rat(0));
        row[k] = -1;
        A.push_back(std::move(row));
        b.emplace_back(-1);
    }
    for (const auto& [j, coef] : p.terms) {  // <I - J, w> <= -gap
        if (j == i) continue;
        const auto diff = exp_sub(i, j);
        std::vector<Rat> row(d);
        for (std::size_t k = 0; k < d; ++k) row[k] = Rat(diff[k]);
        A.push_back(std::move(row));
        b.push_back(-gap);
    }
    return lp_feasible(A, b);
}

// sup δ over { x free, r >= 1, <J - I, r> >= 0 ∀J, (φ_J - φ_I) + <J - I, x> >= δ ∀J≠I }.
// Returns true iff the supremum is positive or unbounded (monomial essential).
bool essential_lp(const TropPoly& p, const Exponent& i, const Rat& coef_i) {
    const auto d = static_cast<std::size_t>(p.dim);
    // Variables: x_0..x_{d-1}, r_0..r_{d-1}, δ.
    const std::size_t nvars = 2 * d + 1;
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    for (std::size_t k = 0; k < d; ++k) {  // -r_k <= -1
        std::vector<Rat> row(nvars, Rat(0));
        row[d + k] = -1;
        A.push_back(std::move(row));
        b.emplace_back(-1);
    }
    for (const auto& [j, coef_j] : p.terms) {
        if (j == i) continue;
        const auto diff = exp_sub(i, j);  // I - J
        {
            std::vector<Rat> row(nvars, Rat(0));  // <I - J, r> <= 0
            for (std::size_t k = 0; k < d; ++k) row[d + k] = Rat(diff[k]);
            A.push_back(std::move(row));
            b.emplace_back(0);
        }
        {
            std::vector<Rat> row(nvars, Rat(0));  // δ + <I - J, x> <= φ_J - φ_I
            for (std::size_t k = 0; k < d; ++k) row[k] = Rat(diff[k]);
            row[2 * d] = 1;
            A.push_back(std::move(row));
            b.push_back(coef_j - coef_i);
        }
    }
    std::vector<Rat> c(nvars, Rat(0));
    c[2 * d] = 1;
    const LpResult res = lp_maximize(A, b, c);
    if (res.status == LpStatus::Unbounded) return true;
    return res.status == LpStatus::Optimal && res.value > 0;
}

}  // namespace

NewtonData newton_data(const TropPoly& p) {
    if (p.empty()) throw InputError("newton_data on the empty polynomial");
    NewtonData nd;
    for (const auto& [i, coef] : p.terms) {
        nd.monomials.push_back(i);
        if (diagram_lp(p, i, Rat(0))) {
            nd.diagram_vertices.push_back(i);
            nd.classification[i] = diagram_lp(p, i, Rat(1))
                                       ? MonomialClass::OnDiagramCorner
                                       : MonomialClass::OnDiagramInterior;
        } else {
            nd.classification[i] = MonomialClass::AboveDiagram;
        }
    }
    return nd;
}

TropPoly normal_form(const TropPoly& p) {
    if (p.empty()) throw InputError("normal_form on the empty polynomial");
    const NewtonData nd = newton_data(p);
    TropPoly r(p.dim);
    for (const auto& v : nd.diagram_vertices) r.terms.emplace(v, p.terms.at(v));
    return r;
}

TropPoly essential_form(const TropPoly& p) {
    if (p.empty()) throw InputError("essential_form on the empty polynomial");
    TropPoly r(p.dim);
    for (const auto& [i, coef] : p.terms) {
        if (essential_lp(p, i, coef)) r.terms.emplace(i, coef);
    }
    if (r.empty()) {
        throw TropError("essential_form produced no terms; this cannot happen");
    }
    return r;
}

bool germ_equal(const TropPoly& a, const TropPoly& b) {
    if (a.dim != b.dim) throw InputError("germ_equal dimension mismatch");
    if (a.empty() || b.empty()) return a.empty() && b.empty();
    return essential_form(a) == essential_form(b);
}

Rat agreement_bound(const TropPoly& p) {
    if (p.empty()) throw InputError("agreement_bound on the empty polynomial");
    const TropPoly kept = essential_form(p);
    std::vector<std::pair<Exponent, Rat>> dropped;
    for (const auto& [e, c] : p.terms) {
        if (!kept.terms.count(e)) dropped.emplace_back(e, c);
    }
    const auto d = static_cast<std::size_t>(p.dim);
    Rat m = 1;
    for (int round = 0; round < 256; ++round) {
        bool violated = false;
        for (const auto& [j, coef_j] : dropped) {
            // max δ s.t. δ + <J - I, x> <= φ_I - φ_J ∀ kept I, x >= m, δ <= 1.
            // Positive optimum => some x in the box where J undercuts every
            // kept monomial strictly.
            const std::size_t nvars = d + 1;
            std::vector<std::vector<Rat>> A;
            std::vector<Rat> b;
            for (const auto& [i, coef_i] : kept.terms) {
                const auto diff = exp_sub(j, i);
                std::vector<Rat> row(nvars, Rat(0));
                for (std::size_t k = 0; k < d; ++k) row[k] = Rat(diff[k]);
                row[d] = 1;
                A.push_back(std::move(row));
                b.push_back(coef_i - coef_j);
            }
            for (std::size_t k = 0; k < d; ++k) {  // -x_k <= -m
                std::vector<Rat> row(nvars, Rat(0));
                row[k] = -1;
                A.push_back(std::move(row));
                b.push_back(-m);
            }
            {
                std::vector<Rat> row(nvars, Rat(0));  // δ <= 1
                row[d] = 1;
                A.push_back(std::move(row));
                b.emplace_back(1);
            }
            std::vector<Rat> c(nvars, Rat(0));
            c[d] = 1;
            const LpResult res = lp_maximize(A, b, c);
            if (res.status == LpStatus::Optimal && res.value > 0) {
                violated = true;
                break;
            }
        }
        if (!violated) return m;
        m *= 2;
    }
    throw TropError("agreement_bound did not stabilize; this cannot happen");
}

TropPoly compose(const TropPoly& phi, const std::vector<TropPoly>& g) {
    if (static_cast<std::size_t>(phi.dim) != g.size()) {
        throw InputError("compose: need one inner polynomial per variable");
    }
    if (g.empty()) throw InputError("compose: empty inner system");
    const int inner_dim = g.front().dim;
    for (const auto& gi : g) {
        if (gi.dim != inner_dim) throw InputError("compose: inner dimension mismatch");
    }
    TropPoly acc(inner_dim);
    for (const auto& [e, coef] : phi.terms) {
        TropPoly prod = TropPoly::constant(inner_dim, coef);
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] > 0) prod = poly_mul(prod, poly_pow(g[k], e[k]));
        }
        acc = poly_min(acc, prod);
    }
    if (acc.empty()) return acc;
    return essential_form(acc);
}

}  // namespace tropgerm
