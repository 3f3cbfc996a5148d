#include "germ/pd.h"

#include "core/errors.h"
#include "core/newton.h"

#include <utility>

namespace tropgerm {

namespace {

Exponent unit(int d, int j) {
    Exponent e(static_cast<std::size_t>(d), 0);
    e[static_cast<std::size_t>(j)] = 1;
    return e;
}

}  // namespace

bool is_triangular(const Germ& f) {
    validate_germ(f);
    for (int j = 0; j < f.dim; ++j) {
        const auto& terms = f.coords[static_cast<std::size_t>(j)].terms;
        if (!terms.count(unit(f.dim, j))) return false;
        for (const auto& [e, c] : terms) {
            if (e == unit(f.dim, j)) continue;
            for (int k = j; k < f.dim; ++k) {
                if (e[static_cast<std::size_t>(k)] != 0) return false;
            }
        }
    }
    return true;
}

Germ pd_inverse(const Germ& f) {
    if (!is_triangular(f)) {
        throw InputError(
            "pd_inverse requires a triangular germ: coordinate j must be "
            "(λ_j + x_j) ∧ P_j(x_1,…,x_{j−1})");
    }
    const int d = f.dim;
    std::vector<TropPoly> g;
    for (int j = 0; j < d; ++j) {
        const auto& fj = f.coords[static_cast<std::size_t>(j)];
        const Rat lambda = fj.terms.at(unit(d, j));
        TropPoly pj(d);  // f_j without its diagonal term
        for (const auto& [e, c] : fj.terms) {
            if (e != unit(d, j)) pj.terms.emplace(e, c);
        }
        TropPoly gj = TropPoly::monomial(d, unit(d, j), Rat(0));  // y_j
        if (!pj.empty()) {
            // Substitute the already-built inverse coordinates; variables
            // from j on are untouched placeholders (P_j never uses them).
            std::vector<TropPoly> inner = g;
            for (int k = j; k < d; ++k) inner.push_back(TropPoly::variable(d, k));
            gj = poly_min(gj, compose(pj, inner));
        }
        g.push_back(essential_form(poly_shift(gj, -lambda)));
    }
    return Germ(d, std::move(g));
}

}  // namespace tropgerm
