#include "germ/germ.h"

#include "core/errors.h"

#include <algorithm>
#include <utility>

namespace tropgerm {

Germ::Germ(int d, std::vector<TropPoly> cs) : dim(d), coords(std::move(cs)) {
    validate_germ(*this);
}

void validate_germ(const Germ& f) {
    if (f.dim <= 0) throw InputError("germ dimension must be positive");
    if (f.coords.size() != static_cast<std::size_t>(f.dim)) {
        throw InputError("germ needs exactly one coordinate per dimension");
    }
    const Exponent zero(static_cast<std::size_t>(f.dim), 0);
    for (const auto& c : f.coords) {
        if (c.dim != f.dim) {
            throw InputError("germ coordinate has wrong polynomial dimension");
        }
        if (c.empty()) throw InputError("germ coordinate is the empty polynomial");
        if (c.terms.count(zero)) {
            throw InputError("germ coordinate has a constant term (must fix ∞)");
        }
    }
}

Germ identity_germ(int d) {
    std::vector<TropPoly> cs;
    for (int j = 0; j < d; ++j) cs.push_back(TropPoly::variable(d, j));
    return Germ(d, std::move(cs));
}

Germ germ_essential(const Germ& f) {
    validate_germ(f);
    std::vector<TropPoly> cs;
    cs.reserve(f.coords.size());
    for (const auto& c : f.coords) cs.push_back(essential_form(c));
    return Germ(f.dim, std::move(cs));
}

Germ compose_germ(const Germ& a, const Germ& b) {
    validate_germ(a);
    validate_germ(b);
    if (a.dim != b.dim) throw InputError("germ composition dimension mismatch");
    std::vector<TropPoly> cs;
    cs.reserve(a.coords.size());
    for (const auto& c : a.coords) cs.push_back(compose(c, b.coords));
    return Germ(a.dim, std::move(cs));
}

bool germ_equal(const Germ& a, const Germ& b) {
    validate_germ(a);
    validate_germ(b);
    if (a.dim != b.dim) return false;
    for (int i = 0; i < a.dim; ++i) {
        if (!germ_equal(a.coords[static_cast<std::size_t>(i)],
                        b.coords[static_cast<std::size_t>(i)])) {
            return false;
        }
    }
    return true;
}

TropMatrix linear_part(const Germ& f) {
    validate_germ(f);
    TropMatrix m(f.dim);
    for (int i = 0; i < f.dim; ++i) {
        for (int j = 0; j < f.dim; ++j) {
            Exponent e(static_cast<std::size_t>(f.dim), 0);
            e[static_cast<std::size_t>(j)] = 1;
            const auto& terms = f.coords[static_cast<std::size_t>(i)].terms;
            const auto it = terms.find(e);
            m.at(i, j) = it == terms.end() ? TropScalar::infinity()
                                           : TropScalar(it->second);
        }
    }
    return m;
}

bool is_contracting(const Germ& f) {
    const auto roots = eigenvalues(linear_part(f));
    return std::all_of(roots.begin(), roots.end(), [](const TropScalar& r) {
        return r.is_inf() || r.value() > 0;
    });
}

}  // namespace tropgerm
