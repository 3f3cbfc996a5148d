#include "core/poly.h"

#include "core/errors.h"

#include <algorithm>
#include <utility>

namespace tropgerm {

Rat exp_dot(const Exponent& e, const std::vector<Rat>& x) {
    if (e.size() != x.size()) throw InputError("exponent/point dimension mismatch");
    Rat s = 0;
    for (std::size_t k = 0; k < e.size(); ++k) s += Rat(e[k]) * x[k];
    return s;
}

std::vector<std::int64_t> exp_sub(const Exponent& j, const Exponent& i) {
    if (j.size() != i.size()) throw InputError("exponent dimension mismatch");
    std::vector<std::int64_t> d(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) d[k] = j[k] - i[k];
    return d;
}

bool exp_leq(const Exponent& i, const Exponent& j) {
    if (i.size() != j.size()) throw InputError("exponent dimension mismatch");
    for (std::size_t k = 0; k < i.size(); ++k) {
        if (i[k] > j[k]) return false;
    }
    return true;
}

void TropPoly::add_term(const Exponent& e, const Rat& c) {
    if (static_cast<int>(e.size()) != dim) {
        throw InputError("exponent length does not match polynomial dimension");
    }
    for (const auto v : e) {
        if (v < 0) throw InputError("negative exponent in tropical polynomial");
    }
    auto [it, inserted] = terms.emplace(e, c);
    if (!inserted && c < it->second) it->second = c;
}

TropPoly TropPoly::constant(int dim, const Rat& c) {
    TropPoly p(dim);
    p.add_term(Exponent(static_cast<std::size_t>(dim), 0), c);
    return p;
}

TropPoly TropPoly::monomial(int dim, Exponent e, Rat c) {
    TropPoly p(dim);
    p.add_term(e, c);
    return p;
}

TropPoly TropPoly::variable(int dim, int j) {
    if (j < 0 || j >= dim) throw InputError("variable index out of range");
    Exponent e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(j)] = 1;
    return monomial(dim, std::move(e), Rat(0));
}

bool operator==(const TropPoly& a, const TropPoly& b) {
    return a.dim == b.dim && a.terms == b.terms;
}

TropScalar trop_eval(const TropPoly& p, const std::vector<TropScalar>& x) {
    if (static_cast<int>(x.size()) != p.dim) {
        throw InputError("evaluation point dimension mismatch");
    }
    TropScalar best = TropScalar::infinity();
    for (const auto& [e, c] : p.terms) {
        TropScalar t(c);
        for (std::size_t k = 0; k < e.size(); ++k) t += trop_pow(x[k], e[k]);
        best = trop_min(best, t);
    }
    return best;
}

TropScalar trop_eval(const TropPoly& p, const std::vector<Rat>& x) {
    if (static_cast<int>(x.size()) != p.dim) {
        throw InputError("evaluation point dimension mismatch");
    }
    TropScalar best = TropScalar::infinity();
    for (const auto& [e, c] : p.terms) {
        best = trop_min(best, TropScalar(c + exp_dot(e, x)));
    }
    return best;
}

TropPoly poly_min(const TropPoly& a, const TropPoly& b) {
    if (a.dim != b.dim) throw InputError("polynomial dimension mismatch");
    TropPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

TropPoly poly_mul(const TropPoly& a, const TropPoly& b) {
    if (a.dim != b.dim) throw InputError("polynomial dimension mismatch");
    TropPoly r(a.dim);
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            Exponent e(ea.size());
            for (std::size_t k = 0; k < ea.size(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca + cb);
        }
    }
    return r;
}

TropPoly poly_pow(const TropPoly& a, std::int64_t k) {
    if (k < 0) throw InputError("negative tropical power of a polynomial");
    TropPoly r = TropPoly::constant(a.dim, Rat(0));
    for (std::int64_t i = 0; i < k; ++i) r = poly_mul(r, a);
    return r;
}

TropPoly poly_shift(const TropPoly& a, const Rat& c) {
    TropPoly r(a.dim);
    for (const auto& [e, coef] : a.terms) r.terms.emplace(e, coef + c);
    return r;
}

}  // namespace tropgerm
