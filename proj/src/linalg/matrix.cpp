#include "linalg/matrix.h"

#include "core/errors.h"

#include <algorithm>
#include <numeric>
#include <utility>

namespace tropgerm {

namespace {

void check_square(const TropMatrix& m) {
    if (m.d <= 0) throw InputError("matrix dimension must be positive");
    if (m.a.size() != static_cast<std::size_t>(m.d)) {
        throw InputError("matrix row count does not match dimension");
    }
    for (const auto& row : m.a) {
        if (row.size() != static_cast<std::size_t>(m.d)) {
            throw InputError("matrix row length does not match dimension");
        }
    }
}

void check_enumeration_bound(const TropMatrix& m) {
    if (m.d > kMatrixEnumerationBound) {
        throw CapabilityError("matrix dimension " + std::to_string(m.d) +
                              " exceeds the permutation enumeration bound " +
                              std::to_string(kMatrixEnumerationBound));
    }
}

struct DetData {
    TropScalar value;  // ∞ when no permutation is finite
    std::vector<Permutation> witnesses;
};

// Exhaustive enumeration in lexicographic permutation order, so witness
// lists are deterministic.
DetData det_data(const TropMatrix& m) {
    check_square(m);
    check_enumeration_bound(m);
    DetData out;
    Permutation sigma(static_cast<std::size_t>(m.d));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        TropScalar s = TropScalar::unit();
        for (int i = 0; i < m.d && s.is_finite(); ++i) s += m.at(i, sigma[static_cast<std::size_t>(i)]);
        if (s.is_inf()) continue;
        if (out.value.is_inf() || s < out.value) {
            out.value = s;
            out.witnesses = {sigma};
        } else if (s == out.value) {
            out.witnesses.push_back(sigma);
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

bool permutation_even(const Permutation& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[i] > p[j]) ++inversions;
        }
    }
    return inversions % 2 == 0;
}

// All size-k index subsets of {0..d-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int d, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= d - (k - static_cast<int>(cur.size())); ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<int> complement(int d, const std::vector<int>& s) {
    std::vector<int> out;
    std::size_t k = 0;
    for (int i = 0; i < d; ++i) {
        if (k < s.size() && s[k] == i) {
            ++k;
        } else {
            out.push_back(i);
        }
    }
    return out;
}

}  // namespace

TropMatrix::TropMatrix(int dim) : d(dim) {
    if (dim <= 0) throw InputError("matrix dimension must be positive");
    a.assign(static_cast<std::size_t>(dim),
             std::vector<TropScalar>(static_cast<std::size_t>(dim)));
}

bool operator==(const TropMatrix& x, const TropMatrix& y) {
    return x.d == y.d && x.a == y.a;
}

TropScalar det_trop(const TropMatrix& m) {
    if (m.d == 0 && m.a.empty()) return TropScalar::unit();  // empty product
    return det_data(m).value;
}

DegeneracyClass degeneracy(const TropMatrix& m) {
    DetData dd = det_data(m);
    DegeneracyClass out;
    out.witnesses = std::move(dd.witnesses);
    if (dd.value.is_inf()) {
        out.tag = Degeneracy::Degenerate;
    } else if (out.witnesses.size() == 1) {
        out.tag = Degeneracy::NonDegenerate;
    } else {
        out.tag = Degeneracy::WeaklyNonDegenerateOnly;
    }
    return out;
}

TropSign sign_trop(const TropMatrix& m) {
    const DegeneracyClass dc = degeneracy(m);
    if (dc.tag == Degeneracy::Degenerate) {
        throw InputError("sign_trop requires a weakly non-degenerate matrix");
    }
    bool any_even = false, any_odd = false;
    for (const auto& w : dc.witnesses) (permutation_even(w) ? any_even : any_odd) = true;
    if (any_even && any_odd) return TropSign::Undetermined;
    return any_even ? TropSign::Positive : TropSign::Negative;
}

TropMatrix submatrix(const TropMatrix& m, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
    check_square(m);
    if (rows.size() != cols.size()) {
        throw InputError("submatrix requires equally many rows and columns");
    }
    for (const int r : rows) {
        if (r < 0 || r >= m.d) throw InputError("submatrix row index out of range");
    }
    for (const int c : cols) {
        if (c < 0 || c >= m.d) throw InputError("submatrix column index out of range");
    }
    if (rows.empty()) return TropMatrix();  // 0×0
    TropMatrix out(static_cast<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out.a[i][j] = m.at(rows[i], cols[j]);
        }
    }
    return out;
}

bool all_minors_nondegenerate(const TropMatrix& m) {
    check_square(m);
    check_enumeration_bound(m);
    for (int k = 1; k <= m.d; ++k) {
        const auto row_sets = subsets(m.d, k);
        const auto col_sets = subsets(m.d, k);
        for (const auto& rs : row_sets) {
            for (const auto& cs : col_sets) {
                const DetData dd = det_data(submatrix(m, rs, cs));
                if (dd.value.is_finite() && dd.witnesses.size() > 1) return false;
            }
        }
    }
    return true;
}

TropPoly char_poly(const TropMatrix& m) {
    check_square(m);
    check_enumeration_bound(m);
    TropPoly p(1);
    p.add_term({static_cast<std::int64_t>(m.d)}, Rat(0));  // all diagonal slots take λ
    for (int k = 0; k < m.d; ++k) {
        TropScalar ck = TropScalar::infinity();
        for (const auto& s : subsets(m.d, k)) {
            const auto keep = complement(m.d, s);
            ck = trop_min(ck, det_trop(submatrix(m, keep, keep)));
        }
        if (ck.is_finite()) p.add_term({static_cast<std::int64_t>(k)}, ck.value());
    }
    return p;
}

std::vector<TropScalar> eigenvalues(const TropMatrix& m) {
    const TropPoly p = char_poly(m);
    // Finite coefficient points (k, c_k); degree d is always present.
    std::vector<std::pair<std::int64_t, Rat>> pts;
    for (const auto& [e, c] : p.terms) pts.emplace_back(e[0], c);  // sorted by k
    std::vector<TropScalar> roots;
    const std::int64_t kmin = pts.front().first;
    // Lower convex hull, left to right (Andrew scan keeping right turns);
    // collinear middle points are dropped so each edge is maximal.
    std::vector<std::pair<std::int64_t, Rat>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // Keep b only if (a→b→pt) turns strictly left (b strictly below
            // the chord a→pt).
            const Rat cross = (Rat(b.first - a.first)) * (pt.second - a.second) -
                              (b.second - a.second) * Rat(pt.first - a.first);
            if (cross <= 0) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(pt);
    }
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        const Rat slope = (hull[i + 1].second - hull[i].second) /
                          Rat(hull[i + 1].first - hull[i].first);
        const std::int64_t mult = hull[i + 1].first - hull[i].first;
        for (std::int64_t t = 0; t < mult; ++t) roots.emplace_back(-slope);
    }
    for (std::int64_t t = 0; t < kmin; ++t) roots.push_back(TropScalar::infinity());
    std::sort(roots.begin(), roots.end());
    return roots;
}

TropScalar trace_trop(const TropMatrix& m) {
    check_square(m);
    TropScalar t = TropScalar::infinity();
    for (int i = 0; i < m.d; ++i) t = trop_min(t, m.at(i, i));
    return t;
}

TropMatrix generic_inverse_linear(const TropMatrix& m) {
    check_square(m);
    const TropScalar det = det_trop(m);
    if (det.is_inf()) {
        throw InputError("generic inverse requires a weakly non-degenerate matrix");
    }
    TropMatrix out(m.d);
    std::vector<int> all(static_cast<std::size_t>(m.d));
    std::iota(all.begin(), all.end(), 0);
    for (int i = 0; i < m.d; ++i) {
        for (int j = 0; j < m.d; ++j) {
            std::vector<int> rows = all, cols = all;
            rows.erase(rows.begin() + j);  // delete row j
            cols.erase(cols.begin() + i);  // delete column i
            out.at(i, j) = det_trop(submatrix(m, rows, cols)) - det;
        }
    }
    return out;
}

}  // namespace tropgerm
