#include "core/lp.h"

#include "core/errors.h"

#include <cstddef>
#include <utility>

namespace tropgerm {

namespace {

// Dense exact simplex tableau. Rows hold equality constraints in all current
// columns with nonnegative right-hand sides; basis[i] is the column basic in
// row i (identity column there). The objective row stores reduced costs for
// the current basis: z = objval + sum obj[j] * x_j over nonbasic j.
class Tableau {
public:
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    std::vector<int> basis;
    std::vector<Rat> obj;
    Rat objval = 0;

    std::size_t ncols() const { return obj.size(); }

    void pivot(std::size_t r, std::size_t col) {
        const Rat p = rows[r][col];
        for (auto& v : rows[r]) v /= p;
        rhs[r] /= p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const Rat f = rows[i][col];
            for (std::size_t j = 0; j < ncols(); ++j) rows[i][j] -= f * rows[r][j];
            rhs[i] -= f * rhs[r];
        }
        if (obj[col] != 0) {
            const Rat f = obj[col];
            for (std::size_t j = 0; j < ncols(); ++j) obj[j] -= f * rows[r][j];
            objval += f * rhs[r];
        }
        basis[r] = static_cast<int>(col);
    }

    // Bland's rule: enter the lowest-index column with positive reduced cost;
    // leave by the minimum ratio, ties broken by lowest basic variable index.
    // Returns false when the objective is unbounded above.
    bool maximize() {
        for (;;) {
            std::size_t enter = ncols();
            for (std::size_t j = 0; j < ncols(); ++j) {
                if (obj[j] > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == ncols()) return true;  // optimal

            std::size_t leave = rows.size();
            Rat best_ratio = 0;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) continue;
                const Rat ratio = rhs[i] / rows[i][enter];
                if (leave == rows.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == rows.size()) return false;  // unbounded
            pivot(leave, enter);
        }
    }

    // Rebuilds the objective row for costs `costs` (length <= ncols, rest 0),
    // priced out against the current basis.
    void set_objective(const std::vector<Rat>& costs) {
        obj.assign(ncols(), Rat(0));
        for (std::size_t j = 0; j < costs.size(); ++j) obj[j] = costs[j];
        objval = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto bcol = static_cast<std::size_t>(basis[i]);
            if (obj[bcol] == 0) continue;
            const Rat f = obj[bcol];
            for (std::size_t j = 0; j < ncols(); ++j) obj[j] -= f * rows[i][j];
            objval += f * rhs[i];
        }
    }
};

}  // namespace

LpResult lp_maximize(const std::vector<std::vector<Rat>>& A,
                     const std::vector<Rat>& b,
                     const std::vector<Rat>& c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    if (b.size() != m) throw InputError("lp_maximize: row/rhs count mismatch");
    for (const auto& row : A) {
        if (row.size() != n) throw InputError("lp_maximize: row length mismatch");
    }

    // Columns: u_0..u_{n-1}, w_0..w_{n-1} (x_j = u_j - w_j), slack_0..slack_{m-1},
    // then one artificial per negative-rhs row.
    const std::size_t slack0 = 2 * n;
    const std::size_t art0 = slack0 + m;
    std::size_t nart = 0;
    for (const auto& bi : b) {
        if (bi < 0) ++nart;
    }
    const std::size_t total = art0 + nart;

    Tableau t;
    t.rows.assign(m, std::vector<Rat>(total, Rat(0)));
    t.rhs = b;
    t.basis.assign(m, -1);
    t.obj.assign(total, Rat(0));

    std::size_t next_art = art0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            t.rows[i][j] = A[i][j];
            t.rows[i][n + j] = -A[i][j];
        }
        t.rows[i][slack0 + i] = 1;
        if (t.rhs[i] < 0) {
            for (auto& v : t.rows[i]) v = -v;
            t.rhs[i] = -t.rhs[i];
            t.rows[i][next_art] = 1;
            t.basis[i] = static_cast<int>(next_art);
            ++next_art;
        } else {
            t.basis[i] = static_cast<int>(slack0 + i);
        }
    }

    if (nart > 0) {
        // Phase 1: maximize -sum(artificials).
        std::vector<Rat> phase1(total, Rat(0));
        for (std::size_t j = art0; j < total; ++j) phase1[j] = -1;
        t.set_objective(phase1);
        t.maximize();  // bounded above by 0
        if (t.objval != 0) return {LpStatus::Infeasible, Rat(0), {}};

        // Pivot any degenerate basic artificial out on a structural/slack
        // column; a fully zero row is redundant and is dropped.
        for (std::size_t i = 0; i < t.rows.size();) {
            if (static_cast<std::size_t>(t.basis[i]) < art0) {
                ++i;
                continue;
            }
            std::size_t col = art0;
            for (std::size_t j = 0; j < art0; ++j) {
                if (t.rows[i][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col < art0) {
                t.pivot(i, col);
                ++i;
            } else {
                t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
                t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
        // Drop artificial columns.
        for (auto& row : t.rows) row.resize(art0);
        t.obj.resize(art0);
    }

    // Phase 2: maximize c·(u - w).
    std::vector<Rat> phase2(art0, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
        phase2[j] = c[j];
        phase2[n + j] = -c[j];
    }
    t.set_objective(phase2);
    if (!t.maximize()) return {LpStatus::Unbounded, Rat(0), {}};

    std::vector<Rat> split(2 * n, Rat(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto bcol = static_cast<std::size_t>(t.basis[i]);
        if (bcol < 2 * n) split[bcol] = t.rhs[i];
    }
    LpResult res;
    res.status = LpStatus::Optimal;
    res.value = t.objval;
    res.point.resize(n);
    for (std::size_t j = 0; j < n; ++j) res.point[j] = split[j] - split[n + j];
    return res;
}

bool lp_feasible(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b) {
    const std::size_t n = A.empty() ? 0 : A.front().size();
    const LpResult r = lp_maximize(A, b, std::vector<Rat>(n, Rat(0)));
    return r.status == LpStatus::Optimal;
}

}  // namespace tropgerm
