#include "sctx/lp.hpp"

#include <stdexcept>

namespace sctx {

namespace {

// Subtract factor * pivot_row from row, touching only the pivot row's
// nonzero columns.
void eliminate(RatVec& row, const RatVec& pivot_row, const Rat& factor,
               const std::vector<int>& nz) {
    if (factor == 0) return;
    for (int j : nz) row[j] -= factor * pivot_row[j];
}

}  // namespace

NonnegLpResult solve_nonneg(const RatMat& a, const RatVec& b) {
    const int m = static_cast<int>(a.size());
    const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
    if (static_cast<int>(b.size()) != m) throw std::invalid_argument("solve_nonneg: shape mismatch");

    // Tableau columns: n structural, m artificial, then the rhs.
    const int width = n + m + 1;
    RatMat t(m, RatVec(width, Rat(0)));
    std::vector<int> sign(m, 1);
    for (int i = 0; i < m; ++i) {
        sign[i] = b[i] < 0 ? -1 : 1;
        for (int j = 0; j < n; ++j) t[i][j] = sign[i] * a[i][j];
        t[i][n + i] = 1;
        t[i][width - 1] = sign[i] * b[i];
    }

    // Reduced-cost row for minimizing the sum of artificials.
    RatVec z(width, Rat(0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) z[j] -= t[i][j];
    for (int i = 0; i < m; ++i) z[width - 1] -= t[i][width - 1];

    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    std::vector<int> nz;
    while (true) {
        // Bland: entering = lowest-index column with negative reduced cost.
        int enter = -1;
        for (int j = 0; j < n + m; ++j) {
            if (z[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;

        int leave = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            const Rat ratio = t[i][width - 1] / t[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0)
            throw std::logic_error("solve_nonneg: unbounded phase-1 objective");

        RatVec& prow = t[leave];
        const Rat inv = Rat(1) / prow[enter];
        nz.clear();
        for (int j = 0; j < width; ++j) {
            if (prow[j] != 0) {
                prow[j] *= inv;
                nz.push_back(j);
            }
        }
        for (int i = 0; i < m; ++i) {
            if (i == leave) continue;
            const Rat f = t[i][enter];  // copy: eliminate writes t[i][enter]
            eliminate(t[i], prow, f, nz);
        }
        const Rat zf = z[enter];
        eliminate(z, prow, zf, nz);
        basis[leave] = enter;
    }

    NonnegLpResult res;
    const Rat objective = -z[width - 1];
    if (objective == 0) {
        res.feasible = true;
        res.x.assign(n, Rat(0));
        for (int i = 0; i < m; ++i)
            if (basis[i] < n) res.x[basis[i]] = t[i][width - 1];
        // Exact re-check of A x = b.
        for (int i = 0; i < m; ++i) {
            Rat dot(0);
            for (int j = 0; j < n; ++j)
                if (res.x[j] != 0) dot += a[i][j] * res.x[j];
            if (dot != b[i]) throw std::logic_error("solve_nonneg: feasible point check failed");
        }
        return res;
    }

    // Farkas multipliers from the artificial reduced costs, mapped back
    // through the row sign flips.
    res.feasible = false;
    res.farkas_y.assign(m, Rat(0));
    for (int i = 0; i < m; ++i) res.farkas_y[i] = sign[i] * (Rat(1) - z[n + i]);
    Rat dot_b(0);
    for (int i = 0; i < m; ++i) dot_b += res.farkas_y[i] * b[i];
    if (dot_b <= 0) throw std::logic_error("solve_nonneg: Farkas certificate check failed (rhs)");
    for (int j = 0; j < n; ++j) {
        Rat dot(0);
        for (int i = 0; i < m; ++i) dot += res.farkas_y[i] * a[i][j];
        if (dot > 0)
            throw std::logic_error("solve_nonneg: Farkas certificate check failed (column)");
    }
    return res;
}

LpResult lp_feasible(const LinearSystem& sys) {
    const int n = sys.nvars;
    const int me = static_cast<int>(sys.eq_a.size());
    const int mi = static_cast<int>(sys.ineq_a.size());

    // Free variables split as x = u - v; one slack per inequality.
    const int cols = 2 * n + mi;
    RatMat a(me + mi, RatVec(cols, Rat(0)));
    RatVec b(me + mi, Rat(0));
    for (int i = 0; i < me; ++i) {
        for (int j = 0; j < n; ++j) {
            a[i][j] = sys.eq_a[i][j];
            a[i][n + j] = -sys.eq_a[i][j];
        }
        b[i] = sys.eq_b[i];
    }
    for (int i = 0; i < mi; ++i) {
        for (int j = 0; j < n; ++j) {
            a[me + i][j] = sys.ineq_a[i][j];
            a[me + i][n + j] = -sys.ineq_a[i][j];
        }
        a[me + i][2 * n + i] = 1;
        b[me + i] = sys.ineq_b[i];
    }

    NonnegLpResult base = solve_nonneg(a, b);
    LpResult res;
    if (base.feasible) {
        res.feasible = true;
        res.point.assign(n, Rat(0));
        for (int j = 0; j < n; ++j) res.point[j] = base.x[j] - base.x[n + j];
        return res;
    }

    res.feasible = false;
    res.lambda_eq.assign(me, Rat(0));
    res.lambda_ineq.assign(mi, Rat(0));
    for (int i = 0; i < me; ++i) res.lambda_eq[i] = -base.farkas_y[i];
    for (int i = 0; i < mi; ++i) res.lambda_ineq[i] = -base.farkas_y[me + i];
    // lambda_ineq >= 0 holds because the slack columns forced y <= 0 there;
    // re-check the full certificate in the standard orientation.
    Rat rhs(0);
    for (int i = 0; i < me; ++i) rhs += res.lambda_eq[i] * sys.eq_b[i];
    for (int i = 0; i < mi; ++i) {
        if (res.lambda_ineq[i] < 0)
            throw std::logic_error("lp_feasible: negative inequality multiplier");
        rhs += res.lambda_ineq[i] * sys.ineq_b[i];
    }
    if (rhs >= 0) throw std::logic_error("lp_feasible: certificate rhs check failed");
    for (int j = 0; j < n; ++j) {
        Rat dot(0);
        for (int i = 0; i < me; ++i) dot += res.lambda_eq[i] * sys.eq_a[i][j];
        for (int i = 0; i < mi; ++i) dot += res.lambda_ineq[i] * sys.ineq_a[i][j];
        if (dot != 0) throw std::logic_error("lp_feasible: certificate combination is nonzero");
    }
    return res;
}

}  // namespace sctx
