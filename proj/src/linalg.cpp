#include "sctx/linalg.hpp"

namespace sctx {

namespace {

// Reduced row echelon form in place; returns the pivot column of each of
// the first r rows (r = rank).  When rhs is non-null it is carried along.
std::vector<int> rref(RatMat& a, RatVec* rhs) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        if (rhs) std::swap((*rhs)[piv], (*rhs)[r]);
        const Rat inv = Rat(1) / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        if (rhs) (*rhs)[r] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rat f = a[i][c];
            for (int j = c; j < cols; ++j)
                if (a[r][j] != 0) a[i][j] -= f * a[r][j];
            if (rhs) (*rhs)[i] -= f * (*rhs)[r];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(RatMat a) { return static_cast<int>(rref(a, nullptr).size()); }

std::optional<RatVec> solve_linear(RatMat a, RatVec b) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<int> pivots = rref(a, &b);
    const int r = static_cast<int>(pivots.size());
    for (int i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    RatVec x(cols, Rat(0));
    for (int i = 0; i < r; ++i) x[pivots[i]] = b[i];
    return x;
}

std::vector<RatVec> nullspace(RatMat a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<int> pivots = rref(a, nullptr);
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivots) is_pivot[c] = 1;

    std::vector<RatVec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols, Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace sctx
