#include "symdet/ratlp.hpp"

#include "symdet/errors.hpp"

namespace symdet {

bool lp_feasible(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b) {
    const int m = static_cast<int>(A.size());
    if (static_cast<int>(b.size()) != m) throw DimensionError("lp_feasible: |b| != rows of A");
    if (m == 0) return true;
    const int n = static_cast<int>(A[0].size());
    for (const auto& row : A)
        if (static_cast<int>(row.size()) != n) throw DimensionError("lp_feasible: ragged A");

    // Tableau [A | I | b] with one artificial variable per row; minimize the
    // artificials' sum. Rows are flipped so the right-hand side is >= 0.
    const int cols = n + m;
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(cols + 1));
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        bool flip = b[i] < 0;
        for (int j = 0; j < n; ++j) t[i][j] = flip ? -A[i][j] : A[i][j];
        t[i][n + i] = 1;
        t[i][cols] = flip ? -b[i] : b[i];
        basis[i] = n + i;
    }

    auto artificial = [&](int col) { return col >= n; };

    while (true) {
        // Bland: entering column = smallest index with negative reduced cost.
        int enter = -1;
        for (int j = 0; j < cols && enter < 0; ++j) {
            Rat d = artificial(j) ? Rat(1) : Rat(0);
            for (int i = 0; i < m; ++i)
                if (artificial(basis[i])) d -= t[i][j];
            if (d < 0) enter = j;
        }
        if (enter < 0) break;

        int leave = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][cols] / t[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0)
            throw InternalError("lp_feasible: unbounded phase-1 objective"); // cannot happen

        Rat piv = t[leave][enter];
        for (int j = 0; j <= cols; ++j) t[leave][j] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    Rat residual = 0;
    for (int i = 0; i < m; ++i)
        if (artificial(basis[i])) residual += t[i][cols];
    return residual == 0;
}

} // namespace symdet
