#include "threecolour/linsolve.hpp"

#include <algorithm>

#include "threecolour/errors.hpp"

namespace threecolour {

LinearSolution solve_exact_linear(const RatMatrix& a, const RatVector& b) {
    size_t m = a.size();
    size_t n = m ? a[0].size() : 0;
    if (b.size() != m) throw Error("solve_exact_linear: dimension mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw Error("solve_exact_linear: ragged matrix");

    // Clear denominators row by row; Bareiss then stays in integers.
    std::vector<std::vector<Int>> w(m, std::vector<Int>(n + 1));
    for (size_t i = 0; i < m; ++i) {
        Int den(1);
        for (size_t j = 0; j < n; ++j)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a[i][j].get_den().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), b[i].get_den().get_mpz_t());
        for (size_t j = 0; j < n; ++j) w[i][j] = Rat(a[i][j] * Rat(den)).get_num();
        w[i][n] = Rat(b[i] * Rat(den)).get_num();
    }

    std::vector<size_t> pivot_col;
    Int prev(1);
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t sel = row;
        while (sel < m && w[sel][col] == 0) ++sel;
        if (sel == m) continue;
        std::swap(w[sel], w[row]);
        // Bareiss update: exact division by the previous pivot.
        for (size_t i = row + 1; i < m; ++i) {
            for (size_t j = col + 1; j <= n; ++j) {
                Int t = w[i][j] * w[row][col] - w[i][col] * w[row][j];
                mpz_divexact(w[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w[i][col] = 0;
        }
        prev = w[row][col];
        pivot_col.push_back(col);
        ++row;
    }
    size_t rank = row;
    for (size_t i = rank; i < m; ++i) {
        if (w[i][n] != 0)
            throw Inconsistent("solve_exact_linear: no solution (residual row " +
                               std::to_string(i) + ")");
    }

    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    auto back_substitute = [&](const RatVector& free_vals, bool homogeneous) {
        RatVector x(n, Rat(0));
        for (size_t k = 0; k < free_cols.size(); ++k) x[free_cols[k]] = free_vals[k];
        for (size_t i = rank; i-- > 0;) {
            size_t pc = pivot_col[i];
            Rat acc = homogeneous ? Rat(0) : Rat(w[i][n]);
            for (size_t j = pc + 1; j < n; ++j)
                if (w[i][j] != 0) acc -= Rat(w[i][j]) * x[j];
            x[pc] = acc / Rat(w[i][pc]);
        }
        return x;
    };

    LinearSolution sol;
    sol.particular = back_substitute(RatVector(free_cols.size(), Rat(0)), false);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        RatVector free_vals(free_cols.size(), Rat(0));
        free_vals[k] = 1;
        sol.kernel.push_back(back_substitute(free_vals, true));
    }
    return sol;
}

} // namespace threecolour
