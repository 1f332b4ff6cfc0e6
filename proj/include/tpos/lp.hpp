#pragma once

#include <cstddef>
#include <vector>

#include "tpos/linalg.hpp"

namespace tpos {

// Exact feasibility test for {x : A x >= b} with x free, via a phase-1
// simplex with Bland's rule (no cycling, no floating point). Splits x into
// nonnegative parts, adds one slack and one artificial variable per row and
// minimizes the artificial sum; the system is feasible iff the minimum is 0.
inline bool linear_system_feasible(const QMat& A, const QVec& b) {
    const std::size_t m = A.size();
    check_invariant(b.size() == m, "linear_system_feasible: size mismatch");
    if (m == 0) return true;
    const std::size_t n = A[0].size();
    const std::size_t cols = 2 * n + 2 * m;  // u, w, slack, artificial
    QMat T(m, QVec(cols + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        check_invariant(A[i].size() == n, "linear_system_feasible: ragged matrix");
        const int sign = b[i] >= 0 ? 1 : -1;
        for (std::size_t j = 0; j < n; ++j) {
            T[i][j] = Rat(sign) * A[i][j];
            T[i][n + j] = Rat(-sign) * A[i][j];
        }
        T[i][2 * n + i] = Rat(-sign);
        T[i][2 * n + m + i] = 1;
        T[i][cols] = Rat(sign) * b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = 2 * n + m + i;
    // Reduced costs d_j = c_j - sum_i T[i][j] for the all-artificial basis;
    // d[cols] tracks minus the objective value.
    QVec d(cols + 1, Rat(0));
    for (std::size_t j = 0; j <= cols; ++j) {
        Rat colsum(0);
        for (std::size_t i = 0; i < m; ++i) colsum += T[i][j];
        const bool artificial = j >= 2 * n + m && j < cols;
        d[j] = Rat(artificial ? 1 : 0) - colsum;
    }
    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (d[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;
        std::size_t leave = m;
        Rat best(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            const Rat ratio = T[i][cols] / T[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        check_invariant(leave != m, "phase-1 objective cannot be unbounded");
        const Rat pivot = T[leave][enter];
        for (auto& x : T[leave]) x /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            const Rat f = T[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
        }
        if (d[enter] != 0) {
            const Rat f = d[enter];
            for (std::size_t j = 0; j <= cols; ++j) d[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }
    return d[cols] == 0;
}

}  // namespace tpos
