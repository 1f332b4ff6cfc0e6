#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "tpos/error.hpp"
#include "tpos/rational.hpp"

namespace tpos {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

inline Rat dot(const QVec& a, const QVec& b) {
    check_invariant(a.size() == b.size(), "dot: dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

inline QVec add(const QVec& a, const QVec& b) {
    check_invariant(a.size() == b.size(), "add: dimension mismatch");
    QVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline QVec sub(const QVec& a, const QVec& b) {
    check_invariant(a.size() == b.size(), "sub: dimension mismatch");
    QVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline QVec scaled(const QVec& v, const Rat& c) {
    QVec r(v);
    for (auto& x : r) x *= c;
    return r;
}

inline QVec neg(const QVec& v) { return scaled(v, Rat(-1)); }

inline int lex_cmp(const QVec& a, const QVec& b) {
    check_invariant(a.size() == b.size(), "lex_cmp: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

inline bool lex_less(const QVec& a, const QVec& b) { return lex_cmp(a, b) < 0; }

inline void sort_unique_rows(QMat& rows) {
    std::sort(rows.begin(), rows.end(), lex_less);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

inline QMat transpose(const QMat& m) {
    if (m.empty()) return {};
    QMat t(m[0].size(), QVec(m.size(), Rat(0)));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

// In-place reduced row echelon form. Removes zero rows, makes leading
// coefficients 1, returns the pivot columns in increasing order. The result
// is the canonical basis of the input's row space.
inline std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[row], m[p]);
        const Rat lead = m[row][col];
        for (auto& x : m[row]) x /= lead;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rat f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

inline std::size_t rank_of(QMat m) { return rref(m).size(); }

inline QMat rowspace_basis(QMat m) {
    rref(m);
    return m;
}

inline std::vector<std::size_t> pivot_cols_of_rref(const QMat& basis) {
    std::vector<std::size_t> pivots;
    for (const auto& row : basis) {
        std::size_t c = 0;
        while (c < row.size() && row[c] == 0) ++c;
        check_invariant(c < row.size() && row[c] == 1, "pivot_cols_of_rref: not rref");
        pivots.push_back(c);
    }
    return pivots;
}

// Canonical coset representative of v modulo the row space of an rref basis:
// subtracts multiples of basis rows until every pivot coordinate is zero.
inline QVec reduce_mod_rowspace(QVec v, const QMat& basis) {
    const auto pivots = pivot_cols_of_rref(basis);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (v[pivots[i]] == 0) continue;
        const Rat f = v[pivots[i]];
        for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * basis[i][c];
    }
    return v;
}

// Canonical (rref) basis of {x : row . x = 0 for every row}.
inline QMat nullspace_basis(QMat rows, std::size_t dim) {
    const auto pivots = rref(rows);
    std::vector<bool> is_pivot(dim, false);
    for (auto p : pivots) is_pivot[p] = true;
    QMat basis;
    for (std::size_t f = 0; f < dim; ++f) {
        if (is_pivot[f]) continue;
        QVec x(dim, Rat(0));
        x[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -rows[i][f];
        basis.push_back(std::move(x));
    }
    rref(basis);
    return basis;
}

inline Rat det(QMat m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        check_invariant(row.size() == n, "det: matrix not square");
    Rat d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != col) {
            std::swap(m[p], m[col]);
            d = -d;
        }
        d *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return d;
}

// Unique solution of a square system, or nullopt when the matrix is singular.
inline std::optional<QVec> solve_square(QMat a, QVec b) {
    const std::size_t n = a.size();
    check_invariant(b.size() == n, "solve_square: size mismatch");
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    const auto pivots = rref(a);
    if (pivots.size() != n || (n > 0 && pivots.back() == n)) return std::nullopt;
    QVec x(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = a[i][n];
    return x;
}

inline std::optional<QMat> inverse(const QMat& m) {
    const std::size_t n = m.size();
    QMat aug(m);
    for (std::size_t i = 0; i < n; ++i) {
        check_invariant(aug[i].size() == n, "inverse: matrix not square");
        for (std::size_t j = 0; j < n; ++j) aug[i].push_back(Rat(i == j ? 1 : 0));
    }
    const auto pivots = rref(aug);
    if (pivots.size() != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    QMat inv(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

// Scales v by the unique positive rational making its entries coprime
// integers. The zero vector is returned unchanged.
inline QVec primitive(const QVec& v) {
    if (is_zero(v)) return v;
    mpz_class l(1);
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_class g(0);
    for (const auto& x : v) {
        mpz_class n = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    const Rat f = Rat(l) / Rat(g);
    return scaled(v, f);
}

inline bool is_integral(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return is_integer(x); });
}

// Coefficients x with x . B = y (rows of B as a spanning set), or nullopt
// when y is outside the row span. Underdetermined systems get the rref
// representative (free coefficients zero).
inline std::optional<QVec> coords_in_rowspan(const QMat& B, const QVec& y) {
    const std::size_t k = B.size();
    if (k == 0) return is_zero(y) ? std::optional<QVec>(QVec{}) : std::nullopt;
    QMat aug = transpose(B);
    check_invariant(y.size() == aug.size(), "coords_in_rowspan: dimension mismatch");
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(y[i]);
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == k) return std::nullopt;
    QVec x(k, Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][k];
    return x;
}

// For a nonzero integral vector u, a basis of the saturated lattice
// {m integral : m . u = 0}: the last n-1 rows of a unimodular V with V u a
// multiple of e_1. Rows are integral; over the rationals they span u's
// orthogonal kernel.
inline QMat integral_kernel_basis(const QVec& u) {
    const std::size_t n = u.size();
    check_invariant(is_integral(u) && !is_zero(u), "integral_kernel_basis: need nonzero integral u");
    std::vector<mpz_class> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = u[i].get_num();
    std::vector<std::vector<mpz_class>> V(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) V[i][i] = 1;
    for (std::size_t i = 1; i < n; ++i) {
        if (w[i] == 0) continue;
        mpz_class g, a, b;
        mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), w[0].get_mpz_t(), w[i].get_mpz_t());
        const mpz_class p = w[0] / g, q = w[i] / g;
        std::vector<mpz_class> r0(n), ri(n);
        for (std::size_t c = 0; c < n; ++c) {
            r0[c] = a * V[0][c] + b * V[i][c];
            ri[c] = -q * V[0][c] + p * V[i][c];
        }
        V[0] = std::move(r0);
        V[i] = std::move(ri);
        w[0] = g;
        w[i] = 0;
    }
    QMat basis;
    for (std::size_t i = 1; i < n; ++i) {
        QVec row(n);
        for (std::size_t c = 0; c < n; ++c) row[c] = Rat(V[i][c]);
        basis.push_back(std::move(row));
    }
    return basis;
}

}  // namespace tpos
