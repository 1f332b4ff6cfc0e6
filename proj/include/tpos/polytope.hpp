#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "tpos/cone.hpp"

namespace tpos {

// A rational convex polytope in H-description: rows of length dim+1, a row
// (f..., c) meaning f.x + c >= 0. The last slot doubles as the homogenizing
// coordinate: the same row cuts the cone {(x,t) : f.x + c t >= 0}.
struct Polytope {
    std::size_t dim = 0;
    QMat rows;
};

struct VertexData {
    QMat vertices;               // sorted; trustworthy when the polytope is pointed
    QMat recession_rays;         // nonzero directions the polytope contains
    bool bounded = false;
    bool empty = false;
    std::vector<char> redundant; // per input row: valid but not a facet and not an implied equation
};

inline VertexData polytope_vertices(const Polytope& P) {
    const std::size_t n = P.dim;
    for (const auto& r : P.rows)
        require(r.size() == n + 1, "polytope: row of wrong dimension");
    QMat cons = P.rows;
    QVec tpos_row(n + 1, Rat(0));
    tpos_row[n] = 1;
    cons.push_back(tpos_row);
    const RationalCone C = cone_from_constraints(n + 1, cons);

    VertexData out;
    out.bounded = C.lines.empty();
    for (const auto& ray : C.rays) {
        const Rat t = ray[n];
        check_invariant(t >= 0, "polytope_vertices: homogenization ray with negative height");
        if (t == 0) {
            out.recession_rays.push_back(QVec(ray.begin(), ray.end() - 1));
            out.bounded = false;
            continue;
        }
        QVec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = ray[i] / t;
        out.vertices.push_back(std::move(v));
    }
    sort_unique_rows(out.vertices);
    sort_unique_rows(out.recession_rays);
    // Lineality and recession generators all have height zero, so the set is
    // nonempty exactly when some extreme ray has positive height.
    out.empty = out.vertices.empty();
    for (const auto& r : P.rows) {
        const QVec reduced = primitive(reduce_mod_rowspace(r, C.eqs));
        const bool implied_equation = is_zero(reduced);
        const bool facet = std::binary_search(C.facets.begin(), C.facets.end(), reduced, lex_less);
        out.redundant.push_back(!implied_equation && !facet);
    }
    return out;
}

namespace detail {

// Splits a finite point set (affine dimension k, lexicographically sorted)
// into simplices: cone the smallest vertex over a triangulation of each
// facet not containing it.
inline void triangulate(const QMat& verts, std::size_t k, std::vector<QMat>& out) {
    check_invariant(verts.size() >= k + 1, "triangulate: too few points for the dimension");
    if (verts.size() == k + 1) {
        out.push_back(verts);
        return;
    }
    const QVec& v0 = verts.front();
    const std::size_t n = v0.size();
    QMat lifted;
    for (const auto& v : verts) {
        QVec y(v);
        y.push_back(Rat(1));
        lifted.push_back(std::move(y));
    }
    const RationalCone C = cone_from_generators(n + 1, lifted);
    for (const auto& phi : C.facets) {
        QMat face;
        bool has_v0 = false;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (dot(phi, lifted[i]) != 0) continue;
            face.push_back(verts[i]);
            if (i == 0) has_v0 = true;
        }
        if (has_v0) continue;
        std::vector<QMat> sub;
        triangulate(face, k - 1, sub);
        for (auto& S : sub) {
            S.push_back(v0);
            out.push_back(std::move(S));
        }
    }
}

inline std::size_t affine_rank(const QMat& verts) {
    if (verts.empty()) return 0;
    QMat diffs;
    for (std::size_t i = 1; i < verts.size(); ++i) diffs.push_back(sub(verts[i], verts[0]));
    return rank_of(std::move(diffs));
}

}  // namespace detail

// Euclidean volume, exactly. Zero for empty or lower-dimensional polytopes;
// unbounded input is an error.
inline Rat polytope_volume(const Polytope& P) {
    const VertexData vd = polytope_vertices(P);
    require(vd.bounded, "polytope_volume: polytope is unbounded");
    if (vd.empty) return Rat(0);
    const std::size_t n = P.dim;
    if (detail::affine_rank(vd.vertices) < n) return Rat(0);
    std::vector<QMat> simplices;
    detail::triangulate(vd.vertices, n, simplices);
    Rat total(0);
    Rat factorial(1);
    for (std::size_t i = 2; i <= n; ++i) factorial *= Rat(static_cast<long>(i));
    for (const auto& S : simplices) {
        QMat edges;
        for (std::size_t i = 0; i + 1 < S.size(); ++i) edges.push_back(sub(S[i], S.back()));
        const Rat d = det(std::move(edges));
        total += (d < 0 ? -d : d);
    }
    return total / factorial;
}

// Volume of the convex hull of a finite point set in R^k whose affine span
// is expected to be k-dimensional; 0 when it is lower-dimensional.
inline Rat point_set_volume(QMat points, std::size_t k) {
    sort_unique_rows(points);
    if (points.empty()) return Rat(0);
    require(points[0].size() == k, "point_set_volume: points must live in R^k");
    if (detail::affine_rank(points) < k) return Rat(0);
    std::vector<QMat> simplices;
    detail::triangulate(points, k, simplices);
    Rat total(0);
    Rat factorial(1);
    for (std::size_t i = 2; i <= k; ++i) factorial *= Rat(static_cast<long>(i));
    for (const auto& S : simplices) {
        QMat edges;
        for (std::size_t i = 0; i + 1 < S.size(); ++i) edges.push_back(sub(S[i], S.back()));
        const Rat d = det(std::move(edges));
        total += (d < 0 ? -d : d);
    }
    return total / factorial;
}

inline mpz_class rat_floor(const Rat& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline mpz_class rat_ceil(const Rat& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

// Number of integral points in the m-th dilation (m >= 1 integer), by direct
// enumeration over the bounding box of the dilated vertex set.
inline mpz_class lattice_point_count(const Polytope& P, unsigned long m) {
    require(m >= 1, "lattice_point_count: dilation factor must be at least 1");
    const VertexData vd = polytope_vertices(P);
    require(vd.bounded, "lattice_point_count: polytope is unbounded");
    if (vd.empty) return 0;
    const std::size_t n = P.dim;
    // Integer row normal forms of the dilated inequalities f.x + m c >= 0.
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& r : P.rows) {
        QVec scaled_row(r);
        scaled_row[n] *= static_cast<long>(m);
        const QVec zr = primitive(scaled_row);
        std::vector<mpz_class> row;
        for (const auto& x : zr) row.push_back(x.get_num());
        rows.push_back(std::move(row));
    }
    std::vector<mpz_class> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat mn = vd.vertices[0][i], mx = vd.vertices[0][i];
        for (const auto& v : vd.vertices) {
            mn = std::min(mn, v[i]);
            mx = std::max(mx, v[i]);
        }
        lo[i] = rat_ceil(mn * static_cast<long>(m));
        hi[i] = rat_floor(mx * static_cast<long>(m));
        if (hi[i] < lo[i]) return 0;
    }
    std::vector<mpz_class> x(lo);
    mpz_class count(0);
    for (;;) {
        bool inside = true;
        for (const auto& row : rows) {
            mpz_class s = row[n];
            for (std::size_t i = 0; i < n; ++i) s += row[i] * x[i];
            if (s < 0) {
                inside = false;
                break;
            }
        }
        if (inside) ++count;
        std::size_t pos = 0;
        while (pos < n) {
            ++x[pos];
            if (x[pos] <= hi[pos]) break;
            x[pos] = lo[pos];
            ++pos;
        }
        if (pos == n) break;
    }
    return count;
}

inline mpz_class binomial(std::size_t n, std::size_t k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Leading coefficient of the lattice point counting polynomial, via n-th
// finite differences of counts at dilations 1..n+1. For a full-dimensional
// bounded polytope this equals its volume.
inline Rat ehrhart_leading_coeff(const Polytope& P) {
    const std::size_t n = P.dim;
    Rat acc(0);
    for (std::size_t i = 0; i <= n; ++i) {
        const mpz_class c = binomial(n, i) * lattice_point_count(P, 1 + i);
        if ((n - i) % 2 == 0)
            acc += Rat(c);
        else
            acc -= Rat(c);
    }
    Rat factorial(1);
    for (std::size_t i = 2; i <= n; ++i) factorial *= Rat(static_cast<long>(i));
    return acc / factorial;
}

}  // namespace tpos
