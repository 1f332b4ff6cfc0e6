#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tpos/linalg.hpp"

namespace tpos {

// A closed rational polyhedral cone with both descriptions, all fields
// canonical so that equal cones have byte-equal representations:
//  - eqs: rref basis of span(K)^perp, so {x : eqs.x = 0} = span(K).
//  - lines: rref basis of the lineality space K ∩ -K.
//  - rays: extreme rays modulo lineality, each reduced mod rowspace(lines)
//    then scaled primitive integer, sorted; empty iff K is a subspace.
//  - facets: irredundant inequalities modulo rowspace(eqs), reduced then
//    primitive, sorted; K = {x : eqs.x = 0, facets.x >= 0}.
//  - ambient_eqs: rref basis cutting out the subspace K is declared to live
//    in (a superset of span(K)). Cones built from constraints remember their
//    equation rows here; "full-dimensional" is relative to this subspace.
struct RationalCone {
    std::size_t ambient_dim = 0;
    QMat rays;
    QMat lines;
    QMat facets;
    QMat eqs;
    QMat ambient_eqs;

    std::size_t dim() const { return ambient_dim - eqs.size(); }
    std::size_t lineality_dim() const { return lines.size(); }
    bool is_full_dimensional() const { return eqs.size() == ambient_eqs.size(); }
};

// Set equality (the declared ambient subspace is presentation, not content).
inline bool same_cone(const RationalCone& a, const RationalCone& b) {
    return a.ambient_dim == b.ambient_dim && a.rays == b.rays && a.lines == b.lines &&
           a.facets == b.facets && a.eqs == b.eqs;
}

namespace detail {

// Rank of rows restricted to the alive columns.
inline std::size_t masked_rank(const QMat& rows, const std::vector<char>& alive) {
    QMat m;
    for (const auto& v : rows) {
        QVec r;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (alive[c]) r.push_back(v[c]);
        m.push_back(std::move(r));
    }
    return rank_of(std::move(m));
}

// Basis of {masked functionals vanishing on all rows}, re-embedded with
// zeros at dead coordinates.
inline QMat masked_annihilator(const QMat& rows, const std::vector<char>& alive) {
    std::vector<std::size_t> alive_cols;
    for (std::size_t c = 0; c < alive.size(); ++c)
        if (alive[c]) alive_cols.push_back(c);
    QMat m;
    for (const auto& v : rows) {
        QVec r;
        for (auto c : alive_cols) r.push_back(v[c]);
        m.push_back(std::move(r));
    }
    QMat small = nullspace_basis(std::move(m), alive_cols.size());
    QMat full;
    for (const auto& s : small) {
        QVec row(alive.size(), Rat(0));
        for (std::size_t i = 0; i < alive_cols.size(); ++i) row[alive_cols[i]] = s[i];
        full.push_back(std::move(row));
    }
    return full;
}

// Keeps exactly the facet rows of the cone generated by gens (restricted to
// alive coordinates): a valid row supports a facet iff the generators tight
// on it span one dimension less than all generators do. Rows vanishing on
// every generator are redundant here because the caller always carries the
// full equation system alongside.
inline void facet_filter(QMat& rows, const QMat& gens, const std::vector<char>& alive) {
    for (auto& r : rows) r = primitive(r);
    sort_unique_rows(rows);
    const std::size_t span = masked_rank(gens, alive);
    QMat kept;
    for (const auto& r : rows) {
        if (is_zero(r)) continue;
        QMat tight;
        bool valid = true;
        bool all_tight = true;
        for (const auto& g : gens) {
            const Rat v = dot(r, g);
            if (v < 0) {
                valid = false;
                break;
            }
            if (v == 0)
                tight.push_back(g);
            else
                all_tight = false;
        }
        check_invariant(valid, "facet_filter: invalid row survived elimination");
        if (all_tight) continue;
        if (masked_rank(tight, alive) + 1 == span) kept.push_back(r);
    }
    rows = std::move(kept);
}

}  // namespace detail

// V-description to double description: the cone generated by gens plus the
// span of lines, inside R^d. Facets come from Fourier-Motzkin elimination of
// the multiplier variables in {x = sum of multipliers times generators,
// multipliers >= 0}, with redundancy removed after every elimination step.
// ambient_rows (optional) declare the subspace the cone lives in; every
// generator must satisfy them.
inline RationalCone cone_from_generators(std::size_t d, const QMat& gens, const QMat& lines_in = {},
                                         const QMat& ambient_rows = {}) {
    QMat gen_list;
    for (const auto& g : gens) {
        require(g.size() == d, "cone_from_generators: generator of wrong dimension");
        if (!is_zero(g)) gen_list.push_back(primitive(g));
    }
    sort_unique_rows(gen_list);
    for (const auto& l : lines_in)
        require(l.size() == d, "cone_from_generators: line of wrong dimension");
    const QMat line_span = rowspace_basis(lines_in);
    QMat G = gen_list;
    for (const auto& l : line_span) {
        G.push_back(l);
        G.push_back(neg(l));
    }
    const std::size_t k = G.size();

    RationalCone K;
    K.ambient_dim = d;
    K.eqs = nullspace_basis(G, d);
    K.ambient_eqs = rowspace_basis(ambient_rows);
    for (const auto& a : K.ambient_eqs) {
        require(a.size() == d, "cone_from_generators: ambient row of wrong dimension");
        for (const auto& g : G)
            require(dot(a, g) == 0, "cone_from_generators: generator outside declared ambient subspace");
    }

    // Lifted generators y_t = (g_t, e_t) in R^{d+k}. Throughout, the system
    // {annihilator of lifted gens = 0, IN >= 0} restricted to alive
    // coordinates cuts out exactly the projection of the lifted cone.
    const std::size_t total = d + k;
    std::vector<char> alive(total, 1);
    QMat ys(k, QVec(total, Rat(0)));
    for (std::size_t t = 0; t < k; ++t) {
        for (std::size_t i = 0; i < d; ++i) ys[t][i] = G[t][i];
        ys[t][d + t] = 1;
    }
    QMat IN(k, QVec(total, Rat(0)));
    for (std::size_t t = 0; t < k; ++t) IN[t][d + t] = 1;

    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t c = d + j;
        const QMat EQ = detail::masked_annihilator(ys, alive);
        {
            QMat reduced;
            for (auto& r : IN) {
                QVec rr = primitive(reduce_mod_rowspace(std::move(r), EQ));
                if (!is_zero(rr)) reduced.push_back(std::move(rr));
            }
            sort_unique_rows(reduced);
            IN = std::move(reduced);
        }
        const QVec* pivot_eq = nullptr;
        for (const auto& e : EQ)
            if (e[c] != 0) {
                pivot_eq = &e;
                break;
            }
        if (pivot_eq != nullptr) {
            const QVec e = *pivot_eq;
            for (auto& r : IN) {
                if (r[c] == 0) continue;
                const Rat f = r[c] / e[c];
                for (std::size_t col = 0; col < total; ++col) r[col] -= f * e[col];
            }
        } else {
            QMat pos, negs, zero;
            for (auto& r : IN) {
                if (r[c] > 0)
                    pos.push_back(std::move(r));
                else if (r[c] < 0)
                    negs.push_back(std::move(r));
                else
                    zero.push_back(std::move(r));
            }
            IN = std::move(zero);
            for (const auto& p : pos)
                for (const auto& q : negs) {
                    QVec r(total);
                    for (std::size_t col = 0; col < total; ++col)
                        r[col] = p[col] * (-q[c]) + q[col] * p[c];
                    IN.push_back(std::move(r));
                }
        }
        alive[c] = 0;
        detail::facet_filter(IN, ys, alive);
    }

    for (auto& r : IN) {
        r.resize(d);
        r = primitive(reduce_mod_rowspace(std::move(r), K.eqs));
    }
    sort_unique_rows(IN);
    K.facets = std::move(IN);

    QMat wall_rows = K.eqs;
    for (const auto& f : K.facets) wall_rows.push_back(f);
    K.lines = nullspace_basis(std::move(wall_rows), d);

    const std::size_t extremal_rank = d - K.lines.size() - 1;
    QMat rays;
    for (const auto& g : gen_list) {
        const QVec rep = primitive(reduce_mod_rowspace(g, K.lines));
        if (is_zero(rep)) continue;
        QMat tight = K.eqs;
        for (const auto& f : K.facets)
            if (dot(f, g) == 0) tight.push_back(f);
        if (rank_of(std::move(tight)) == extremal_rank) rays.push_back(rep);
    }
    sort_unique_rows(rays);
    K.rays = std::move(rays);
    return K;
}

// H-description to double description: {x : each ineq >= 0, each eq = 0}.
// Computed by running cone_from_generators on the constraint functionals and
// swapping roles: the facets of the cone generated by the constraints are the
// extreme rays of the solution cone, its extreme rays are the facets, its
// span-equations are the lineality lines, and its lineality is the equation
// set. The canonicalization conventions above make the swap exact.
inline RationalCone cone_from_constraints(std::size_t d, const QMat& ineqs, const QMat& eqs = {}) {
    RationalCone D = cone_from_generators(d, ineqs, eqs);
    RationalCone K;
    K.ambient_dim = d;
    K.rays = std::move(D.facets);
    K.facets = std::move(D.rays);
    K.lines = std::move(D.eqs);
    K.eqs = std::move(D.lines);
    K.ambient_eqs = rowspace_basis(eqs);
    for (const auto& a : K.ambient_eqs)
        check_invariant(is_zero(reduce_mod_rowspace(a, K.eqs)),
                        "cone_from_constraints: declared equations escape the span annihilator");
    return K;
}

// The dual cone {phi : phi . x >= 0 for all x in K}, recomputed from K's
// generators (not by swapping fields), so dual(dual(K)) genuinely exercises
// both conversion directions. It lives in the annihilator of K's lineality.
inline RationalCone cone_dual(const RationalCone& K) {
    return cone_from_constraints(K.ambient_dim, K.rays, K.lines);
}

// Membership. strict asks for the relative interior *and* full
// dimensionality with respect to the declared ambient subspace: a cone that
// is lower-dimensional there has empty interior and always answers false.
inline bool cone_contains(const RationalCone& K, const QVec& v, bool strict = false) {
    require(v.size() == K.ambient_dim, "cone_contains: dimension mismatch");
    for (const auto& e : K.eqs)
        if (dot(e, v) != 0) return false;
    if (strict && !K.is_full_dimensional()) return false;
    for (const auto& f : K.facets) {
        const Rat x = dot(f, v);
        if (strict ? x <= 0 : x < 0) return false;
    }
    return true;
}

struct Shift {
    bool unbounded = false;
    Rat t;
};

// sup{t >= 0 : v - t w in K}, for v in K: nullopt if v is not in K, else the
// exact supremum or unbounded. Any direction leaving span(K) pins t at 0;
// otherwise the binding facet gives the minimum ratio.
inline std::optional<Shift> cone_max_shift(const RationalCone& K, const QVec& v, const QVec& w) {
    require(w.size() == K.ambient_dim, "cone_max_shift: dimension mismatch");
    if (!cone_contains(K, v)) return std::nullopt;
    for (const auto& e : K.eqs)
        if (dot(e, w) != 0) return Shift{false, Rat(0)};
    bool found = false;
    Rat best(0);
    for (const auto& f : K.facets) {
        const Rat fw = dot(f, w);
        if (fw <= 0) continue;
        const Rat t = dot(f, v) / fw;
        if (!found || t < best) {
            found = true;
            best = t;
        }
    }
    if (!found) return Shift{true, Rat(0)};
    return Shift{false, best};
}

}  // namespace tpos
