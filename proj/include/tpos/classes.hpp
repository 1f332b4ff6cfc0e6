#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "tpos/fan.hpp"
#include "tpos/polytope.hpp"

namespace tpos {

// Numerical classes on a smooth complete toric variety with r rays:
//  - a divisor class is a coefficient vector a (length r), one entry per
//    invariant divisor; two vectors name the same class iff they differ by a
//    relation vector (the span of the rows below);
//  - a curve class is its intersection vector c (length r), c_rho = C . D_rho,
//    constrained to sum_rho c_rho u_rho = 0.
// The pairing between them is the plain dot product.

// Row i is rho -> <e_i*, u_rho>; these rows span the relations among the
// invariant divisors, and their kernel is the space of curve classes.
inline QMat relation_rows(const Fan& fan) {
    QMat rel(fan.dim, QVec(fan.rays.size()));
    for (std::size_t i = 0; i < fan.dim; ++i)
        for (std::size_t rho = 0; rho < fan.rays.size(); ++rho) rel[i][rho] = fan.rays[rho][i];
    return rel;
}

// sum_rho c_rho u_rho, which must vanish for a genuine curve class.
inline QVec curve_constraint_residual(const Fan& fan, const QVec& c) {
    require(c.size() == fan.rays.size(), "curve class has wrong length");
    QVec res(fan.dim, Rat(0));
    for (std::size_t rho = 0; rho < fan.rays.size(); ++rho)
        res = add(res, scaled(fan.rays[rho], c[rho]));
    return res;
}

inline Rat pairing(const QVec& curve, const QVec& divisor) { return dot(curve, divisor); }

// Intersection vector of the invariant curve dual to a wall: 1 at the two
// off-wall rays, minus the change-of-basis coefficient on the wall rays,
// zero elsewhere. Integral for smooth fans.
inline QVec wall_curve_class(const Fan& fan, const Wall& w) {
    const QVec coeff = wall_change_of_basis(fan, w);
    QVec c(fan.rays.size(), Rat(0));
    const auto& sigma = fan.max_cones[w.sigma];
    for (std::size_t j = 0; j < sigma.size(); ++j)
        if (sigma[j] != w.u) c[sigma[j]] = -coeff[j];
    c[w.u] = 1;
    c[w.u_prime] = 1;
    check_invariant(is_zero(curve_constraint_residual(fan, c)),
                    "wall_curve_class: relation residual is nonzero");
    return c;
}

// The four positivity cones, all in class coordinates of length r:
//  - effective divisors: unit classes plus the relation span;
//  - nef divisors: dual to the curves' side of the Mori cone;
//  - Mori cone of curves: generated by the wall curve classes;
//  - movable curves: dual to the effective divisors.
// Curve cones live in the kernel of the relation rows and declare it as
// their ambient subspace.
struct ConeSystem {
    RationalCone eff_divisors;
    RationalCone nef_divisors;
    RationalCone mori_curves;
    RationalCone movable_curves;
};

inline ConeSystem cone_system(const Fan& fan) {
    const std::size_t r = fan.rays.size();
    const QMat rel = relation_rows(fan);
    QMat units(r, QVec(r, Rat(0)));
    for (std::size_t i = 0; i < r; ++i) units[i][i] = 1;

    ConeSystem cs;
    cs.eff_divisors = cone_from_generators(r, units, rel);
    QMat wall_classes;
    for (const auto& w : walls(fan)) wall_classes.push_back(wall_curve_class(fan, w));
    cs.mori_curves = cone_from_generators(r, wall_classes, {}, rel);
    cs.nef_divisors = cone_dual(cs.mori_curves);
    cs.movable_curves = cone_dual(cs.eff_divisors);
    return cs;
}

// Independent route to the movable cone: slice the nonnegative orthant by
// the curve-class constraint instead of dualizing the effective cone.
inline RationalCone movable_orthant_slice(const Fan& fan) {
    const std::size_t r = fan.rays.size();
    QMat units(r, QVec(r, Rat(0)));
    for (std::size_t i = 0; i < r; ++i) units[i][i] = 1;
    return cone_from_constraints(r, units, relation_rows(fan));
}

// Star subdivision bookkeeping for one maximal cone, with the class-level
// maps between the base and the blow-up.
struct BlowupContext {
    Fan blown;
    std::vector<std::size_t> sigma;   // ray indices of the subdivided cone
    std::size_t new_ray = 0;          // index of the exceptional ray
    QVec exceptional_divisor;         // unit class at the new ray
    QVec exceptional_curve;           // intersection vector of a line in the exceptional divisor
};

inline BlowupContext blowup_at_cone(const Fan& fan, std::size_t cone_index) {
    BlowupContext ctx;
    ctx.blown = star_subdivision(fan, cone_index);
    ctx.sigma = fan.max_cones[cone_index];
    ctx.new_ray = ctx.blown.rays.size() - 1;
    ctx.exceptional_divisor = QVec(ctx.blown.rays.size(), Rat(0));
    ctx.exceptional_divisor[ctx.new_ray] = 1;
    ctx.exceptional_curve = QVec(ctx.blown.rays.size(), Rat(0));
    for (auto idx : ctx.sigma) ctx.exceptional_curve[idx] = 1;
    ctx.exceptional_curve[ctx.new_ray] = -1;
    check_invariant(is_zero(curve_constraint_residual(ctx.blown, ctx.exceptional_curve)),
                    "blowup_at_cone: exceptional curve violates the relations");
    return ctx;
}

// Divisor pullback keeps the old coefficients and takes the sum over the
// subdivided cone at the new ray; together with the exceptional class E this
// makes the strict transforms pullback(D_rho) - E unit classes for rho in
// sigma, and pairs to zero against curves contracted by the blow-down.
inline QVec pullback_divisor(const BlowupContext& ctx, const QVec& a) {
    require(a.size() + 1 == ctx.blown.rays.size(), "pullback_divisor: wrong length");
    QVec out(a);
    Rat a0(0);
    for (auto idx : ctx.sigma) a0 += a[idx];
    out.push_back(a0);
    return out;
}

// Curve pullback (strict transform of a general member) keeps the pairing
// vector and pairs to zero with the exceptional divisor.
inline QVec pullback_curve(const BlowupContext& ctx, const QVec& c) {
    require(c.size() + 1 == ctx.blown.rays.size(), "pullback_curve: wrong length");
    QVec out(c);
    out.push_back(Rat(0));
    return out;
}

// Adjoint to pullback_curve: forget the exceptional coefficient.
inline QVec pushforward_divisor(const BlowupContext& ctx, QVec a) {
    require(a.size() == ctx.blown.rays.size(), "pushforward_divisor: wrong length");
    a.pop_back();
    return a;
}

// Adjoint to pullback_divisor: fold the exceptional pairing into the rays of
// the subdivided cone. Kills the exceptional curve, inverts pullback_curve.
inline QVec pushforward_curve(const BlowupContext& ctx, const QVec& c) {
    require(c.size() == ctx.blown.rays.size(), "pushforward_curve: wrong length");
    QVec out(c.begin(), c.end() - 1);
    for (auto idx : ctx.sigma) out[idx] += c.back();
    return out;
}

// {m : <m, u_rho> + a_rho >= 0 for every ray}.
inline Polytope polytope_from_divisor(const Fan& fan, const QVec& a) {
    require(a.size() == fan.rays.size(), "divisor class has wrong length");
    Polytope P;
    P.dim = fan.dim;
    for (std::size_t rho = 0; rho < fan.rays.size(); ++rho) {
        QVec row(fan.rays[rho]);
        row.push_back(a[rho]);
        P.rows.push_back(std::move(row));
    }
    return P;
}

// Volume of a divisor class: n! times the Euclidean volume of its section
// polytope. Positive exactly for big classes.
inline Rat divisor_volume(const Fan& fan, const QVec& a) {
    Rat factorial(1);
    for (std::size_t i = 2; i <= fan.dim; ++i) factorial *= Rat(static_cast<long>(i));
    return factorial * polytope_volume(polytope_from_divisor(fan, a));
}

// Intersection vector of the (n-1)-st self-intersection of a nef divisor:
// entry rho is (n-1)! times the facet volume of the section polytope on the
// supporting hyperplane of u_rho, measured against the induced lattice of
// that hyperplane. Zero entries for rays whose face is not a facet.
inline QVec nef_power_curve(const Fan& fan, const ConeSystem& cs, const QVec& a) {
    require(cone_contains(cs.nef_divisors, a), "nef_power_curve: divisor class is not nef");
    const std::size_t n = fan.dim;
    const VertexData vd = polytope_vertices(polytope_from_divisor(fan, a));
    check_invariant(vd.bounded, "nef_power_curve: section polytope of a complete fan is bounded");
    Rat factorial(1);
    for (std::size_t i = 2; i + 1 <= n; ++i) factorial *= Rat(static_cast<long>(i));
    QVec c(fan.rays.size(), Rat(0));
    for (std::size_t rho = 0; rho < fan.rays.size(); ++rho) {
        QMat tight;
        for (const auto& v : vd.vertices)
            if (dot(v, fan.rays[rho]) + a[rho] == 0) tight.push_back(v);
        if (tight.empty()) continue;
        const QMat lattice_basis = integral_kernel_basis(fan.rays[rho]);
        QMat coords;
        for (const auto& v : tight) {
            const auto x = coords_in_rowspan(lattice_basis, sub(v, tight[0]));
            check_invariant(x.has_value(), "nef_power_curve: facet leaves its own hyperplane");
            coords.push_back(*x);
        }
        c[rho] = factorial * point_set_volume(std::move(coords), n - 1);
    }
    check_invariant(is_zero(curve_constraint_residual(fan, c)),
                    "nef_power_curve: result violates the relations");
    if (is_integral(a))
        check_invariant(is_integral(c), "nef_power_curve: integral input gave a fractional class");
    return c;
}

}  // namespace tpos
