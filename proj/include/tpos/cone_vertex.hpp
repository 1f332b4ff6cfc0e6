#pragma once

#include "tpos/classes.hpp"
#include "tpos/cone.hpp"
#include "tpos/error.hpp"
#include "tpos/fan.hpp"
#include "tpos/linalg.hpp"
#include "tpos/rational.hpp"

namespace tpos {

// Data for the cone over a polarized smooth toric surface: h is the very
// ample class defining the embedding, alpha a nef class whose Seshadri
// constant at the cone vertex is wanted, in the two dual readings below.
struct ConeVertexInput {
    Fan fan;     // complete smooth surface fan
    QVec alpha;  // nef divisor class
    QVec h;      // ample divisor class
};

namespace detail {

inline void check_cone_vertex(const Fan& fan, const ConeSystem& cs, const QVec& alpha,
                              const QVec& h) {
    require(fan.dim == 2, "cone vertex: the base must be a surface fan");
    require(alpha.size() == fan.rays.size() && h.size() == fan.rays.size(),
            "cone vertex: class length must match the ray count");
    require(cone_contains(cs.nef_divisors, alpha), "cone vertex: alpha is not nef");
    require(cone_contains(cs.nef_divisors, h, true), "cone vertex: h is not ample");
}

}  // namespace detail

// Seshadri constant of the dual class at the vertex, max{t >= 0 : alpha - t h
// nef}. Finite because every facet of the nef cone is positive on an ample h.
inline Rat vertex_seshadri_dual(const Fan& fan, const ConeSystem& cs, const QVec& alpha,
                                const QVec& h) {
    detail::check_cone_vertex(fan, cs, alpha, h);
    const auto shift = cone_max_shift(cs.nef_divisors, alpha, h);
    check_invariant(shift.has_value() && !shift->unbounded,
                    "cone vertex: shift along an ample class must be finite");
    return shift->t;
}

inline Rat vertex_seshadri_dual(const ConeVertexInput& in) {
    return vertex_seshadri_dual(in.fan, cone_system(in.fan), in.alpha, in.h);
}

// Seshadri constant of the dual class capped with the fundamental class:
// alpha.h / h^2, both intersection numbers on the surface. Never smaller than
// the dual reading.
inline Rat vertex_seshadri_curve(const Fan& fan, const ConeSystem& cs, const QVec& alpha,
                                 const QVec& h) {
    detail::check_cone_vertex(fan, cs, alpha, h);
    const QVec hc = nef_power_curve(fan, cs, h);
    const Rat den = pairing(hc, h);
    check_invariant(den > 0, "cone vertex: h^2 must be positive for ample h");
    return Rat(pairing(hc, alpha) / den);
}

inline Rat vertex_seshadri_curve(const ConeVertexInput& in) {
    return vertex_seshadri_curve(in.fan, cone_system(in.fan), in.alpha, in.h);
}

}  // namespace tpos
