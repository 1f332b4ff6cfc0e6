#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tpos/classes.hpp"

namespace tpos {

// Local positivity invariants at torus-invariant points. The point is always
// named by the index of its maximal cone; values are exact rationals, with
// minus infinity tracked as a flag rather than a sentinel number.

enum class SeshadriStatus { Exact, NegInfinityWitness, UpperBoundOnly };
enum class SeshadriMethod { RayFormula, BlowupMaxShift };

struct SeshadriResult {
    bool neg_infinity = false;
    Rat value;  // meaningful only when neg_infinity is false
    SeshadriStatus status = SeshadriStatus::Exact;
    SeshadriMethod method = SeshadriMethod::RayFormula;
    std::optional<std::size_t> witness_ray;  // set exactly for NegInfinityWitness
};

enum class FujitaKind { DivisorAtPoint, CurveAtPoint };

struct FujitaResult {
    Rat value;
    FujitaKind kind = FujitaKind::DivisorAtPoint;
};

namespace detail {

inline void require_curve_class(const Fan& fan, const QVec& c) {
    require(is_zero(curve_constraint_residual(fan, c)),
            "curve class does not satisfy the ray relations");
}

inline bool nonnegative(const QVec& c) {
    for (const auto& x : c)
        if (x < 0) return false;
    return true;
}

inline const std::vector<std::size_t>& maximal_cone(const Fan& fan, std::size_t sigma_index) {
    require(sigma_index < fan.max_cones.size(),
            "no maximal cone with index " + std::to_string(sigma_index));
    return fan.max_cones[sigma_index];
}

}  // namespace detail

// Seshadri constant of a curve class at the invariant point of a maximal
// cone, by the ray minimum. For a movable class (all pairings nonnegative)
// the minimum over the cone's rays is the exact value. A negative pairing on
// a ray outside the cone forces the value to minus infinity, the ray being
// the witness divisor; negative pairings confined to the cone's own rays
// leave the minimum an upper bound only.
inline SeshadriResult seshadri_curve(const Fan& fan, const QVec& c, std::size_t sigma_index) {
    detail::require_curve_class(fan, c);
    const auto& sigma = detail::maximal_cone(fan, sigma_index);
    SeshadriResult res;
    res.method = SeshadriMethod::RayFormula;
    for (std::size_t rho = 0; rho < fan.rays.size(); ++rho) {
        if (c[rho] >= 0) continue;
        if (std::binary_search(sigma.begin(), sigma.end(), rho)) continue;
        res.neg_infinity = true;
        res.status = SeshadriStatus::NegInfinityWitness;
        res.witness_ray = rho;
        return res;
    }
    res.value = c[sigma[0]];
    for (auto rho : sigma)
        if (c[rho] < res.value) res.value = c[rho];
    res.status = detail::nonnegative(c) ? SeshadriStatus::Exact : SeshadriStatus::UpperBoundOnly;
    return res;
}

// Precomputed blow-up data for the invariants that shift classes against the
// exceptional curve or divisor upstairs.
struct BlowupInvariantContext {
    BlowupContext bl;
    ConeSystem cones_up;
};

inline BlowupInvariantContext blowup_invariant_context(const Fan& fan, std::size_t sigma_index) {
    detail::maximal_cone(fan, sigma_index);
    BlowupInvariantContext b{blowup_at_cone(fan, sigma_index), {}};
    b.cones_up = cone_system(b.bl.blown);
    return b;
}

// Seshadri constant of a movable curve class by the blow-up description: the
// largest t with pullback(C) - t * (line in the exceptional divisor) still
// movable upstairs. Agrees with the ray formula exactly.
inline SeshadriResult seshadri_curve_blowup(const BlowupInvariantContext& b, const QVec& c) {
    detail::require_curve_class(b.bl.blown, pullback_curve(b.bl, c));
    require(detail::nonnegative(c), "seshadri_curve_blowup: curve class is not movable");
    const auto shift =
        cone_max_shift(b.cones_up.movable_curves, pullback_curve(b.bl, c), b.bl.exceptional_curve);
    check_invariant(shift.has_value() && !shift->unbounded,
                    "seshadri_curve_blowup: pullback of a movable class must shift boundedly");
    SeshadriResult res;
    res.value = shift->t;
    res.status = SeshadriStatus::Exact;
    res.method = SeshadriMethod::BlowupMaxShift;
    return res;
}

inline SeshadriResult seshadri_curve_blowup(const Fan& fan, const QVec& c,
                                            std::size_t sigma_index) {
    return seshadri_curve_blowup(blowup_invariant_context(fan, sigma_index), c);
}

// Seshadri constant of a nef divisor class at an invariant point: the least
// degree of the invariant curves through the point, i.e. the minimum pairing
// with the wall curves of the cone's facets.
inline Rat seshadri_divisor(const Fan& fan, const ConeSystem& cs, const QVec& a,
                            std::size_t sigma_index) {
    require(cone_contains(cs.nef_divisors, a), "seshadri_divisor: divisor class is not nef");
    const auto& sigma = detail::maximal_cone(fan, sigma_index);
    std::map<std::vector<std::size_t>, Wall> by_tau;
    for (auto& w : walls(fan)) {
        auto tau = w.tau;
        by_tau.emplace(std::move(tau), std::move(w));
    }
    std::optional<Rat> best;
    for (const auto& tau : subsets_of_size(sigma, fan.dim - 1)) {
        const auto it = by_tau.find(tau);
        check_invariant(it != by_tau.end(), "seshadri_divisor: facet of a maximal cone is no wall");
        const Rat v = pairing(wall_curve_class(fan, it->second), a);
        if (!best || v < *best) best = v;
    }
    check_invariant(best.has_value(), "seshadri_divisor: maximal cone has no facets");
    return *best;
}

// Seshadri constant of a nef dual class in codimension k, given its values
// on the invariant subvarieties: the minimum of the supplied table over the
// (n-k)-dimensional subcones of sigma. On a smooth fan all local
// multiplicities are 1, so no correction factors appear.
inline Rat seshadri_nef_dual(const Fan& fan, std::size_t k,
                             const std::map<std::vector<std::size_t>, Rat>& value_table,
                             std::size_t sigma_index) {
    require(k >= 1 && k <= fan.dim, "seshadri_nef_dual: codimension out of range");
    const auto& sigma = detail::maximal_cone(fan, sigma_index);
    std::optional<Rat> best;
    for (const auto& theta : subsets_of_size(sigma, fan.dim - k)) {
        const auto it = value_table.find(theta);
        if (it == value_table.end()) {
            std::string key = "{";
            for (std::size_t i = 0; i < theta.size(); ++i)
                key += (i ? "," : "") + std::to_string(theta[i]);
            throw input_error("seshadri_nef_dual: value table has no entry for subcone " + key +
                              "}");
        }
        if (!best || it->second < *best) best = it->second;
    }
    check_invariant(best.has_value(), "seshadri_nef_dual: no subcones of the requested dimension");
    return *best;
}

// Largest t with pullback(L) - t E pseudo-effective on the blow-up: the
// maximal multiplicity at the point of effective divisors in the class.
inline FujitaResult fujita_divisor(const BlowupInvariantContext& b, const QVec& a) {
    const auto shift = cone_max_shift(b.cones_up.eff_divisors, pullback_divisor(b.bl, a),
                                      b.bl.exceptional_divisor);
    check_invariant(shift.has_value() && !shift->unbounded,
                    "fujita_divisor: pullback of an effective class must shift boundedly");
    return FujitaResult{shift->t, FujitaKind::DivisorAtPoint};
}

inline FujitaResult fujita_divisor(const Fan& fan, const ConeSystem& cs, const QVec& a,
                                   std::size_t sigma_index) {
    require(cone_contains(cs.eff_divisors, a), "fujita_divisor: divisor class is not effective");
    return fujita_divisor(blowup_invariant_context(fan, sigma_index), a);
}

// Curve counterpart: largest t with pullback(C) - t ell still effective
// (in the Mori cone) upstairs.
inline FujitaResult fujita_curve(const BlowupInvariantContext& b, const QVec& c) {
    const auto shift =
        cone_max_shift(b.cones_up.mori_curves, pullback_curve(b.bl, c), b.bl.exceptional_curve);
    check_invariant(shift.has_value() && !shift->unbounded,
                    "fujita_curve: pullback of an effective class must shift boundedly");
    return FujitaResult{shift->t, FujitaKind::CurveAtPoint};
}

inline FujitaResult fujita_curve(const Fan& fan, const ConeSystem& cs, const QVec& c,
                                 std::size_t sigma_index) {
    detail::require_curve_class(fan, c);
    require(cone_contains(cs.mori_curves, c), "fujita_curve: curve class is not effective");
    return fujita_curve(blowup_invariant_context(fan, sigma_index), c);
}

// The divisors pairing to zero with a movable class, with the two structure
// statements attached: their classes are linearly independent whenever the
// constant is positive somewhere, and that happens exactly when some maximal
// cone avoids all the zero rays.
struct NullLocus {
    std::vector<std::size_t> rays;
    bool independent = false;
    bool witness_point_exists = false;
};

inline NullLocus null_locus(const Fan& fan, const QVec& c) {
    detail::require_curve_class(fan, c);
    require(detail::nonnegative(c), "null_locus: curve class is not movable");
    NullLocus out;
    for (std::size_t rho = 0; rho < fan.rays.size(); ++rho)
        if (c[rho] == 0) out.rays.push_back(rho);

    QMat rows = relation_rows(fan);
    const std::size_t base_rank = rank_of(rows);
    for (auto rho : out.rays) {
        QVec e(fan.rays.size(), Rat(0));
        e[rho] = 1;
        rows.push_back(std::move(e));
    }
    out.independent = rank_of(std::move(rows)) == base_rank + out.rays.size();

    for (const auto& sigma : fan.max_cones) {
        bool all_positive = true;
        for (auto rho : sigma) all_positive = all_positive && c[rho] > 0;
        if (all_positive) {
            out.witness_point_exists = true;
            break;
        }
    }
    check_invariant(!out.witness_point_exists || out.independent,
                    "null_locus: positive constant with dependent null divisors");
    return out;
}

// Positivity criterion: a curve class lies in the strict interior of the
// movable cone exactly when its constant is positive at every invariant
// point. Both sides are computed and compared.
struct TheoremACheck {
    bool interior = false;
    bool min_neg_infinity = false;
    Rat min_value;  // meaningful only when min_neg_infinity is false
    bool consistent = false;
};

inline TheoremACheck theorem_a_check(const Fan& fan, const ConeSystem& cs, const QVec& c) {
    detail::require_curve_class(fan, c);
    TheoremACheck out;
    out.interior = cone_contains(cs.movable_curves, c, true);
    bool first = true;
    for (std::size_t s = 0; s < fan.max_cones.size(); ++s) {
        const SeshadriResult r = seshadri_curve(fan, c, s);
        if (r.neg_infinity) {
            out.min_neg_infinity = true;
            break;
        }
        if (first || r.value < out.min_value) out.min_value = r.value;
        first = false;
    }
    const bool positive = !out.min_neg_infinity && out.min_value > 0;
    out.consistent = out.interior == positive;
    return out;
}

// The product inequality: constant of the curve times maximal multiplicity
// of the divisor is at most their intersection number. Vacuous when the
// curve side is minus infinity.
struct ProductBoundCheck {
    bool vacuous = false;
    Rat lhs;  // meaningful only when not vacuous
    Rat rhs;
    bool holds = false;
};

inline ProductBoundCheck bound_product_check(const Fan& fan, const ConeSystem& cs, const QVec& c,
                                             const QVec& a, std::size_t sigma_index) {
    ProductBoundCheck out;
    out.rhs = pairing(c, a);
    const SeshadriResult eps = seshadri_curve(fan, c, sigma_index);
    if (eps.neg_infinity) {
        out.vacuous = true;
        out.holds = true;
        return out;
    }
    const FujitaResult mu = fujita_divisor(fan, cs, a, sigma_index);
    out.lhs = eps.value * mu.value;
    out.holds = out.lhs <= out.rhs;
    return out;
}

// Volume inequalities, decided exactly by comparing n-th powers: the maximal
// multiplicity dominates the n-th root of the volume, and the constant of a
// movable curve is at most the intersection number over that root.
struct VolumeBoundChecks {
    Rat mu;
    Rat eps;
    Rat volume;
    Rat intersection;
    bool mu_vs_vol = false;
    bool eps_vs_vol = false;
};

inline VolumeBoundChecks bound_vol_checks(const Fan& fan, const ConeSystem& cs, const QVec& c,
                                          const QVec& a, std::size_t sigma_index) {
    detail::require_curve_class(fan, c);
    require(detail::nonnegative(c), "bound_vol_checks: curve class is not movable");
    VolumeBoundChecks out;
    out.volume = divisor_volume(fan, a);
    require(out.volume > 0, "bound_vol_checks: divisor class is not big");
    out.mu = fujita_divisor(fan, cs, a, sigma_index).value;
    out.eps = seshadri_curve(fan, c, sigma_index).value;
    out.intersection = pairing(c, a);
    const unsigned n = static_cast<unsigned>(fan.dim);
    out.mu_vs_vol = rat_pow(out.mu, n) >= out.volume;
    out.eps_vs_vol = rat_pow(out.eps, n) * out.volume <= rat_pow(out.intersection, n);
    return out;
}

// For an ample divisor, the constant of its (n-1)-st power curve dominates
// the (n-1)-st power of its own constant.
struct PowerBoundCheck {
    Rat eps_power;
    Rat eps_base;
    bool holds = false;
};

inline PowerBoundCheck power_bound_check(const Fan& fan, const ConeSystem& cs, const QVec& a,
                                         std::size_t sigma_index) {
    require(cone_contains(cs.nef_divisors, a, true), "power_bound_check: divisor class is not ample");
    PowerBoundCheck out;
    const QVec c = nef_power_curve(fan, cs, a);
    const SeshadriResult eps = seshadri_curve(fan, c, sigma_index);
    check_invariant(!eps.neg_infinity && eps.status == SeshadriStatus::Exact,
                    "power_bound_check: power curve of a nef divisor must be movable");
    out.eps_power = eps.value;
    out.eps_base = seshadri_divisor(fan, cs, a, sigma_index);
    out.holds = out.eps_power >= rat_pow(out.eps_base, static_cast<unsigned>(fan.dim - 1));
    return out;
}

// Hypothesis predicate of the lower-bound criterion for complete
// intersections of ample divisors: the top self-intersection must be at
// least n^(n-2). Informational only.
inline bool ci_hypothesis(std::size_t n, const Rat& top_self_intersection) {
    require(n >= 2, "ci_hypothesis: dimension must be at least 2");
    return top_self_intersection >= rat_pow(Rat(static_cast<long>(n)), static_cast<unsigned>(n - 2));
}

}  // namespace tpos
