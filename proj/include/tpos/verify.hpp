#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tpos/catalog.hpp"
#include "tpos/classes.hpp"
#include "tpos/cone.hpp"
#include "tpos/cone_vertex.hpp"
#include "tpos/error.hpp"
#include "tpos/fan.hpp"
#include "tpos/linalg.hpp"
#include "tpos/polytope.hpp"
#include "tpos/rank_one.hpp"
#include "tpos/rational.hpp"
#include "tpos/seshadri.hpp"

namespace tpos {

// One battery criterion: every contained check is exact; the first failing
// check is kept in detail. Shared by the acceptance binary and the CLI.
struct VerifyRow {
    std::string name;
    bool pass = true;
    std::size_t checks = 0;
    std::string detail;
};

namespace detail {

struct Tally {
    VerifyRow row;
    explicit Tally(std::string name) { row.name = std::move(name); }
    void check(bool ok, const std::string& label) {
        ++row.checks;
        if (!ok && row.pass) {
            row.pass = false;
            row.detail = label;
        }
    }
    VerifyRow done(const std::string& summary) {
        if (row.pass) row.detail = summary;
        return row;
    }
};

// Random nonnegative integer combination of the rows of gens.
inline QVec random_combo(const QMat& gens, std::size_t width, std::mt19937_64& rng,
                         int max_coeff) {
    std::uniform_int_distribution<int> coeff(0, max_coeff);
    QVec out(width, Rat(0));
    for (const auto& g : gens) out = add(out, scaled(g, Rat(coeff(rng))));
    return out;
}

inline bool cone_subset(const RationalCone& inner, const RationalCone& outer) {
    for (const auto& r : inner.rays)
        if (!cone_contains(outer, r)) return false;
    for (const auto& l : inner.lines)
        if (!cone_contains(outer, l) || !cone_contains(outer, neg(l))) return false;
    return true;
}

}  // namespace detail

// P^n, n = 2..5: the line and the hyperplane have constant 1 at every
// invariant point, by both methods.
inline VerifyRow criterion_projective_spaces() {
    detail::Tally t("projective-spaces");
    for (std::size_t n = 2; n <= 5; ++n) {
        const Fan fan = catalog::projective_space(n);
        const auto cs = cone_system(fan);
        const QVec line(fan.rays.size(), Rat(1));
        QVec h(fan.rays.size(), Rat(0));
        h.back() = 1;
        for (std::size_t s = 0; s < fan.max_cones.size(); ++s) {
            const std::string at = "P^" + std::to_string(n) + " cone " + std::to_string(s);
            const auto rf = seshadri_curve(fan, line, s);
            t.check(!rf.neg_infinity && rf.value == 1 &&
                        rf.status == SeshadriStatus::Exact,
                    at + ": ray formula for the line is not 1");
            const auto bu = seshadri_curve_blowup(fan, line, s);
            t.check(!bu.neg_infinity && bu.value == 1,
                    at + ": blow-up method for the line is not 1");
            t.check(seshadri_divisor(fan, cs, h, s) == 1,
                    at + ": eps of the hyperplane is not 1");
        }
    }
    return t.done("n = 2..5, all invariant points, both methods");
}

// Bl_pP^2: the exceptional curve reads -1 (upper bound only) at the two
// points on E and minus infinity, witnessed by E's ray, elsewhere.
inline VerifyRow criterion_exceptional_curve() {
    detail::Tally t("exceptional-curve");
    const Fan fan = catalog::blowup_p2();
    QVec e_curve{Rat(1), Rat(1), Rat(0), Rat(-1)};
    for (std::size_t s = 0; s < fan.max_cones.size(); ++s) {
        const auto& sigma = fan.max_cones[s];
        const bool on_e = std::find(sigma.begin(), sigma.end(), std::size_t{3}) != sigma.end();
        const auto r = seshadri_curve(fan, e_curve, s);
        const std::string at = "cone " + std::to_string(s);
        if (on_e) {
            t.check(!r.neg_infinity && r.value == -1 &&
                        r.status == SeshadriStatus::UpperBoundOnly,
                    at + ": expected -1 upper bound on E");
        } else {
            t.check(r.neg_infinity && r.status == SeshadriStatus::NegInfinityWitness &&
                        r.witness_ray && *r.witness_ray == 3,
                    at + ": expected -inf witnessed by ray 3 off E");
        }
    }
    return t.done("-1 on E, -inf with witness off E");
}

// Bl_pP^2 at a point of E: eps(3H-E as a curve) = 1, mu(3H-E) = 5,
// vol(3H-E) = 8, and the second blow-up's effective cone is spanned by
// F, H-E-F, E-F.
inline VerifyRow criterion_blowup_plane() {
    detail::Tally t("blowup-plane-3h-e");
    const Fan fan = catalog::blowup_p2();
    const auto cs = cone_system(fan);
    const QVec curve{Rat(2), Rat(2), Rat(3), Rat(1)};
    const QVec divisor{Rat(0), Rat(0), Rat(3), Rat(-1)};
    const auto r = seshadri_curve(fan, curve, 0);
    t.check(!r.neg_infinity && r.value == 1 && r.status == SeshadriStatus::Exact,
            "eps(3H-E; on E) is not 1");
    t.check(fujita_divisor(fan, cs, divisor, 0).value == 5, "mu(3H-E; on E) is not 5");
    t.check(divisor_volume(fan, divisor) == 8, "vol(3H-E) is not 8");

    const auto ctx = blowup_at_cone(fan, 0);
    const auto cs_up = cone_system(ctx.blown);
    const QVec h_up = pullback_divisor(ctx, QVec{Rat(0), Rat(0), Rat(1), Rat(0)});
    const QVec e_up = pullback_divisor(ctx, QVec{Rat(0), Rat(0), Rat(0), Rat(1)});
    const QVec f = ctx.exceptional_divisor;
    const QMat gens{f, sub(sub(h_up, e_up), f), sub(e_up, f)};
    const auto expected =
        cone_from_generators(ctx.blown.rays.size(), gens, relation_rows(ctx.blown));
    t.check(same_cone(cs_up.eff_divisors, expected),
            "second blow-up effective cone is not <F, H-E-F, E-F>");
    return t.done("eps 1, mu 5, vol 8, eff cone <F, H-E-F, E-F>");
}

// The ray formula and the blow-up max-shift agree exactly on random movable
// integral classes, at every invariant point of every battery fan.
inline VerifyRow criterion_methods_agree() {
    detail::Tally t("methods-agree");
    std::mt19937_64 rng(20260822);
    std::size_t classes = 0;
    for (const auto& named : catalog::battery()) {
        const Fan& fan = named.fan;
        const auto cs = cone_system(fan);
        std::vector<BlowupInvariantContext> ctxs;
        for (std::size_t s = 0; s < fan.max_cones.size(); ++s)
            ctxs.push_back(blowup_invariant_context(fan, s));
        for (int trial = 0; trial < 21; ++trial) {
            const QVec c =
                detail::random_combo(cs.movable_curves.rays, fan.rays.size(), rng, 4);
            ++classes;
            for (std::size_t s = 0; s < fan.max_cones.size(); ++s) {
                const auto rf = seshadri_curve(fan, c, s);
                const auto bu = seshadri_curve_blowup(ctxs[s], c);
                t.check(!rf.neg_infinity && !bu.neg_infinity && rf.value == bu.value,
                        named.name + " trial " + std::to_string(trial) + " cone " +
                            std::to_string(s) + ": methods disagree");
            }
        }
    }
    t.check(classes >= 200, "sample too small");
    return t.done(std::to_string(classes) + " classes across the battery");
}

// Strict interior membership in the movable cone is equivalent to a positive
// minimum of eps over the invariant points.
inline VerifyRow criterion_interior_iff_positive() {
    detail::Tally t("interior-iff-positive");
    std::mt19937_64 rng(4242);
    std::size_t classes = 0;
    for (const auto& named : catalog::battery()) {
        const Fan& fan = named.fan;
        const auto cs = cone_system(fan);
        for (int trial = 0; trial < 12; ++trial) {
            QVec c = detail::random_combo(cs.movable_curves.rays, fan.rays.size(), rng, 4);
            if (trial % 3 == 2 && !cs.mori_curves.rays.empty()) {
                // Also probe boundary and exterior classes.
                const auto& m = cs.mori_curves.rays[static_cast<std::size_t>(trial) %
                                                    cs.mori_curves.rays.size()];
                c = sub(c, m);
            }
            ++classes;
            const auto res = theorem_a_check(fan, cs, c);
            t.check(res.consistent, named.name + " trial " + std::to_string(trial) +
                                        ": interior test disagrees with min eps");
        }
    }
    return t.done(std::to_string(classes) + " classes, zero discrepancies");
}

// Null rays of a movable class: independent divisor classes whenever eps is
// positive somewhere, and eps vanishes exactly on cones meeting a null ray.
inline VerifyRow criterion_null_locus() {
    detail::Tally t("null-locus");
    std::mt19937_64 rng(77);
    for (const auto& named : catalog::battery()) {
        const Fan& fan = named.fan;
        const auto cs = cone_system(fan);
        for (int trial = 0; trial < 10; ++trial) {
            const QVec c =
                detail::random_combo(cs.movable_curves.rays, fan.rays.size(), rng, 3);
            const auto nl = null_locus(fan, c);
            bool some_positive = false;
            for (std::size_t s = 0; s < fan.max_cones.size(); ++s) {
                const auto r = seshadri_curve(fan, c, s);
                some_positive = some_positive || (!r.neg_infinity && r.value > 0);
                bool meets = false;
                for (auto rho : fan.max_cones[s])
                    meets = meets ||
                            std::find(nl.rays.begin(), nl.rays.end(), rho) != nl.rays.end();
                t.check((r.value == 0 && !r.neg_infinity) == meets,
                        named.name + " trial " + std::to_string(trial) + " cone " +
                            std::to_string(s) + ": eps = 0 does not match null rays");
            }
            if (some_positive)
                t.check(nl.independent,
                        named.name + " trial " + std::to_string(trial) +
                            ": null classes not independent despite positive eps");
        }
    }
    return t.done("independence and zero sets match on the battery");
}

// The four inequality sweeps, with tightness on P^n.
inline VerifyRow criterion_bound_sweeps() {
    detail::Tally t("bound-sweeps");
    std::mt19937_64 rng(90210);
    std::size_t triples = 0;
    for (const auto& named : catalog::battery()) {
        const Fan& fan = named.fan;
        const auto cs = cone_system(fan);
        QVec ample(fan.rays.size(), Rat(0));
        for (const auto& r : cs.nef_divisors.rays) ample = add(ample, r);
        for (std::size_t s = 0; s < fan.max_cones.size(); ++s) {
            for (int trial = 0; trial < 3; ++trial) {
                const QVec c =
                    detail::random_combo(cs.movable_curves.rays, fan.rays.size(), rng, 3);
                const QVec a =
                    add(ample, detail::random_combo(cs.nef_divisors.rays,
                                                    fan.rays.size(), rng, 2));
                ++triples;
                const std::string at = named.name + " cone " + std::to_string(s) +
                                       " trial " + std::to_string(trial);
                const auto pb = bound_product_check(fan, cs, c, a, s);
                t.check(pb.vacuous || pb.holds, at + ": eps*mu > C.L");
                const auto vb = bound_vol_checks(fan, cs, c, a, s);
                t.check(vb.mu_vs_vol, at + ": mu^n < vol");
                t.check(vb.eps_vs_vol, at + ": eps^n * vol > (C.L)^n");
                const auto pw = power_bound_check(fan, cs, a, s);
                t.check(pw.holds, at + ": eps of the power class dips below eps^{n-1}");
            }
        }
    }
    t.check(triples >= 100, "sample too small");
    // Tightness: every bound is an equality for the line and hyperplane on P^n.
    for (std::size_t n = 2; n <= 4; ++n) {
        const Fan fan = catalog::projective_space(n);
        const auto cs = cone_system(fan);
        const QVec line(fan.rays.size(), Rat(1));
        QVec h(fan.rays.size(), Rat(0));
        h.back() = 1;
        const std::string at = "P^" + std::to_string(n) + " tightness";
        const auto pb = bound_product_check(fan, cs, line, h, 0);
        t.check(!pb.vacuous && pb.lhs == 1 && pb.rhs == 1, at + ": product");
        const auto vb = bound_vol_checks(fan, cs, line, h, 0);
        t.check(vb.mu == 1 && vb.eps == 1 && vb.volume == 1 && vb.intersection == 1,
                at + ": volume");
        const auto pw = power_bound_check(fan, cs, h, 0);
        t.check(pw.eps_power == 1 && pw.eps_base == 1, at + ": power");
    }
    return t.done(std::to_string(triples) + " triples, four sweeps, P^n tight");
}

// Duality round trips and the structural inclusions between the four cones.
inline VerifyRow criterion_cone_duality() {
    detail::Tally t("cone-duality");
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<int> dim_pick(1, 6);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto d = static_cast<std::size_t>(dim_pick(rng));
        std::uniform_int_distribution<int> count_pick(1, static_cast<int>(d) + 2);
        QMat gens;
        const int count = count_pick(rng);
        for (int g = 0; g < count; ++g) {
            QVec v(d, Rat(0));
            for (auto& x : v) x = entry(rng);
            gens.push_back(std::move(v));
        }
        const auto K = cone_from_generators(d, gens);
        t.check(same_cone(cone_dual(cone_dual(K)), K),
                "dual of dual differs, trial " + std::to_string(trial));
    }
    for (const auto& named : catalog::battery()) {
        const auto cs = cone_system(named.fan);
        t.check(same_cone(cs.movable_curves, movable_orthant_slice(named.fan)),
                named.name + ": movable cone differs from the orthant slice");
        t.check(detail::cone_subset(cs.nef_divisors, cs.eff_divisors),
                named.name + ": nef not inside effective");
        t.check(detail::cone_subset(cs.movable_curves, cs.mori_curves),
                named.name + ": movable not inside Mori");
    }
    return t.done("50 random cones, slice identity, inclusions on the battery");
}

// Volumes: d^n on P^n, and the polytope volume equals the Ehrhart leading
// coefficient fitted through the dilation counts m = 1..n+1.
inline VerifyRow criterion_volumes() {
    detail::Tally t("volumes-ehrhart");
    for (std::size_t n = 1; n <= 4; ++n) {
        const Fan fan = catalog::projective_space(n);
        for (long d = 0; d <= 3; ++d) {
            QVec a(fan.rays.size(), Rat(0));
            a.back() = d;
            t.check(divisor_volume(fan, a) == rat_pow(Rat(d), static_cast<unsigned>(n)),
                    "vol(d H) on P^" + std::to_string(n) + " is not d^n for d = " +
                        std::to_string(d));
        }
    }
    for (const auto& named : catalog::battery()) {
        const Fan& fan = named.fan;
        const auto cs = cone_system(fan);
        QVec a(fan.rays.size(), Rat(0));
        for (const auto& r : cs.nef_divisors.rays) a = add(a, r);
        const Polytope P = polytope_from_divisor(fan, a);
        const std::size_t n = fan.dim;
        std::vector<Rat> counts;
        for (unsigned long m = 1; m <= n + 1; ++m)
            counts.emplace_back(lattice_point_count(P, m));
        // Leading coefficient of the interpolating polynomial: the n-th finite
        // difference divided by n!.
        Rat lead(0);
        Rat binom(1);
        Rat fact(1);
        for (std::size_t j = 0; j <= n; ++j) {
            const Rat sign((n - j) % 2 == 0 ? 1 : -1);
            lead += sign * binom * counts[j];
            binom *= Rat(static_cast<long>(n - j)) / Rat(static_cast<long>(j + 1));
        }
        for (std::size_t i = 2; i <= n; ++i) fact *= Rat(static_cast<long>(i));
        t.check(lead / fact == polytope_volume(P),
                named.name + ": Ehrhart leading coefficient mismatch");
    }
    return t.done("P^n powers and Ehrhart fits on the battery");
}

// The Picard-rank-1 datasets.
inline VerifyRow criterion_rank_one() {
    detail::Tally t("rank-one");
    t.check(curve_eps(builtin_dataset("G(2,4)")) == frac(1, 2), "G(2,4): eps of the line");
    const std::vector<std::pair<std::size_t, std::size_t>> pars = {
        {1, 4}, {2, 4}, {2, 5}, {2, 6}, {3, 6}, {3, 7}, {4, 8}};
    for (auto [k, n] : pars) {
        const auto d = rank_one_grassmann(k, n);
        t.check(curve_eps(d) == Rat(1) / Rat(static_cast<long>(std::min(k, n - k))),
                d.name + ": eps of the line is not 1/min{k,n-k}");
    }
    const auto g2 = builtin_dataset("jac-genus2");
    t.check(*g2.eps_div == frac(4, 3) && curve_eps(g2) == frac(4, 3),
            "genus 2: eps(C) = eps(theta) = 4/3");
    t.check(*g2.mu_div == frac(3, 2), "genus 2: mu(theta) = 3/2");
    t.check(*g2.eps_div * *g2.eps_div < g2.deg && g2.deg < *g2.mu_div * *g2.mu_div,
            "genus 2: 4/3 < sqrt 2 < 3/2 fails by squaring");
    const auto nh = builtin_dataset("jac-genus3-nonhyp");
    const auto hy = builtin_dataset("jac-genus3-hyp");
    t.check(curve_eps(nh) == frac(3, 2) && curve_eps(hy) == frac(3, 2),
            "genus 3: eps(C) = 3/2 in both flavors");
    const auto cn = blowup_cones(nh);
    const auto ch = blowup_cones(hy);
    t.check(cn.eff_divisors[1] == BoundaryClass{Rat(1), Rat(-2)} &&
                ch.eff_divisors[1] == BoundaryClass{Rat(1), Rat(-2)},
            "genus 3: effective boundary is not pi*theta - 2E");
    t.check(cn.nef_divisors[1] == BoundaryClass{Rat(1), frac(-12, 7)} &&
                ch.nef_divisors[1] == BoundaryClass{Rat(1), frac(-3, 2)},
            "genus 3: nef boundary slopes 12/7 and 3/2");
    return t.done("Grassmann family, both Jacobians, abelian chain");
}

// Cone-over-a-surface constants at the vertex.
inline VerifyRow criterion_cone_vertex() {
    detail::Tally t("cone-vertex");
    const Fan blp2 = catalog::blowup_p2();
    const auto cs = cone_system(blp2);
    const QVec alpha{Rat(0), Rat(0), Rat(1), Rat(0)};
    const QVec h{Rat(0), Rat(0), Rat(2), Rat(-1)};
    const Rat dual = vertex_seshadri_dual(blp2, cs, alpha, h);
    const Rat curve = vertex_seshadri_curve(blp2, cs, alpha, h);
    t.check(dual == 0, "Bl_pP^2: dual value is not 0");
    t.check(curve == frac(2, 3), "Bl_pP^2: capped value is not 2/3");
    t.check(dual < curve, "Bl_pP^2: strict gap missing");
    const Fan p2 = catalog::projective_space(2);
    const auto cs2 = cone_system(p2);
    const QVec hh{Rat(0), Rat(0), Rat(1)};
    t.check(vertex_seshadri_dual(p2, cs2, hh, hh) == 1, "P^2: dual value is not 1");
    t.check(vertex_seshadri_curve(p2, cs2, hh, hh) == 1, "P^2: capped value is not 1");
    return t.done("0 vs 2/3 on the blow-up, 1 on the plane");
}

// Runs every criterion, converting an escaped exception into a failed row.
inline std::vector<VerifyRow> run_verification() {
    const std::vector<std::pair<std::string, std::function<VerifyRow()>>> list = {
        {"projective-spaces", criterion_projective_spaces},
        {"exceptional-curve", criterion_exceptional_curve},
        {"blowup-plane-3h-e", criterion_blowup_plane},
        {"methods-agree", criterion_methods_agree},
        {"interior-iff-positive", criterion_interior_iff_positive},
        {"null-locus", criterion_null_locus},
        {"bound-sweeps", criterion_bound_sweeps},
        {"cone-duality", criterion_cone_duality},
        {"volumes-ehrhart", criterion_volumes},
        {"rank-one", criterion_rank_one},
        {"cone-vertex", criterion_cone_vertex},
    };
    std::vector<VerifyRow> rows;
    for (const auto& [name, fn] : list) {
        try {
            rows.push_back(fn());
        } catch (const std::exception& e) {
            VerifyRow row;
            row.name = name;
            row.pass = false;
            row.detail = std::string("exception: ") + e.what();
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace tpos
