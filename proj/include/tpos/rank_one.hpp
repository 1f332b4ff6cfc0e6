#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tpos/error.hpp"
#include "tpos/rational.hpp"

namespace tpos {

// Invariant record for a polarized variety (X, H) of Picard rank 1 whose
// invariants at a point do not depend on the point. deg = (H^n); the four
// optional fields are the Seshadri and maximal-multiplicity constants of the
// divisor H and of the curve power class H^{n-1}. The product relations
//     mu_curve * eps_div = deg    and    eps_curve * mu_div = deg
// tie the fields in dual pairs, so either member determines the other.
// curve_scale is the factor lam with [C] = lam * H^{n-1} for the dataset's
// preferred curve (1/deg for a line on a Grassmann variety, 1/(g-1)! for a
// curve in its Jacobian); by 1-homogeneity the invariants of C are lam times
// the raw H^{n-1} values.
struct RankOneData {
    std::string name;
    std::size_t dim = 0;
    Rat deg = 0;
    std::optional<Rat> eps_div;    // eps(H; x)
    std::optional<Rat> mu_div;     // mu(H; x)
    std::optional<Rat> eps_curve;  // eps(H^{n-1}; x)
    std::optional<Rat> mu_curve;   // mu(H^{n-1}; x)
    Rat curve_scale = 1;
    // When set, solve also checks eps_div^dim <= deg <= mu_div^dim, the
    // n-th power form of eps(H) <= deg^(1/n) <= mu(H).
    bool root_chain = false;
    std::string note;

    bool operator==(const RankOneData&) const = default;
};

// Fills the missing members of each dual pair from the product relations.
// Requires deg > 0, every provided value positive, and at least one member
// of each pair. Over-determined input must satisfy the relations exactly.
// Idempotent: a completed record solves to itself.
inline RankOneData solve(RankOneData data) {
    require(data.dim >= 1, "rank-one data: dimension must be at least 1");
    require(data.deg > 0,
            "rank-one data: deg must be positive, got " + rat_str(data.deg));
    require(data.curve_scale > 0, "rank-one data: curve_scale must be positive, got " +
                                      rat_str(data.curve_scale));
    const auto positive = [](const std::optional<Rat>& v, const char* field) {
        if (v)
            require(*v > 0, std::string("rank-one data: ") + field +
                                " must be positive, got " + rat_str(*v));
    };
    positive(data.eps_div, "eps_div");
    positive(data.mu_div, "mu_div");
    positive(data.eps_curve, "eps_curve");
    positive(data.mu_curve, "mu_curve");

    const auto settle = [&data](std::optional<Rat>& a, std::optional<Rat>& b,
                                const char* an, const char* bn) {
        if (a && b) {
            require(*a * *b == data.deg,
                    std::string("rank-one data: ") + an + " * " + bn + " = " +
                        rat_str(Rat(*a * *b)) + " but deg = " + rat_str(data.deg));
        } else if (a) {
            b = Rat(data.deg / *a);
        } else if (b) {
            a = Rat(data.deg / *b);
        } else {
            throw input_error(std::string("rank-one data: need ") + an + " or " + bn);
        }
    };
    settle(data.eps_div, data.mu_curve, "eps_div", "mu_curve");
    settle(data.mu_div, data.eps_curve, "mu_div", "eps_curve");

    if (data.root_chain) {
        const auto n = static_cast<unsigned>(data.dim);
        require(rat_pow(*data.eps_div, n) <= data.deg,
                "rank-one data: declared chain fails: eps_div^dim = " +
                    rat_str(rat_pow(*data.eps_div, n)) + " > deg = " + rat_str(data.deg));
        require(data.deg <= rat_pow(*data.mu_div, n),
                "rank-one data: declared chain fails: mu_div^dim = " +
                    rat_str(rat_pow(*data.mu_div, n)) + " < deg = " + rat_str(data.deg));
    }
    return data;
}

// Invariants of the preferred curve [C] = curve_scale * H^{n-1}.
inline Rat curve_eps(const RankOneData& data) {
    require(data.eps_curve.has_value(), "curve_eps: eps_curve missing; call solve first");
    return data.curve_scale * *data.eps_curve;
}

inline Rat curve_mu(const RankOneData& data) {
    require(data.mu_curve.has_value(), "curve_mu: mu_curve missing; call solve first");
    return data.curve_scale * *data.mu_curve;
}

// A boundary class of a cone on the blow-up of X at the point, as coefficients
// in an ordered basis: (pi^* H, E) for divisor classes, (pi^* H^{n-1}, ell)
// for curve classes.
using BoundaryClass = std::array<Rat, 2>;
using BoundaryPair = std::array<BoundaryClass, 2>;

// The four cones on the blow-up, each two-dimensional and spanned by the pair.
struct RankOneCones {
    BoundaryPair eff_divisors;    // <E, pi^*H - mu_div E>
    BoundaryPair nef_divisors;    // <pi^*H, pi^*H - eps_div E>
    BoundaryPair mori_curves;     // <ell, pi^*H^{n-1} - mu_curve ell>
    BoundaryPair movable_curves;  // <pi^*H^{n-1}, pi^*H^{n-1} - eps_curve ell>
};

inline RankOneCones blowup_cones(const RankOneData& data) {
    require(data.eps_div && data.mu_div && data.eps_curve && data.mu_curve,
            "blowup_cones: all four invariants required; call solve first");
    RankOneCones out;
    out.eff_divisors[0] = {Rat(0), Rat(1)};
    out.eff_divisors[1] = {Rat(1), Rat(-*data.mu_div)};
    out.nef_divisors[0] = {Rat(1), Rat(0)};
    out.nef_divisors[1] = {Rat(1), Rat(-*data.eps_div)};
    out.mori_curves[0] = {Rat(0), Rat(1)};
    out.mori_curves[1] = {Rat(1), Rat(-*data.mu_curve)};
    out.movable_curves[0] = {Rat(1), Rat(0)};
    out.movable_curves[1] = {Rat(1), Rat(-*data.eps_curve)};
    return out;
}

// Degree of G(k,n) in its Pluecker embedding:
// (k(n-k))! * prod_{1 <= i <= k < j <= n} (j-i)^{-1}, always a positive integer.
inline Rat grassmann_degree(std::size_t k, std::size_t n) {
    require(k >= 1 && k < n, "grassmann_degree: need 1 <= k < n");
    Rat d(1);
    for (std::size_t i = 2; i <= k * (n - k); ++i) d *= Rat(static_cast<long>(i));
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = k + 1; j <= n; ++j) d /= Rat(static_cast<long>(j - i));
    check_invariant(is_integer(d) && d > 0, "grassmann_degree: not a positive integer");
    return d;
}

// P^n with the hyperplane class: every invariant is 1 and [line] = H^{n-1}.
inline RankOneData rank_one_projective(std::size_t n) {
    require(n >= 1, "rank_one_projective: need n >= 1");
    RankOneData d;
    d.name = "P^" + std::to_string(n);
    d.dim = n;
    d.deg = 1;
    d.eps_div = 1;
    d.mu_div = 1;
    d.note = "projective space; lines through the point compute everything";
    return solve(d);
}

// G(k,n) with the Pluecker polarization L: eps(L) = 1 (lines through every
// point), mu(L) = min{k, n-k}, and the line class is ell = L^{dim-1}/deg, so
// the solved record gives eps(ell) = 1/min{k, n-k}.
inline RankOneData rank_one_grassmann(std::size_t k, std::size_t n) {
    require(k >= 1 && k < n, "rank_one_grassmann: need 1 <= k < n");
    RankOneData d;
    d.name = "G(" + std::to_string(k) + "," + std::to_string(n) + ")";
    d.dim = k * (n - k);
    d.deg = grassmann_degree(k, n);
    d.eps_div = 1;
    d.mu_div = Rat(static_cast<long>(std::min(k, n - k)));
    d.curve_scale = Rat(1 / d.deg);
    d.note = "Grassmann variety, Pluecker polarization; curve_scale maps H^{dim-1} to a line";
    return solve(d);
}

inline std::vector<RankOneData> builtin_datasets() {
    std::vector<RankOneData> out;
    for (std::size_t n = 1; n <= 5; ++n) out.push_back(rank_one_projective(n));
    out.push_back(rank_one_grassmann(2, 4));
    out.push_back(rank_one_grassmann(2, 5));
    out.push_back(rank_one_grassmann(2, 6));
    out.push_back(rank_one_grassmann(3, 6));
    {
        RankOneData d;
        d.name = "jac-genus2";
        d.dim = 2;
        d.deg = 2;
        d.eps_div = frac(4, 3);
        d.eps_curve = frac(4, 3);
        d.root_chain = true;
        d.note = "genus-2 Jacobian, Picard rank 1; [C] = theta, eps(C) = eps(theta) = 4/3";
        out.push_back(solve(d));
    }
    {
        RankOneData d;
        d.name = "jac-genus3-nonhyp";
        d.dim = 3;
        d.deg = 6;
        d.eps_div = frac(12, 7);
        d.eps_curve = 3;
        d.curve_scale = frac(1, 2);
        d.root_chain = true;
        d.note = "genus-3 non-hyperelliptic Jacobian, Picard rank 1; [C] = theta^2/2, eps(C) = 3/2";
        out.push_back(solve(d));
    }
    {
        RankOneData d;
        d.name = "jac-genus3-hyp";
        d.dim = 3;
        d.deg = 6;
        d.eps_div = frac(3, 2);
        d.eps_curve = 3;
        d.curve_scale = frac(1, 2);
        d.root_chain = true;
        d.note = "genus-3 hyperelliptic Jacobian, Picard rank 1; [C] = theta^2/2, eps(C) = 3/2";
        out.push_back(solve(d));
    }
    {
        RankOneData d;
        d.name = "abelian-surface";
        d.dim = 2;
        d.deg = 2;
        d.eps_div = frac(4, 3);
        d.mu_div = frac(3, 2);
        d.root_chain = true;
        d.note = "principally polarized abelian surface, Picard rank 1; the nef cone of a "
                 "very general abelian surface is round, so eps < sqrt(deg) < mu strictly";
        out.push_back(solve(d));
    }
    return out;
}

// Exact-name lookup among builtin_datasets.
inline RankOneData builtin_dataset(const std::string& name) {
    for (auto& d : builtin_datasets())
        if (d.name == name) return d;
    throw input_error("unknown rank-one dataset: \"" + name + "\"");
}

}  // namespace tpos
