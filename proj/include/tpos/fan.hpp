#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tpos/cone.hpp"
#include "tpos/lp.hpp"

namespace tpos {

// A rational fan given by primitive ray generators and the index sets of its
// maximal cones. Immutable by convention; operations return new fans.
struct Fan {
    std::size_t dim = 0;
    QMat rays;
    std::vector<std::vector<std::size_t>> max_cones;
};

struct FanValidation {
    bool smooth = false;
    bool complete = false;
    bool projective = false;
};

// A codimension-one cone tau shared by exactly two maximal cones:
// sigma = tau + ray u, sigma_prime = tau + ray u_prime.
struct Wall {
    std::vector<std::size_t> tau;
    std::size_t sigma = 0;
    std::size_t sigma_prime = 0;
    std::size_t u = 0;
    std::size_t u_prime = 0;
};

inline std::vector<std::vector<std::size_t>> subsets_of_size(const std::vector<std::size_t>& set,
                                                             std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > set.size()) return out;
    std::vector<std::size_t> pick(k);
    auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
        if (depth == k) {
            out.push_back(pick);
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= set.size(); ++i) {
            pick[depth] = set[i];
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

namespace detail {

// Matrix whose columns are the rays of the given cone.
inline QMat ray_column_matrix(const Fan& fan, const std::vector<std::size_t>& cone) {
    QMat m(fan.dim, QVec(cone.size()));
    for (std::size_t j = 0; j < cone.size(); ++j)
        for (std::size_t i = 0; i < fan.dim; ++i) m[i][j] = fan.rays[cone[j]][i];
    return m;
}

inline bool is_simplicial_cone(const Fan& fan, const std::vector<std::size_t>& cone) {
    if (cone.size() != fan.dim) return false;
    QMat rows;
    for (auto idx : cone) rows.push_back(fan.rays[idx]);
    return rank_of(std::move(rows)) == fan.dim;
}

}  // namespace detail

// Structural sanity of the raw data; throws input_error with a diagnostic on
// anything malformed (wrong dimensions, non-primitive or duplicate rays,
// bad indices, unused rays, duplicate or nested maximal cones). Geometric
// properties are reported by fan_validate instead of thrown.
inline void fan_structural_check(const Fan& fan) {
    require(fan.dim >= 1, "fan: dimension must be at least 1");
    require(!fan.rays.empty(), "fan: no rays");
    require(!fan.max_cones.empty(), "fan: no maximal cones");
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        const auto& u = fan.rays[i];
        require(u.size() == fan.dim, "fan: ray " + std::to_string(i) + " has wrong dimension");
        require(is_integral(u), "fan: ray " + std::to_string(i) + " is not integral");
        require(!is_zero(u), "fan: ray " + std::to_string(i) + " is zero");
        require(primitive(u) == u, "fan: ray " + std::to_string(i) + " is not primitive");
        for (std::size_t j = 0; j < i; ++j)
            require(fan.rays[j] != u, "fan: duplicate ray " + std::to_string(i));
    }
    std::vector<char> used(fan.rays.size(), 0);
    for (std::size_t s = 0; s < fan.max_cones.size(); ++s) {
        const auto& cone = fan.max_cones[s];
        require(!cone.empty(), "fan: empty maximal cone " + std::to_string(s));
        for (std::size_t t = 0; t + 1 < cone.size(); ++t)
            require(cone[t] < cone[t + 1], "fan: cone " + std::to_string(s) + " indices not sorted and distinct");
        for (auto idx : cone) {
            require(idx < fan.rays.size(), "fan: cone " + std::to_string(s) + " has a bad ray index");
            used[idx] = 1;
        }
    }
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        require(used[i], "fan: ray " + std::to_string(i) + " is not used by any maximal cone");
    for (std::size_t a = 0; a < fan.max_cones.size(); ++a)
        for (std::size_t b = 0; b < fan.max_cones.size(); ++b) {
            if (a == b) continue;
            const auto& ca = fan.max_cones[a];
            const auto& cb = fan.max_cones[b];
            require(!std::includes(cb.begin(), cb.end(), ca.begin(), ca.end()) || ca.size() == cb.size(),
                    "fan: maximal cone " + std::to_string(a) + " is contained in cone " + std::to_string(b));
            if (a < b) require(ca != cb, "fan: duplicate maximal cone " + std::to_string(b));
        }
}

// For simplicial fans: any two maximal cones must intersect exactly in the
// cone spanned by their common rays, otherwise the data is not a fan.
inline void fan_face_intersection_check(const Fan& fan) {
    std::vector<RationalCone> hulls;
    for (const auto& cone : fan.max_cones) {
        QMat gens;
        for (auto idx : cone) gens.push_back(fan.rays[idx]);
        hulls.push_back(cone_from_generators(fan.dim, gens));
    }
    for (std::size_t a = 0; a < fan.max_cones.size(); ++a)
        for (std::size_t b = a + 1; b < fan.max_cones.size(); ++b) {
            QMat ineqs = hulls[a].facets;
            for (const auto& f : hulls[b].facets) ineqs.push_back(f);
            QMat eqs = hulls[a].eqs;
            for (const auto& e : hulls[b].eqs) eqs.push_back(e);
            const auto meet = cone_from_constraints(fan.dim, ineqs, eqs);
            std::vector<std::size_t> common;
            std::set_intersection(fan.max_cones[a].begin(), fan.max_cones[a].end(),
                                  fan.max_cones[b].begin(), fan.max_cones[b].end(),
                                  std::back_inserter(common));
            QMat common_gens;
            for (auto idx : common) common_gens.push_back(fan.rays[idx]);
            require(same_cone(meet, cone_from_generators(fan.dim, common_gens)),
                    "fan: cones " + std::to_string(a) + " and " + std::to_string(b) +
                        " do not intersect in a common face");
        }
}

namespace detail {

// Census of (n-1)-element subsets of maximal cones; completeness of a
// simplicial fan means every such wall lies in exactly two maximal cones.
inline std::map<std::vector<std::size_t>, std::vector<std::size_t>> wall_census(const Fan& fan) {
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> census;
    for (std::size_t s = 0; s < fan.max_cones.size(); ++s)
        for (auto& tau : subsets_of_size(fan.max_cones[s], fan.dim - 1)) census[tau].push_back(s);
    return census;
}

}  // namespace detail

// The walls of a complete simplicial fan, sorted by their ray index sets.
// A wall with anything other than two incident maximal cones signals an
// incomplete or malformed fan and is an error.
inline std::vector<Wall> walls(const Fan& fan) {
    fan_structural_check(fan);
    for (const auto& cone : fan.max_cones)
        require(detail::is_simplicial_cone(fan, cone), "walls: fan is not simplicial");
    std::vector<Wall> out;
    for (const auto& [tau, cones] : detail::wall_census(fan)) {
        require(cones.size() == 2, "walls: a wall lies in " + std::to_string(cones.size()) +
                                       " maximal cones; fan is incomplete or malformed");
        Wall w;
        w.tau = tau;
        w.sigma = cones[0];
        w.sigma_prime = cones[1];
        auto other = [&](std::size_t cone_idx) {
            for (auto idx : fan.max_cones[cone_idx])
                if (!std::binary_search(tau.begin(), tau.end(), idx)) return idx;
            throw internal_error("walls: wall equals its maximal cone");
        };
        w.u = other(w.sigma);
        w.u_prime = other(w.sigma_prime);
        out.push_back(std::move(w));
    }
    return out;
}

// Coordinates of the ray u_prime in the ray basis of the wall's first cone;
// entry order follows that cone's index list. For smooth fans the entry at
// the cone's own off-wall ray is -1 and all entries are integers.
inline QVec wall_change_of_basis(const Fan& fan, const Wall& w) {
    const auto m = detail::ray_column_matrix(fan, fan.max_cones[w.sigma]);
    const auto x = solve_square(m, fan.rays[w.u_prime]);
    check_invariant(x.has_value(), "wall_change_of_basis: singular cone basis");
    return *x;
}

// Feasibility of a rationally convex support function that bends strictly at
// every wall: one value per ray, and one margin-1 inequality per wall
// relating the two linear extensions across it. Feasible iff projective.
inline bool fan_projectivity_lp(const Fan& fan, const std::vector<Wall>& wall_list) {
    QMat A;
    QVec b;
    for (const auto& w : wall_list) {
        const QVec coeff = wall_change_of_basis(fan, w);
        QVec row(fan.rays.size(), Rat(0));
        const auto& sigma = fan.max_cones[w.sigma];
        for (std::size_t j = 0; j < sigma.size(); ++j) row[sigma[j]] += coeff[j];
        row[w.u_prime] -= 1;
        A.push_back(std::move(row));
        b.push_back(Rat(1));
    }
    return linear_system_feasible(A, b);
}

// Geometric classification: smooth (simplicial and unimodular), complete
// (every wall in exactly two maximal cones, cones meeting in faces), and
// projective (complete plus a strictly convex support function). Fans that
// are not simplicial are outside the scope of the wall-based checks and
// report false across the board.
inline FanValidation fan_validate(const Fan& fan) {
    fan_structural_check(fan);
    FanValidation v;
    bool simplicial = true;
    for (const auto& cone : fan.max_cones)
        simplicial = simplicial && detail::is_simplicial_cone(fan, cone);
    if (!simplicial) return v;
    fan_face_intersection_check(fan);
    v.smooth = true;
    for (const auto& cone : fan.max_cones) {
        QMat rows;
        for (auto idx : cone) rows.push_back(fan.rays[idx]);
        const Rat dt = det(std::move(rows));
        if (dt != 1 && dt != -1) v.smooth = false;
    }
    v.complete = true;
    for (const auto& [tau, cones] : detail::wall_census(fan))
        if (cones.size() != 2) v.complete = false;
    if (v.complete) v.projective = fan_projectivity_lp(fan, walls(fan));
    return v;
}

// Star subdivision at a maximal cone of a smooth fan: appends the primitive
// sum of the cone's rays as a new ray and replaces the cone by the n cones
// obtained by substituting the new ray for each original one.
inline Fan star_subdivision(const Fan& fan, std::size_t cone_index) {
    require(cone_index < fan.max_cones.size(), "star_subdivision: no maximal cone with index " +
                                                   std::to_string(cone_index));
    const auto validation = fan_validate(fan);
    require(validation.smooth, "star_subdivision: fan is not smooth");
    const auto& sigma = fan.max_cones[cone_index];
    QVec u0(fan.dim, Rat(0));
    for (auto idx : sigma) u0 = add(u0, fan.rays[idx]);
    check_invariant(primitive(u0) == u0, "star_subdivision: barycentric ray of a smooth cone is primitive");
    for (const auto& r : fan.rays)
        check_invariant(r != u0, "star_subdivision: new ray collides with an existing ray");
    Fan out;
    out.dim = fan.dim;
    out.rays = fan.rays;
    out.rays.push_back(u0);
    const std::size_t new_idx = out.rays.size() - 1;
    for (std::size_t s = 0; s < fan.max_cones.size(); ++s) {
        if (s == cone_index) continue;
        out.max_cones.push_back(fan.max_cones[s]);
    }
    for (auto dropped : sigma) {
        std::vector<std::size_t> cone;
        for (auto idx : sigma)
            if (idx != dropped) cone.push_back(idx);
        cone.push_back(new_idx);
        std::sort(cone.begin(), cone.end());
        out.max_cones.push_back(std::move(cone));
    }
    return out;
}

// Equality as combinatorial data: same rays in the same order, same set of
// maximal cones regardless of listing order.
inline bool fan_equal(const Fan& a, const Fan& b) {
    if (a.dim != b.dim || a.rays != b.rays) return false;
    auto ca = a.max_cones;
    auto cb = b.max_cones;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    return ca == cb;
}

}  // namespace tpos
