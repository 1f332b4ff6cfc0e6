#pragma once

#include <string>
#include <vector>

#include "tpos/fan.hpp"

namespace tpos::catalog {

namespace detail {
inline QVec zvec(std::initializer_list<int> xs) {
    QVec v;
    for (auto x : xs) v.push_back(Rat(x));
    return v;
}
}  // namespace detail

// Projective n-space: rays e_1..e_n and minus their sum; maximal cones are
// all n-element subsets of the n+1 rays.
inline Fan projective_space(std::size_t n) {
    Fan f;
    f.dim = n;
    for (std::size_t i = 0; i < n; ++i) {
        QVec e(n, Rat(0));
        e[i] = 1;
        f.rays.push_back(std::move(e));
    }
    f.rays.push_back(QVec(n, Rat(-1)));
    std::vector<std::size_t> all(n + 1);
    for (std::size_t i = 0; i <= n; ++i) all[i] = i;
    f.max_cones = subsets_of_size(all, n);
    return f;
}

// Rays 0,1 span the first factor, rays 2,3 the second.
inline Fan p1_times_p1() {
    Fan f;
    f.dim = 2;
    f.rays = {detail::zvec({1, 0}), detail::zvec({-1, 0}), detail::zvec({0, 1}),
              detail::zvec({0, -1})};
    f.max_cones = {{0, 2}, {1, 2}, {1, 3}, {0, 3}};
    return f;
}

// Hirzebruch surface with parameter a >= 0 (a = 0 is a ruled quadric).
inline Fan hirzebruch(int a) {
    Fan f;
    f.dim = 2;
    f.rays = {detail::zvec({1, 0}), detail::zvec({0, 1}), detail::zvec({-1, a}),
              detail::zvec({0, -1})};
    f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return f;
}

// Plane blown up in one invariant point: the subdivision of the cone spanned
// by e_1, e_2; ray 3 is the exceptional ray e_1 + e_2.
inline Fan blowup_p2() {
    Fan f;
    f.dim = 2;
    f.rays = {detail::zvec({1, 0}), detail::zvec({0, 1}), detail::zvec({-1, -1}),
              detail::zvec({1, 1})};
    f.max_cones = {{0, 3}, {1, 3}, {1, 2}, {0, 2}};
    return f;
}

// Plane blown up in two invariant points (rays 3 and 4 exceptional).
inline Fan blowup_p2_two_points() {
    Fan f;
    f.dim = 2;
    f.rays = {detail::zvec({1, 0}), detail::zvec({0, 1}), detail::zvec({-1, -1}),
              detail::zvec({1, 1}), detail::zvec({-1, 0})};
    f.max_cones = {{0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 2}};
    return f;
}

// Three-space blown up in one invariant point (ray 4 exceptional).
inline Fan blowup_p3() {
    Fan f;
    f.dim = 3;
    f.rays = {detail::zvec({1, 0, 0}), detail::zvec({0, 1, 0}), detail::zvec({0, 0, 1}),
              detail::zvec({-1, -1, -1}), detail::zvec({1, 1, 1})};
    f.max_cones = {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {1, 2, 4}, {0, 2, 4}, {0, 1, 4}};
    return f;
}

struct NamedFan {
    std::string name;
    Fan fan;
};

// The standard exercise battery: smooth projective, dimensions 2 and 3.
inline std::vector<NamedFan> battery() {
    std::vector<NamedFan> fans;
    fans.push_back({"P2", projective_space(2)});
    fans.push_back({"P3", projective_space(3)});
    fans.push_back({"P4", projective_space(4)});
    fans.push_back({"P1xP1", p1_times_p1()});
    for (int a = 0; a <= 3; ++a) fans.push_back({"F" + std::to_string(a), hirzebruch(a)});
    fans.push_back({"BlP2", blowup_p2()});
    fans.push_back({"Bl2P2", blowup_p2_two_points()});
    fans.push_back({"BlP3", blowup_p3()});
    return fans;
}

}  // namespace tpos::catalog
