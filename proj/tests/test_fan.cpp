#include "catch_amalgamated.hpp"
#include "tpos/catalog.hpp"
#include "tpos/fan.hpp"

using namespace tpos;

namespace {
QVec qv(std::initializer_list<int> xs) {
    QVec v;
    for (auto x : xs) v.push_back(Rat(x));
    return v;
}
}  // namespace

TEST_CASE("the whole battery is smooth, complete, projective") {
    for (const auto& [name, fan] : catalog::battery()) {
        INFO(name);
        const auto v = fan_validate(fan);
        CHECK(v.smooth);
        CHECK(v.complete);
        CHECK(v.projective);
    }
}

TEST_CASE("removing a cone breaks completeness but not smoothness") {
    Fan f = catalog::projective_space(2);
    f.max_cones.erase(f.max_cones.begin() + 1);
    const auto v = fan_validate(f);
    CHECK(v.smooth);
    CHECK_FALSE(v.complete);
    CHECK_FALSE(v.projective);
    CHECK_THROWS_AS(walls(f), input_error);
}

TEST_CASE("simplicial but singular fan: smooth false, completeness still detected") {
    Fan f;
    f.dim = 2;
    f.rays = {qv({1, 0}), qv({0, 1}), qv({-1, -2})};
    f.max_cones = {{0, 1}, {1, 2}, {0, 2}};
    const auto v = fan_validate(f);
    CHECK_FALSE(v.smooth);
    CHECK(v.complete);
}

TEST_CASE("malformed input is rejected with diagnostics") {
    Fan base = catalog::projective_space(2);

    Fan nonprim = base;
    nonprim.rays[0] = qv({2, 0});
    CHECK_THROWS_AS(fan_validate(nonprim), input_error);

    Fan dup = base;
    dup.rays[1] = dup.rays[0];
    CHECK_THROWS_AS(fan_validate(dup), input_error);

    Fan badidx = base;
    badidx.max_cones[0] = {0, 7};
    CHECK_THROWS_AS(fan_validate(badidx), input_error);

    Fan raggeddim = base;
    raggeddim.rays[2] = qv({1, 2, 3});
    CHECK_THROWS_AS(fan_validate(raggeddim), input_error);

    Fan unused = base;
    unused.rays.push_back(qv({1, 2}));
    CHECK_THROWS_AS(fan_validate(unused), input_error);

    Fan fractional = base;
    fractional.rays[0] = {Rat(1, 2), Rat(0)};
    CHECK_THROWS_AS(fan_validate(fractional), input_error);

    // Overlapping simplicial cones that do not meet in a face are not a fan.
    Fan overlap;
    overlap.dim = 2;
    overlap.rays = {qv({1, 0}), qv({0, 1}), qv({1, 1}), qv({1, -1})};
    overlap.max_cones = {{0, 1}, {2, 3}};
    CHECK_THROWS_AS(fan_validate(overlap), input_error);
}

TEST_CASE("walls of the plane") {
    const auto ws = walls(catalog::projective_space(2));
    REQUIRE(ws.size() == 3);
    for (const auto& w : ws) {
        CHECK(w.tau.size() == 1);
        CHECK(w.sigma != w.sigma_prime);
        CHECK(w.u != w.u_prime);
    }
}

TEST_CASE("wall counts across the battery") {
    // In a complete simplicial fan, #walls = n * #cones / 2.
    for (const auto& [name, fan] : catalog::battery()) {
        INFO(name);
        CHECK(walls(fan).size() * 2 == fan.dim * fan.max_cones.size());
    }
}

TEST_CASE("star subdivision of the plane gives the one-point blow-up") {
    const Fan f = catalog::projective_space(2);
    const Fan blown = star_subdivision(f, 0);  // cone {0,1} = cone(e1, e2)
    CHECK(fan_equal(blown, catalog::blowup_p2()));
    CHECK(fan_validate(blown).projective);
}

TEST_CASE("star subdivision of three-space gives the one-point blow-up") {
    const Fan f = catalog::projective_space(3);
    REQUIRE(f.max_cones[0] == std::vector<std::size_t>{0, 1, 2});
    const Fan blown = star_subdivision(f, 0);
    CHECK(fan_equal(blown, catalog::blowup_p3()));
}

TEST_CASE("star subdivision round-trips") {
    for (const auto& [name, fan] : catalog::battery()) {
        INFO(name);
        for (std::size_t s = 0; s < fan.max_cones.size(); ++s) {
            const Fan blown = star_subdivision(fan, s);
            CHECK(fan_validate(blown).smooth);
            // Undo: drop the last ray, merge the cones that contain it.
            const std::size_t new_idx = blown.rays.size() - 1;
            Fan merged;
            merged.dim = blown.dim;
            merged.rays = blown.rays;
            merged.rays.pop_back();
            std::vector<std::size_t> sigma;
            for (const auto& cone : blown.max_cones) {
                if (!std::binary_search(cone.begin(), cone.end(), new_idx)) {
                    merged.max_cones.push_back(cone);
                    continue;
                }
                for (auto idx : cone)
                    if (idx != new_idx && !std::count(sigma.begin(), sigma.end(), idx))
                        sigma.push_back(idx);
            }
            std::sort(sigma.begin(), sigma.end());
            merged.max_cones.push_back(sigma);
            CHECK(fan_equal(merged, fan));
        }
    }
}

TEST_CASE("star subdivision rejects bad input") {
    CHECK_THROWS_AS(star_subdivision(catalog::projective_space(2), 9), input_error);
    Fan singular;
    singular.dim = 2;
    singular.rays = {qv({1, 0}), qv({0, 1}), qv({-1, -2})};
    singular.max_cones = {{0, 1}, {1, 2}, {0, 2}};
    CHECK_THROWS_AS(star_subdivision(singular, 0), input_error);
}

TEST_CASE("subsets_of_size") {
    const std::vector<std::size_t> s = {2, 5, 7};
    const auto subs = subsets_of_size(s, 2);
    REQUIRE(subs.size() == 3);
    CHECK(subs[0] == std::vector<std::size_t>{2, 5});
    CHECK(subs[1] == std::vector<std::size_t>{2, 7});
    CHECK(subs[2] == std::vector<std::size_t>{5, 7});
    CHECK(subsets_of_size(s, 0).size() == 1);
    CHECK(subsets_of_size(s, 4).empty());
}

TEST_CASE("wall change of basis has -1 at the departing ray") {
    for (const auto& [name, fan] : catalog::battery()) {
        INFO(name);
        for (const auto& w : walls(fan)) {
            const QVec coeff = wall_change_of_basis(fan, w);
            const auto& sigma = fan.max_cones[w.sigma];
            for (std::size_t j = 0; j < sigma.size(); ++j) {
                CHECK(is_integer(coeff[j]));
                if (sigma[j] == w.u) CHECK(coeff[j] == -1);
            }
        }
    }
}
