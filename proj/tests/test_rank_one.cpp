#include "catch_amalgamated.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "tpos/rank_one.hpp"
#include "tpos/rational.hpp"

namespace {

using tpos::frac;
using tpos::Rat;

tpos::BoundaryClass bc(const Rat& a, const Rat& b) { return {a, b}; }

}  // namespace

TEST_CASE("projective space datasets are all ones") {
    for (std::size_t n = 1; n <= 5; ++n) {
        auto d = tpos::rank_one_projective(n);
        INFO(d.name);
        CHECK(d.dim == n);
        CHECK(d.deg == 1);
        CHECK(*d.eps_div == 1);
        CHECK(*d.mu_div == 1);
        CHECK(*d.eps_curve == 1);
        CHECK(*d.mu_curve == 1);
        CHECK(tpos::curve_eps(d) == 1);
        CHECK(tpos::curve_mu(d) == 1);
    }
}

TEST_CASE("Grassmann degree formula") {
    // G(1,n) is P^{n-1}, degree 1.
    for (std::size_t n = 2; n <= 6; ++n) CHECK(tpos::grassmann_degree(1, n) == 1);
    // The classical degrees: G(2,n+2) gives the Catalan numbers.
    CHECK(tpos::grassmann_degree(2, 4) == 2);
    CHECK(tpos::grassmann_degree(2, 5) == 5);
    CHECK(tpos::grassmann_degree(2, 6) == 14);
    CHECK(tpos::grassmann_degree(2, 7) == 42);
    CHECK(tpos::grassmann_degree(3, 6) == 42);
    // G(k,n) and G(n-k,n) are isomorphic, so equal degrees.
    CHECK(tpos::grassmann_degree(4, 6) == tpos::grassmann_degree(2, 6));
    CHECK(tpos::grassmann_degree(3, 5) == tpos::grassmann_degree(2, 5));
    CHECK_THROWS_AS(tpos::grassmann_degree(0, 3), tpos::input_error);
    CHECK_THROWS_AS(tpos::grassmann_degree(3, 3), tpos::input_error);
}

TEST_CASE("G(2,4): the line has Seshadri constant 1/2") {
    auto d = tpos::rank_one_grassmann(2, 4);
    CHECK(d.dim == 4);
    CHECK(d.deg == 2);
    CHECK(*d.eps_div == 1);
    CHECK(*d.mu_div == 2);
    CHECK(*d.eps_curve == 1);
    CHECK(*d.mu_curve == 2);
    CHECK(d.curve_scale == frac(1, 2));
    CHECK(tpos::curve_eps(d) == frac(1, 2));
    CHECK(tpos::curve_mu(d) == 1);
}

TEST_CASE("Grassmann family: eps of a line is 1/min{k,n-k}") {
    const std::vector<std::pair<std::size_t, std::size_t>> pars = {
        {1, 3}, {1, 5}, {2, 4}, {2, 5}, {2, 6}, {3, 6}, {3, 7}, {4, 8}};
    for (auto [k, n] : pars) {
        auto d = tpos::rank_one_grassmann(k, n);
        INFO(d.name);
        const auto m = static_cast<long>(std::min(k, n - k));
        CHECK(tpos::curve_eps(d) == frac(1, m));
        CHECK(*d.eps_curve * *d.mu_div == d.deg);
        CHECK(*d.mu_curve * *d.eps_div == d.deg);
        // eps of a line never exceeds 1, with equality exactly for projective space.
        CHECK(tpos::curve_eps(d) <= 1);
        CHECK((tpos::curve_eps(d) == 1) == (m == 1));
    }
}

TEST_CASE("genus-2 Jacobian: 4/3 and 3/2 flank sqrt(2)") {
    auto d = tpos::builtin_dataset("jac-genus2");
    CHECK(d.dim == 2);
    CHECK(d.deg == 2);
    CHECK(*d.eps_div == frac(4, 3));
    CHECK(*d.eps_curve == frac(4, 3));
    CHECK(*d.mu_div == frac(3, 2));
    CHECK(*d.mu_curve == frac(3, 2));
    CHECK(tpos::curve_eps(d) == frac(4, 3));
    // Strict chain eps < sqrt(deg) < mu, compared by squaring.
    CHECK(*d.eps_div * *d.eps_div < d.deg);
    CHECK(d.deg < *d.mu_div * *d.mu_div);

    auto cones = tpos::blowup_cones(d);
    CHECK(cones.nef_divisors[0] == bc(1, 0));
    CHECK(cones.nef_divisors[1] == bc(1, frac(-4, 3)));
    CHECK(cones.eff_divisors[0] == bc(0, 1));
    CHECK(cones.eff_divisors[1] == bc(1, frac(-3, 2)));
}

TEST_CASE("genus-3 Jacobians: both flavors") {
    auto nh = tpos::builtin_dataset("jac-genus3-nonhyp");
    CHECK(nh.dim == 3);
    CHECK(nh.deg == 6);
    CHECK(*nh.eps_div == frac(12, 7));
    CHECK(*nh.mu_div == 2);
    CHECK(*nh.eps_curve == 3);
    CHECK(*nh.mu_curve == frac(7, 2));
    // The curve itself is theta^2/2.
    CHECK(tpos::curve_eps(nh) == frac(3, 2));
    CHECK(tpos::curve_mu(nh) == frac(7, 4));

    auto hy = tpos::builtin_dataset("jac-genus3-hyp");
    CHECK(*hy.eps_div == frac(3, 2));
    CHECK(*hy.mu_div == 2);
    CHECK(*hy.eps_curve == 3);
    CHECK(*hy.mu_curve == 4);
    CHECK(tpos::curve_eps(hy) == frac(3, 2));

    // Boundary classes: nef slope is eps_div, eff slope is mu_div = 2 for both.
    auto cn = tpos::blowup_cones(nh);
    CHECK(cn.nef_divisors[1] == bc(1, frac(-12, 7)));
    CHECK(cn.eff_divisors[1] == bc(1, -2));
    auto ch = tpos::blowup_cones(hy);
    CHECK(ch.nef_divisors[1] == bc(1, frac(-3, 2)));
    CHECK(ch.eff_divisors[1] == bc(1, -2));
    // Curve-side cones agree only in the hyperelliptic/non-hyperelliptic split
    // of mu_curve; the movable boundary is shared.
    CHECK(cn.movable_curves[1] == bc(1, -3));
    CHECK(ch.movable_curves[1] == bc(1, -3));
    CHECK(cn.mori_curves[1] == bc(1, frac(-7, 2)));
    CHECK(ch.mori_curves[1] == bc(1, -4));
}

TEST_CASE("abelian surface: declared round-cone chain") {
    auto d = tpos::builtin_dataset("abelian-surface");
    CHECK(d.root_chain);
    CHECK(*d.eps_div == frac(4, 3));
    CHECK(*d.mu_div == frac(3, 2));
    CHECK(*d.eps_curve == frac(4, 3));
    CHECK(*d.mu_curve == frac(3, 2));
    CHECK(*d.eps_div * *d.eps_div < d.deg);
    CHECK(d.deg < *d.mu_div * *d.mu_div);
}

TEST_CASE("solve: filling, idempotence, involution") {
    tpos::RankOneData d;
    d.dim = 3;
    d.deg = 6;
    d.eps_div = frac(12, 7);
    d.mu_div = 2;
    auto s = tpos::solve(d);
    CHECK(*s.mu_curve == frac(7, 2));
    CHECK(*s.eps_curve == 3);
    CHECK(tpos::solve(s) == s);

    // Fill the divisor side from the curve side.
    tpos::RankOneData back;
    back.dim = 3;
    back.deg = 6;
    back.mu_curve = frac(7, 2);
    back.eps_curve = 3;
    auto t = tpos::solve(back);
    CHECK(*t.eps_div == frac(12, 7));
    CHECK(*t.mu_div == 2);

    // Involution: a -> deg/a -> a for assorted rationals and degrees.
    const std::vector<Rat> degs = {1, 2, 6, frac(7, 3)};
    const std::vector<Rat> vals = {1, frac(4, 3), frac(12, 7), 5, frac(2, 9)};
    for (const auto& deg : degs)
        for (const auto& v : vals) {
            tpos::RankOneData a;
            a.dim = 2;
            a.deg = deg;
            a.eps_div = v;
            a.mu_div = 1;  // keeps the other pair satisfiable
            auto sa = tpos::solve(a);
            tpos::RankOneData b;
            b.dim = 2;
            b.deg = deg;
            b.mu_curve = *sa.mu_curve;
            b.eps_curve = *sa.eps_curve;
            auto sb = tpos::solve(b);
            CHECK(*sb.eps_div == v);
            CHECK(*sb.mu_div == 1);
        }
}

TEST_CASE("solve: error cases") {
    using tpos::input_error;
    tpos::RankOneData d;
    d.dim = 2;
    d.deg = 0;
    d.eps_div = 1;
    d.mu_div = 1;
    CHECK_THROWS_AS(tpos::solve(d), input_error);
    d.deg = -2;
    CHECK_THROWS_AS(tpos::solve(d), input_error);

    // Missing an entire dual pair.
    tpos::RankOneData half;
    half.dim = 2;
    half.deg = 2;
    half.eps_div = 1;
    CHECK_THROWS_AS(tpos::solve(half), input_error);

    // Over-determined and inconsistent: the message carries both sides.
    tpos::RankOneData bad;
    bad.dim = 3;
    bad.deg = 6;
    bad.eps_div = 2;
    bad.mu_curve = 2;
    bad.mu_div = 2;
    CHECK_THROWS_WITH(tpos::solve(bad),
                      Catch::Matchers::ContainsSubstring("eps_div * mu_curve = 4") &&
                          Catch::Matchers::ContainsSubstring("deg = 6"));

    // Nonpositive invariants and scales are rejected.
    tpos::RankOneData neg;
    neg.dim = 2;
    neg.deg = 2;
    neg.eps_div = -1;
    neg.mu_div = 1;
    CHECK_THROWS_AS(tpos::solve(neg), input_error);
    neg.eps_div = 0;
    CHECK_THROWS_AS(tpos::solve(neg), input_error);
    neg.eps_div = 1;
    neg.curve_scale = 0;
    CHECK_THROWS_AS(tpos::solve(neg), input_error);
    neg.curve_scale = 1;
    neg.dim = 0;
    CHECK_THROWS_AS(tpos::solve(neg), input_error);

    // The declared root chain is enforced; without the flag the same data pass.
    tpos::RankOneData chain;
    chain.dim = 2;
    chain.deg = 2;
    chain.eps_div = frac(3, 2);  // (3/2)^2 = 9/4 > 2
    chain.mu_div = frac(3, 2);
    chain.root_chain = true;
    CHECK_THROWS_AS(tpos::solve(chain), input_error);
    chain.root_chain = false;
    CHECK_NOTHROW(tpos::solve(chain));
    chain.root_chain = true;
    chain.eps_div = frac(4, 3);
    chain.mu_div = frac(4, 3);  // (4/3)^2 = 16/9 < 2
    CHECK_THROWS_AS(tpos::solve(chain), input_error);
}

TEST_CASE("blowup_cones requires a completed record") {
    tpos::RankOneData d;
    d.dim = 2;
    d.deg = 2;
    d.eps_div = 1;
    CHECK_THROWS_AS(tpos::blowup_cones(d), tpos::input_error);
    d.mu_div = 2;
    auto s = tpos::solve(d);
    auto cones = tpos::blowup_cones(s);
    CHECK(cones.eff_divisors[0] == bc(0, 1));
    CHECK(cones.nef_divisors[0] == bc(1, 0));
    CHECK(cones.mori_curves[0] == bc(0, 1));
    CHECK(cones.movable_curves[0] == bc(1, 0));
    CHECK(cones.mori_curves[1] == bc(1, -2));
    CHECK(cones.movable_curves[1] == bc(1, -1));
}

TEST_CASE("builtin datasets are completed and consistent") {
    auto all = tpos::builtin_datasets();
    std::set<std::string> names;
    for (const auto& d : all) {
        INFO(d.name);
        CHECK(names.insert(d.name).second);
        REQUIRE(d.eps_div.has_value());
        REQUIRE(d.mu_div.has_value());
        REQUIRE(d.eps_curve.has_value());
        REQUIRE(d.mu_curve.has_value());
        CHECK(*d.mu_curve * *d.eps_div == d.deg);
        CHECK(*d.eps_curve * *d.mu_div == d.deg);
        CHECK(tpos::solve(d) == d);
        if (d.root_chain) {
            CHECK(tpos::rat_pow(*d.eps_div, static_cast<unsigned>(d.dim)) <= d.deg);
            CHECK(d.deg <= tpos::rat_pow(*d.mu_div, static_cast<unsigned>(d.dim)));
        }
    }
    CHECK(names.count("P^3") == 1);
    CHECK(names.count("G(2,4)") == 1);
    CHECK(names.count("jac-genus2") == 1);
    CHECK(names.count("jac-genus3-nonhyp") == 1);
    CHECK(names.count("jac-genus3-hyp") == 1);
    CHECK(names.count("abelian-surface") == 1);

    CHECK(tpos::curve_eps(tpos::builtin_dataset("G(2,4)")) == frac(1, 2));
    CHECK_THROWS_AS(tpos::builtin_dataset("no-such-thing"), tpos::input_error);
}
