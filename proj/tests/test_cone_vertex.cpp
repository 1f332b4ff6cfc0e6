#include "catch_amalgamated.hpp"

#include <random>
#include <vector>

#include "tpos/catalog.hpp"
#include "tpos/classes.hpp"
#include "tpos/cone_vertex.hpp"
#include "tpos/rational.hpp"

namespace {

using tpos::frac;
using tpos::QVec;
using tpos::Rat;

QVec qv(std::initializer_list<int> xs) {
    QVec out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

QVec scale(const Rat& s, const QVec& v) {
    QVec out = v;
    for (auto& x : out) x *= s;
    return out;
}

QVec add(const QVec& a, const QVec& b) {
    QVec out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

}  // namespace

TEST_CASE("cone vertex: the dual and capped readings differ on a blow-up") {
    const auto fan = tpos::catalog::blowup_p2();
    const auto cs = tpos::cone_system(fan);
    // alpha = pullback of a line, h = 2H - E.
    const QVec alpha = qv({0, 0, 1, 0});
    const QVec h = qv({0, 0, 2, -1});
    CHECK(tpos::vertex_seshadri_dual(fan, cs, alpha, h) == 0);
    CHECK(tpos::vertex_seshadri_curve(fan, cs, alpha, h) == frac(2, 3));
    // The gap is the point: the dual class has Seshadri constant 0 at the
    // vertex while its cap with the fundamental class does not.
    CHECK(tpos::vertex_seshadri_dual(fan, cs, alpha, h) <
          tpos::vertex_seshadri_curve(fan, cs, alpha, h));

    const tpos::ConeVertexInput in{fan, alpha, h};
    CHECK(tpos::vertex_seshadri_dual(in) == 0);
    CHECK(tpos::vertex_seshadri_curve(in) == frac(2, 3));
}

TEST_CASE("cone vertex: projective plane") {
    const auto fan = tpos::catalog::projective_space(2);
    const auto cs = tpos::cone_system(fan);
    const QVec h = qv({0, 0, 1});
    CHECK(tpos::vertex_seshadri_dual(fan, cs, h, h) == 1);
    CHECK(tpos::vertex_seshadri_curve(fan, cs, h, h) == 1);
    const QVec zero = qv({0, 0, 0});
    CHECK(tpos::vertex_seshadri_dual(fan, cs, zero, h) == 0);
    CHECK(tpos::vertex_seshadri_curve(fan, cs, zero, h) == 0);
    // d H against H scales linearly.
    CHECK(tpos::vertex_seshadri_dual(fan, cs, qv({0, 0, 5}), h) == 5);
    CHECK(tpos::vertex_seshadri_curve(fan, cs, qv({0, 0, 5}), h) == 5);
}

TEST_CASE("cone vertex: product of two lines") {
    const auto fan = tpos::catalog::p1_times_p1();
    const auto cs = tpos::cone_system(fan);
    const QVec alpha = qv({0, 1, 0, 1});
    const QVec h = qv({0, 1, 0, 2});
    // alpha - t h stays nef up to t = 1/2; alpha.h = 3, h^2 = 4.
    CHECK(tpos::vertex_seshadri_dual(fan, cs, alpha, h) == frac(1, 2));
    CHECK(tpos::vertex_seshadri_curve(fan, cs, alpha, h) == frac(3, 4));
}

TEST_CASE("cone vertex: input validation") {
    const auto fan = tpos::catalog::blowup_p2();
    const auto cs = tpos::cone_system(fan);
    const QVec h = qv({0, 0, 2, -1});
    // Not nef: a negative multiple of an ample class.
    CHECK_THROWS_AS(tpos::vertex_seshadri_dual(fan, cs, qv({0, 0, -1, 0}), h),
                    tpos::input_error);
    CHECK_THROWS_AS(tpos::vertex_seshadri_curve(fan, cs, qv({0, 0, -1, 0}), h),
                    tpos::input_error);
    // Nef but not ample: the pullback of a line kills the exceptional wall.
    CHECK_THROWS_AS(tpos::vertex_seshadri_dual(fan, cs, h, qv({0, 0, 1, 0})),
                    tpos::input_error);
    // Wrong length.
    CHECK_THROWS_AS(tpos::vertex_seshadri_dual(fan, cs, qv({0, 0, 1}), h),
                    tpos::input_error);
    // Not a surface.
    const auto p3 = tpos::catalog::projective_space(3);
    const auto cs3 = tpos::cone_system(p3);
    CHECK_THROWS_AS(
        tpos::vertex_seshadri_dual(p3, cs3, qv({0, 0, 0, 1}), qv({0, 0, 0, 1})),
        tpos::input_error);
}

TEST_CASE("cone vertex: battery properties") {
    std::mt19937_64 rng(31415);
    std::uniform_int_distribution<int> coeff(0, 3);
    for (const auto& named : tpos::catalog::battery()) {
        if (named.fan.dim != 2) continue;
        INFO(named.name);
        const auto& fan = named.fan;
        const auto cs = tpos::cone_system(fan);
        // A strictly interior point of the nef cone: the sum of its rays plus
        // a vector of the lineality space is ample.
        QVec h(fan.rays.size(), Rat(0));
        for (const auto& r : cs.nef_divisors.rays) h = add(h, r);
        REQUIRE(tpos::cone_contains(cs.nef_divisors, h, true));

        // The polarization itself always reads 1 both ways.
        CHECK(tpos::vertex_seshadri_dual(fan, cs, h, h) == 1);
        CHECK(tpos::vertex_seshadri_curve(fan, cs, h, h) == 1);

        for (int trial = 0; trial < 8; ++trial) {
            QVec alpha(fan.rays.size(), Rat(0));
            for (const auto& r : cs.nef_divisors.rays)
                alpha = add(alpha, scale(Rat(coeff(rng)), r));
            INFO("trial " << trial);
            const Rat dual = tpos::vertex_seshadri_dual(fan, cs, alpha, h);
            const Rat curve = tpos::vertex_seshadri_curve(fan, cs, alpha, h);
            // The dual reading never exceeds the capped one.
            CHECK(dual <= curve);
            CHECK(dual >= 0);
            // 1-homogeneous in alpha.
            CHECK(tpos::vertex_seshadri_dual(fan, cs, scale(3, alpha), h) == 3 * dual);
            CHECK(tpos::vertex_seshadri_curve(fan, cs, scale(3, alpha), h) == 3 * curve);
            // Doubling h halves both values.
            CHECK(tpos::vertex_seshadri_dual(fan, cs, alpha, scale(2, h)) ==
                  dual / 2);
            CHECK(tpos::vertex_seshadri_curve(fan, cs, alpha, scale(2, h)) ==
                  curve / 2);
        }
    }
}
