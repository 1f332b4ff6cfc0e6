#include "catch_amalgamated.hpp"
#include "tpos/catalog.hpp"
#include "tpos/classes.hpp"

using namespace tpos;

namespace {
QVec qv(std::initializer_list<int> xs) {
    QVec v;
    for (auto x : xs) v.push_back(Rat(x));
    return v;
}
}  // namespace

TEST_CASE("relation rows and the curve constraint") {
    const Fan p2 = catalog::projective_space(2);
    const QMat rel = relation_rows(p2);
    REQUIRE(rel == QMat{qv({1, 0, -1}), qv({0, 1, -1})});
    CHECK(is_zero(curve_constraint_residual(p2, qv({1, 1, 1}))));
    CHECK_FALSE(is_zero(curve_constraint_residual(p2, qv({1, 0, 0}))));
    CHECK_THROWS_AS(curve_constraint_residual(p2, qv({1, 1})), input_error);
}

TEST_CASE("wall curve classes of the blown-up plane") {
    const Fan f = catalog::blowup_p2();
    const auto ws = walls(f);
    REQUIRE(ws.size() == 4);
    // Walls are sorted by their ray sets {0},{1},{2},{3}; the last wall is
    // the exceptional ray so its curve is the exceptional line.
    CHECK(wall_curve_class(f, ws[0]) == qv({0, 0, 1, 1}));
    CHECK(wall_curve_class(f, ws[1]) == qv({0, 0, 1, 1}));
    CHECK(wall_curve_class(f, ws[2]) == qv({1, 1, 1, 0}));
    CHECK(wall_curve_class(f, ws[3]) == qv({1, 1, 0, -1}));
}

TEST_CASE("cone system of the projective plane") {
    const Fan p2 = catalog::projective_space(2);
    const ConeSystem cs = cone_system(p2);

    CHECK(cs.eff_divisors.rays == QMat{qv({0, 0, 1})});
    CHECK(cs.eff_divisors.facets == QMat{qv({1, 1, 1})});
    CHECK(cs.eff_divisors.lineality_dim() == 2);
    CHECK(cs.eff_divisors.is_full_dimensional());

    // With a one-dimensional class group every cone degenerates to the same
    // ray; nef = eff as sets, and both curve cones are the ray of the line.
    CHECK(same_cone(cs.nef_divisors, cs.eff_divisors));
    CHECK(cs.mori_curves.rays == QMat{qv({1, 1, 1})});
    CHECK(same_cone(cs.mori_curves, cs.movable_curves));
    CHECK(cs.movable_curves.facets == QMat{qv({0, 0, 1})});
    CHECK(cs.movable_curves.eqs == QMat{qv({1, 0, -1}), qv({0, 1, -1})});
    CHECK(cs.movable_curves.is_full_dimensional());
    CHECK(cone_contains(cs.movable_curves, qv({2, 2, 2}), true));
}

TEST_CASE("cone system of the blown-up plane") {
    const Fan f = catalog::blowup_p2();
    const ConeSystem cs = cone_system(f);

    // Generators of eff are the strict transform of the line through the
    // point and the exceptional divisor; the proper hyperplane class is a
    // positive combination and must not survive as an extreme ray.
    CHECK(cs.eff_divisors.rays == QMat{qv({0, 0, 0, 1}), qv({0, 0, 1, -1})});
    CHECK(cs.eff_divisors.facets == QMat{qv({0, 0, 1, 1}), qv({1, 1, 1, 0})});
    CHECK(cs.eff_divisors.eqs.empty());
    CHECK(cs.eff_divisors.lineality_dim() == 2);

    CHECK(cs.mori_curves.rays == QMat{qv({0, 0, 1, 1}), qv({1, 1, 0, -1})});
    CHECK(cs.mori_curves.eqs == QMat{qv({1, 0, -1, 1}), qv({0, 1, -1, 1})});
    CHECK(cs.mori_curves.lineality_dim() == 0);

    CHECK(cs.nef_divisors.rays == QMat{qv({0, 0, 1, -1}), qv({0, 0, 1, 0})});
    CHECK(cs.nef_divisors.facets == QMat{qv({0, 0, 1, 1}), qv({1, 1, 0, -1})});
    CHECK(cs.nef_divisors.lineality_dim() == 2);

    CHECK(cs.movable_curves.rays == QMat{qv({0, 0, 1, 1}), qv({1, 1, 1, 0})});
    CHECK(cs.movable_curves.facets == QMat{qv({0, 0, 0, 1}), qv({0, 0, 1, -1})});
    CHECK(cs.movable_curves.eqs == QMat{qv({1, 0, -1, 1}), qv({0, 1, -1, 1})});

    // The exceptional line generates an edge of Mori but is not movable.
    CHECK(cone_contains(cs.mori_curves, qv({1, 1, 0, -1})));
    CHECK_FALSE(cone_contains(cs.movable_curves, qv({1, 1, 0, -1})));
}

TEST_CASE("cone system properties across the battery") {
    for (const auto& [name, fan] : catalog::battery()) {
        INFO(name);
        const ConeSystem cs = cone_system(fan);
        const QMat rel = relation_rows(fan);

        // The movable cone computed by duality equals the orthant slice.
        CHECK(same_cone(cs.movable_curves, movable_orthant_slice(fan)));

        // Dualizing twice returns the original cone.
        CHECK(same_cone(cone_dual(cs.movable_curves), cs.eff_divisors));
        CHECK(same_cone(cone_dual(cs.nef_divisors), cs.mori_curves));

        // Divisor cones absorb the relation span; curve cones are pointed
        // (ample classes exist) and satisfy the relations.
        CHECK(cs.eff_divisors.lineality_dim() == fan.dim);
        CHECK(cs.nef_divisors.lineality_dim() == fan.dim);
        CHECK(cs.mori_curves.lineality_dim() == 0);
        CHECK(cs.movable_curves.lineality_dim() == 0);

        QMat wall_classes;
        for (const auto& w : walls(fan)) {
            QVec c = wall_curve_class(fan, w);
            CHECK(is_integral(c));
            CHECK(is_zero(curve_constraint_residual(fan, c)));
            CHECK(cone_contains(cs.mori_curves, c));
            wall_classes.push_back(std::move(c));
        }
        sort_unique_rows(wall_classes);
        for (const auto& ray : cs.mori_curves.rays)
            CHECK(std::binary_search(wall_classes.begin(), wall_classes.end(), ray, lex_less));

        // Nef within effective, movable within Mori, and the pairings agree.
        for (const auto& a : cs.nef_divisors.rays) CHECK(cone_contains(cs.eff_divisors, a));
        for (const auto& c : cs.movable_curves.rays) CHECK(cone_contains(cs.mori_curves, c));
        for (const auto& c : cs.mori_curves.rays)
            for (const auto& a : cs.nef_divisors.rays) CHECK(pairing(c, a) >= 0);
        for (const auto& c : cs.movable_curves.rays)
            for (const auto& a : cs.eff_divisors.rays) CHECK(pairing(c, a) >= 0);
    }
}

TEST_CASE("blow-up context and the transfer maps") {
    const Fan p2 = catalog::projective_space(2);
    const BlowupContext ctx = blowup_at_cone(p2, 0);
    REQUIRE(ctx.sigma == std::vector<std::size_t>{0, 1});
    REQUIRE(ctx.new_ray == 3);
    CHECK(fan_equal(ctx.blown, catalog::blowup_p2()));
    CHECK(ctx.exceptional_divisor == qv({0, 0, 0, 1}));
    CHECK(ctx.exceptional_curve == qv({1, 1, 0, -1}));

    // Two representatives of the hyperplane class pull back to equivalent
    // divisors: the difference lies in the relation span upstairs.
    const QVec ha = pullback_divisor(ctx, qv({1, 0, 0}));
    const QVec hb = pullback_divisor(ctx, qv({0, 0, 1}));
    CHECK(ha == qv({1, 0, 0, 1}));
    CHECK(hb == qv({0, 0, 1, 0}));
    const QMat rel_up = rowspace_basis(relation_rows(ctx.blown));
    CHECK(is_zero(reduce_mod_rowspace(sub(ha, hb), rel_up)));

    const QVec line = qv({1, 1, 1});
    CHECK(pullback_curve(ctx, line) == qv({1, 1, 1, 0}));
    CHECK(pushforward_divisor(ctx, ha) == qv({1, 0, 0}));
    CHECK(pushforward_curve(ctx, pullback_curve(ctx, line)) == line);
    CHECK(is_zero(pushforward_curve(ctx, ctx.exceptional_curve)));
    CHECK(pairing(pullback_curve(ctx, line), ctx.exceptional_divisor) == 0);
    CHECK(pairing(ctx.exceptional_curve, ctx.exceptional_divisor) == -1);

    // Projection formula on a grid of small vectors.
    for (int i = -2; i <= 2; ++i) {
        const QVec a = qv({i, 1 - i, i * i});
        const QVec c_up = qv({2, i, -1, i - 1});
        CHECK(pairing(pushforward_curve(ctx, c_up), a) == pairing(c_up, pullback_divisor(ctx, a)));
        const QVec c = qv({i, i, i});
        CHECK(pairing(pullback_curve(ctx, c), pullback_divisor(ctx, a)) == pairing(c, a));
    }

    CHECK_THROWS_AS(pullback_divisor(ctx, qv({1, 0, 0, 0})), input_error);
    CHECK_THROWS_AS(pushforward_curve(ctx, qv({1, 0, 0})), input_error);
}

TEST_CASE("section polytopes and divisor volumes") {
    const Fan p2 = catalog::projective_space(2);
    for (int d = 0; d <= 3; ++d) {
        const Rat vol = divisor_volume(p2, qv({0, 0, d}));
        CHECK(vol == Rat(d * d));
    }
    const Fan p3 = catalog::projective_space(3);
    CHECK(divisor_volume(p3, qv({0, 0, 0, 2})) == 8);
    CHECK(divisor_volume(p3, qv({1, 1, 1, 0})) == 27);

    // Twice the hyperplane minus the exceptional divisor, and three times
    // minus it: the volumes drop by the point's multiplicity.
    const Fan bl = catalog::blowup_p2();
    CHECK(divisor_volume(bl, qv({0, 0, 2, -1})) == 3);
    CHECK(divisor_volume(bl, qv({0, 0, 3, -1})) == 8);
    // The exceptional divisor itself has no sections to speak of.
    CHECK(divisor_volume(bl, qv({0, 0, 0, 1})) == 0);

    const Polytope P = polytope_from_divisor(bl, qv({0, 0, 3, -1}));
    const auto vd = polytope_vertices(P);
    CHECK(vd.bounded);
    CHECK(vd.vertices.size() == 4);
}

TEST_CASE("nef power curves: frozen examples") {
    const Fan p2 = catalog::projective_space(2);
    const ConeSystem cs2 = cone_system(p2);
    CHECK(nef_power_curve(p2, cs2, qv({0, 0, 1})) == qv({1, 1, 1}));
    CHECK(nef_power_curve(p2, cs2, qv({0, 0, 3})) == qv({3, 3, 3}));
    // Representation invariance: another vector for the same class.
    CHECK(nef_power_curve(p2, cs2, qv({1, 1, 1})) == qv({3, 3, 3}));

    const Fan p3 = catalog::projective_space(3);
    const ConeSystem cs3 = cone_system(p3);
    CHECK(nef_power_curve(p3, cs3, qv({1, 0, 0, 0})) == qv({1, 1, 1, 1}));
    CHECK(nef_power_curve(p3, cs3, qv({0, 0, 0, 2})) == qv({4, 4, 4, 4}));

    const Fan bl = catalog::blowup_p2();
    const ConeSystem csb = cone_system(bl);
    CHECK(nef_power_curve(bl, csb, qv({0, 0, 1, 0})) == qv({1, 1, 1, 0}));
    CHECK(nef_power_curve(bl, csb, qv({0, 0, 1, -1})) == qv({0, 0, 1, 1}));
    CHECK(nef_power_curve(bl, csb, qv({0, 0, 2, -1})) == qv({1, 1, 2, 1}));
    CHECK(nef_power_curve(bl, csb, qv({0, 0, 3, -1})) == qv({2, 2, 3, 1}));

    const Fan pp = catalog::p1_times_p1();
    const ConeSystem csp = cone_system(pp);
    CHECK(nef_power_curve(pp, csp, qv({0, 2, 0, 3})) == qv({3, 3, 2, 2}));

    // The exceptional divisor is not nef.
    CHECK_THROWS_AS(nef_power_curve(bl, csb, qv({0, 0, 0, 1})), input_error);
}

TEST_CASE("nef power curves: battery properties") {
    for (const auto& [name, fan] : catalog::battery()) {
        INFO(name);
        const ConeSystem cs = cone_system(fan);
        const auto& nr = cs.nef_divisors.rays;
        QMat samples = nr;
        for (std::size_t i = 0; i < nr.size(); ++i)
            for (std::size_t j = i + 1; j < nr.size(); ++j) samples.push_back(add(nr[i], nr[j]));
        for (const auto& a : samples) {
            const QVec c = nef_power_curve(fan, cs, a);
            CHECK(is_integral(c));
            CHECK(cone_contains(cs.movable_curves, c));
            // Pairing the curve with its own divisor gives the volume.
            CHECK(pairing(c, a) == divisor_volume(fan, a));
        }
    }
}
