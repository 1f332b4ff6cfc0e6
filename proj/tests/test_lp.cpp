#include "catch_amalgamated.hpp"
#include "tpos/lp.hpp"

using namespace tpos;

namespace {
QVec qv(std::initializer_list<int> xs) {
    QVec v;
    for (auto x : xs) v.push_back(Rat(x));
    return v;
}
}  // namespace

TEST_CASE("feasible systems") {
    CHECK(linear_system_feasible({}, {}));
    CHECK(linear_system_feasible({qv({1})}, qv({1})));                        // x >= 1
    CHECK(linear_system_feasible({qv({1}), qv({-1})}, qv({1, -2})));          // 1 <= x <= 2
    CHECK(linear_system_feasible({qv({1}), qv({-1})}, {Rat(1, 2), Rat(-1, 2)}));  // x = 1/2
    CHECK(linear_system_feasible({qv({1, 1}), qv({1, -1})}, qv({2, 0})));
    CHECK(linear_system_feasible({qv({-1, -1}), qv({-1, 0})}, qv({-1, 0})));  // negative orthant side
}

TEST_CASE("infeasible systems") {
    CHECK_FALSE(linear_system_feasible({qv({1}), qv({-1})}, qv({1, 0})));  // x >= 1, x <= 0
    CHECK_FALSE(linear_system_feasible({qv({1, 1}), qv({-1, 0}), qv({0, -1})}, qv({1, 0, 0})));
    CHECK_FALSE(linear_system_feasible({qv({1}), qv({-1})}, {Rat(1, 2), Rat(-1, 3)}));
}

TEST_CASE("redundant rows do not confuse the solver") {
    QMat A = {qv({1, 0}), qv({1, 0}), qv({1, 0}), qv({0, 1})};
    CHECK(linear_system_feasible(A, qv({1, 1, 0, 5})));
}

TEST_CASE("support-value system for the three-cone surface fan") {
    // One inequality per wall: -(v0 + v1 + v2) >= 1, three times over.
    QMat A(3, qv({-1, -1, -1}));
    CHECK(linear_system_feasible(A, qv({1, 1, 1})));
    // Adding the opposite strict side makes it infeasible.
    A.push_back(qv({1, 1, 1}));
    CHECK_FALSE(linear_system_feasible(A, qv({1, 1, 1, 0})));
}
