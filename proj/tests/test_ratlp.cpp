#include <doctest.h>

#include <random>

#include "symdet/ratlp.hpp"

using namespace symdet;

TEST_CASE("lp_feasible: small systems") {
    // x1 + x2 = 1, x >= 0
    CHECK(lp_feasible({{1, 1}}, {1}));
    // x1 + x2 = -1 has no non-negative solution
    CHECK_FALSE(lp_feasible({{1, 1}}, {-1}));
    // x1 - x2 = 0 and x1 + x2 = 2 -> (1, 1)
    CHECK(lp_feasible({{1, -1}, {1, 1}}, {0, 2}));
    // x1 = 1 and x1 = 2 is inconsistent
    CHECK_FALSE(lp_feasible({{1}, {1}}, {1, 2}));
    // trivial rows
    CHECK(lp_feasible({{0, 0}}, {0}));
    CHECK_FALSE(lp_feasible({{0, 0}}, {1}));
    // negative coefficients can still admit solutions
    CHECK(lp_feasible({{-1, 1}}, {3}));
    // x1 - x2 = 3 with an extra x1 + x2 = 1 forces x1 = 2, x2 = -1: infeasible
    CHECK_FALSE(lp_feasible({{1, -1}, {1, 1}}, {3, 1}));
}

TEST_CASE("lp_feasible: constructed solutions are always found") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> entry(-5, 5), sol(0, 4), dims(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        int m = dims(rng), n = dims(rng);
        std::vector<std::vector<Rat>> A(m, std::vector<Rat>(n));
        std::vector<Rat> x(n), b(m, Rat(0));
        for (auto& xi : x) xi = sol(rng);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                A[i][j] = entry(rng);
                b[i] += A[i][j] * x[j];
            }
        CHECK(lp_feasible(A, b));
    }
}
