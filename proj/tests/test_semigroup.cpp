#include <doctest.h>

#include <algorithm>
#include <set>

#include "symdet/errors.hpp"
#include "symdet/lattice.hpp"
#include "symdet/semigroup.hpp"

using namespace symdet;

TEST_CASE("build_generators: n = 2") {
    GeneratorSet gs = build_generators(2);
    REQUIRE(gs.size() == 3);
    CHECK(gs.generators[0] == LatticeVector{1, 0}); // e1
    CHECK(gs.generators[1] == LatticeVector{1, 2}); // e1 + 2 e2
    CHECK(gs.generators[2] == LatticeVector{1, 1}); // e1 + e2
}

TEST_CASE("build_generators: n = 3 matches the hand-listed set, rays first") {
    GeneratorSet gs = build_generators(3);
    REQUIRE(gs.size() == 6);
    CHECK(gs.generators[0] == LatticeVector{1, 0, 0});
    CHECK(gs.generators[1] == LatticeVector{1, 2, 0});
    CHECK(gs.generators[2] == LatticeVector{1, 0, 2});

    std::set<LatticeVector> got(gs.generators.begin(), gs.generators.end());
    std::set<LatticeVector> expected = {
        {1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 2, 0}, {1, 1, 1}, {1, 0, 2},
    };
    CHECK(got == expected);
}

TEST_CASE("build_generators: size and domain") {
    CHECK(build_generators(5).size() == 15);
    CHECK_THROWS_AS(build_generators(1), DomainError);
}

TEST_CASE("generator index map round-trips and is symmetric") {
    for (int n = 2; n <= 8; ++n) {
        GeneratorSet gs = build_generators(n);
        for (int pos = 0; pos < gs.size(); ++pos) {
            auto [i, j] = gs.label(pos);
            CHECK(gs.position(i, j) == pos);
            CHECK(gs.position(j, i) == pos);
        }
        // m_ij really is e_1 (+ e_i) (+ e_j)
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                LatticeVector v(n, 0);
                v[0] = 1;
                if (i >= 2) v[i - 1] += 1;
                if (j >= 2) v[j - 1] += 1;
                CHECK(gs.at(i, j) == v);
            }
    }
}

TEST_CASE("generators: first coordinate 1 and coordinate sums in {1,2,3}") {
    for (int n = 2; n <= 10; ++n) {
        for (const auto& g : build_generators(n).generators) {
            CHECK(g[0] == 1);
            Int sum = 0;
            for (const auto& c : g) sum += c;
            CHECK(sum >= 1);
            CHECK(sum <= 3);
        }
    }
}

TEST_CASE("rank of the generator set is n") {
    for (int n = 2; n <= 12; ++n) CHECK(rank(build_generators(n).generators) == n);
}

TEST_CASE("ambient_and_dimension") {
    CHECK(ambient_and_dimension(3, 2) == std::pair<Int, Int>{6, 3});
    CHECK(ambient_and_dimension(4, 2) == std::pair<Int, Int>{10, 4});
    for (int n = 2; n <= 9; ++n) {
        Int N = Int(n) * (n + 1) / 2;
        CHECK(ambient_and_dimension(n, n) == std::pair<Int, Int>{N, N - 1});
        CHECK(ambient_and_dimension(n, 2).second == n);
    }
    CHECK_THROWS_AS(ambient_and_dimension(4, 1), DomainError);
    CHECK_THROWS_AS(ambient_and_dimension(4, 5), DomainError);
}

TEST_CASE("minor relations: pinned instances") {
    GeneratorSet gs = build_generators(3);
    CHECK(add(gs.at(1, 1), gs.at(2, 3)) == add(gs.at(1, 3), gs.at(2, 1)));
    // m12 + m33 = 2 e1 + e2 + 2 e3 = m13 + m32
    CHECK(add(gs.at(1, 2), gs.at(3, 3)) == LatticeVector{2, 1, 2});
    CHECK(add(gs.at(1, 2), gs.at(3, 3)) == add(gs.at(1, 3), gs.at(3, 2)));
}

TEST_CASE("minor relations: all quadruples hold, with the right count") {
    RelationReport two = check_minor_relations(2);
    CHECK(two.checked == 1);
    CHECK(two.ok());
    for (int n = 2; n <= 10; ++n) {
        RelationReport rep = check_minor_relations(n);
        Int quads = binomial(n, 2) * binomial(n, 2);
        CHECK(Int(rep.checked) == quads);
        CHECK(rep.violations.empty());
    }
}

TEST_CASE("minimality") {
    CHECK(minimality_check(2));
    CHECK(minimality_check(3));
    CHECK(minimality_check(5));
    CHECK(minimality_check(6));
}

TEST_CASE("saturation: boxes up to the default scale have no violations") {
    SaturationReport r2 = saturation_check(2, 3);
    CHECK(r2.ok());
    CHECK(r2.cone_points > 0);

    SaturationReport r3 = saturation_check(3, 2);
    CHECK(r3.ok());
    CHECK(r3.cone_points > 0);
}

TEST_CASE("saturation: budget and domain errors") {
    CHECK_THROWS_AS(saturation_check(3, 3, 10), ResourceError);
    CHECK_THROWS_AS(saturation_check(1, 3), DomainError);
    CHECK_THROWS_AS(saturation_check(3, 0), DomainError);
}
