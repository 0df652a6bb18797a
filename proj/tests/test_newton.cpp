#include <doctest.h>

#include <random>

#include "symdet/errors.hpp"
#include "symdet/newton.hpp"

using namespace symdet;

namespace {

// Independent membership oracle. In ray coordinates c (the cone is
// simplicial), the point lies in the polyhedron iff c >= 0 and
// sum_i c_i / d_i >= 1: shaving lambda_i = min(c_i/d_i, ...) off each apex
// direction must absorb a full unit of convex weight.
bool membership_oracle(int n, const std::vector<Rat>& p, const DegreeVector& d) {
    // c_j = x_j / 2 for j >= 2, c_1 = x_1 - sum_j c_j
    std::vector<Rat> c(n);
    Rat tail = 0;
    for (int j = 2; j <= n; ++j) {
        c[j - 1] = p[j - 1] / 2;
        tail += c[j - 1];
    }
    c[0] = p[0] - tail;
    Rat weight = 0;
    for (int i = 1; i <= n; ++i) {
        if (c[i - 1] < 0) return false;
        weight += c[i - 1] / d.at(i);
    }
    return weight >= 1;
}

std::vector<Rat> to_rat(const LatticeVector& v) {
    std::vector<Rat> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

} // namespace

TEST_CASE("validate_support: pinned examples") {
    ValidationResult r = validate_support(FunctionSupport(2, {{1, 1}, {2, 1}}));
    CHECK(r.ok);
    REQUIRE(r.degrees.has_value());
    CHECK(r.degrees->d == std::vector<std::int64_t>{1, 1});

    r = validate_support(FunctionSupport(2, {{1, 3}}));
    CHECK_FALSE(r.ok);
    CHECK(r.missing_rays == std::vector<int>{2});

    r = validate_support(FunctionSupport(3, {{1, 2}, {2, 2}, {3, 2}, {5, 7}}));
    CHECK(r.ok);
    CHECK(r.degrees->d == std::vector<std::int64_t>{2, 2, 2});
    // the extra monomial's point sits inside the polyhedron of the pure part
    GeneratorSet gs = build_generators(3);
    CHECK(newton_membership(3, monomial_point(gs, {5, 7}), *r.degrees));
}

TEST_CASE("validate_support: minimal pure exponent wins; bad input rejected") {
    ValidationResult r = validate_support(FunctionSupport(2, {{1, 5}, {1, 2}, {2, 4}}));
    CHECK(r.degrees->d == std::vector<std::int64_t>{2, 4});
    CHECK_THROWS_AS(FunctionSupport(2, {{0, 1}}), DomainError);
    CHECK_THROWS_AS(FunctionSupport(2, {{4, 1}}), DomainError);
    CHECK_THROWS_AS(FunctionSupport(2, {{1, 0}}), DomainError);
}

TEST_CASE("validate_support: adding monomials never breaks an OK verdict") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        int N = n * (n + 1) / 2;
        std::vector<Monomial> ms;
        for (int i = 1; i <= n; ++i) ms.push_back({i, 1 + static_cast<std::int64_t>(rng() % 5)});
        REQUIRE(validate_support(FunctionSupport(n, ms)).ok);
        for (int extra = 0; extra < 5; ++extra) {
            ms.push_back({1 + static_cast<int>(rng() % N), 1 + static_cast<std::int64_t>(rng() % 9)});
            CHECK(validate_support(FunctionSupport(n, ms)).ok);
        }
    }
}

TEST_CASE("newton_membership: pinned examples") {
    DegreeVector ones(2, {1, 1});
    CHECK(newton_membership(2, LatticeVector{1, 0}, ones));       // apex d1 g1
    CHECK(newton_membership(2, LatticeVector{2, 2}, ones));       // 2(e1+e2) = g1 + g2

    DegreeVector twos(2, {2, 2});
    CHECK_FALSE(newton_membership(2, LatticeVector{1, 1}, twos)); // below the compact face

    CHECK_THROWS_AS(newton_membership(2, LatticeVector{0, 1}, ones), DomainError);
}

TEST_CASE("newton_membership: agrees with the ray-coordinate oracle") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> deg(1, 5), num(0, 12), den(1, 4);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        std::vector<std::int64_t> dv(n);
        for (auto& x : dv) x = deg(rng);
        DegreeVector d(n, dv);

        // random rational point in the cone: non-negative ray coordinates
        std::vector<Rat> c(n), p(n, Rat(0));
        for (auto& ci : c) ci = Rat(num(rng), den(rng));
        for (int i = 1; i <= n; ++i) {
            p[0] += c[i - 1];
            if (i >= 2) p[i - 1] += 2 * c[i - 1];
        }
        CHECK(newton_membership(n, p, d) == membership_oracle(n, p, d));
    }
}

TEST_CASE("compact_face: pinned examples") {
    CompactFaceData cf = compact_face(3, Face{{1}}, DegreeVector(3, {5, 1, 1}));
    REQUIRE(cf.vertices.size() == 1);
    CHECK(cf.vertices[0] == LatticeVector{5, 0, 0});

    cf = compact_face(3, Face{{2, 3}}, DegreeVector(3, {1, 1, 1}));
    REQUIRE(cf.vertices.size() == 2);
    CHECK(cf.vertices[0] == LatticeVector{1, 2, 0});
    CHECK(cf.vertices[1] == LatticeVector{1, 0, 2});

    cf = compact_face(2, Face{{1, 2}}, DegreeVector(2, {2, 3}));
    CHECK(cf.vertices[0] == LatticeVector{2, 0});
    CHECK(cf.vertices[1] == LatticeVector{3, 6});
}

TEST_CASE("compact_face vertices lie on the boundary of the polyhedron") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<int> deg(1, 6);
    for (int n = 2; n <= 5; ++n) {
        std::vector<std::int64_t> dv(n);
        for (auto& x : dv) x = deg(rng);
        DegreeVector d(n, dv);
        for (int k = 1; k <= n; ++k)
            for (const Face& face : faces(n, k)) {
                CompactFaceData cf = compact_face(n, face, d);
                const Rat shrink = Rat(96, 97);
                for (const auto& v : cf.vertices) {
                    CHECK(newton_membership(n, v, d));
                    std::vector<Rat> inside = to_rat(v);
                    for (auto& x : inside) x *= shrink;
                    CHECK_FALSE(newton_membership(n, inside, d));
                }
            }
    }
}

TEST_CASE("for unit degrees the top compact face is the ray set") {
    for (int n = 2; n <= 6; ++n) {
        DegreeVector ones(n, std::vector<std::int64_t>(n, 1));
        Face top;
        for (int i = 1; i <= n; ++i) top.ray_indices.push_back(i);
        CompactFaceData cf = compact_face(n, top, ones);
        for (int i = 1; i <= n; ++i) CHECK(cf.vertices[i - 1] == ray_vector(n, i));
    }
}
