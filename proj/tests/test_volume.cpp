#include <doctest.h>

#include <random>

#include "symdet/errors.hpp"
#include "symdet/faultinj.hpp"
#include "symdet/volume.hpp"

using namespace symdet;

namespace {

DegreeVector random_degrees(std::mt19937_64& rng, int n, int hi = 9) {
    std::uniform_int_distribution<std::int64_t> dist(1, hi);
    std::vector<std::int64_t> d(n);
    for (auto& x : d) x = dist(rng);
    return DegreeVector(n, d);
}

} // namespace

TEST_CASE("normalized_volume: pinned values") {
    // ray faces carry d_i
    CHECK(normalized_volume(3, Face{{2}}, DegreeVector(3, {1, 7, 1})).value == 7);
    CHECK(normalized_volume(3, Face{{1}}, DegreeVector(3, {4, 1, 1})).value == 4);

    // full Type1 face at n = 3: 4 d1 d2 d3
    CHECK(normalized_volume(3, Face{{1, 2, 3}}, DegreeVector(3, {1, 1, 1})).value == 4);
    CHECK(normalized_volume(3, Face{{1, 2, 3}}, DegreeVector(3, {2, 3, 5})).value == 4 * 30);

    // Type2 face {2,3}: 2 d2 d3
    CHECK(normalized_volume(3, Face{{2, 3}}, DegreeVector(3, {1, 1, 1})).value == 2);
    CHECK(normalized_volume(3, Face{{2, 3}}, DegreeVector(3, {1, 3, 4})).value == 24);

    // n = 2 top face, d = (2,3): |det [[2,3],[0,6]]| = 12
    CHECK(normalized_volume(2, Face{{1, 2}}, DegreeVector(2, {2, 3})).value == 12);

    // n = 4 Type2 face {2,3,4} with unit degrees: 2^{k-1} = 4
    CHECK(normalized_volume(4, Face{{2, 3, 4}}, DegreeVector(4, {1, 1, 1, 1})).value == 4);
}

TEST_CASE("closed_form_volume: pinned values") {
    CHECK(closed_form_volume(2, Face{{1, 2}}, DegreeVector(2, {2, 3})) == 12);
    CHECK(closed_form_volume(4, Face{{2, 3, 4}}, DegreeVector(4, {1, 1, 1, 1})) == 4);
    CHECK(closed_form_volume(3, Face{{1}}, DegreeVector(3, {1, 1, 1})) == 1);
}

TEST_CASE("determinant path equals the closed form on every face") {
    std::mt19937_64 rng(4242);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            DegreeVector d = random_degrees(rng, n);
            for (int k = 1; k <= n; ++k)
                for (const Face& face : faces(n, k))
                    CHECK(normalized_volume(n, face, d).value == closed_form_volume(n, face, d));
        }
    }
    // wider sweep through the cached path (shown equal to the one-shot path below)
    for (int n = 7; n <= 8; ++n) {
        VolumeEvaluator ev(n);
        const auto& fs = ev.all_faces();
        for (int trial = 0; trial < 200; ++trial) {
            DegreeVector d = random_degrees(rng, n);
            for (size_t i = 0; i < fs.size(); ++i)
                CHECK(ev.normalized_volume(static_cast<int>(i), d) ==
                      closed_form_volume(n, fs[i], d));
        }
    }
}

TEST_CASE("volume is multiplicative in each participating degree") {
    std::mt19937_64 rng(808);
    for (int n = 2; n <= 5; ++n) {
        DegreeVector d = random_degrees(rng, n, 5);
        for (int k = 1; k <= n; ++k)
            for (const Face& face : faces(n, k)) {
                Int base = normalized_volume(n, face, d).value;
                for (int i : face.ray_indices) {
                    DegreeVector doubled = d;
                    doubled.d[i - 1] *= 2;
                    CHECK(normalized_volume(n, face, doubled).value == 2 * base);
                }
            }
    }
}

TEST_CASE("Type2 volume does not depend on the anchor choice in the basis") {
    std::mt19937_64 rng(99);
    for (int n = 3; n <= 6; ++n) {
        DegreeVector d = random_degrees(rng, n);
        for (int k = 2; k < n; ++k)
            for (const Face& face : faces(n, k)) {
                if (face.family() != FaceFamily::Type2) continue;

                // anchor at the second-smallest index instead of the smallest
                const auto& idx = face.ray_indices;
                int anchor = idx[1];
                std::vector<LatticeVector> alt;
                alt.push_back(ray_vector(n, anchor));
                for (int i : idx) {
                    if (i == anchor) continue;
                    LatticeVector v = unit_vector(n, 1);
                    v[anchor - 1] += 1;
                    v[i - 1] += 1;
                    alt.push_back(std::move(v));
                }

                CompactFaceData cf = compact_face(n, face, d);
                IntegerMatrix m(k, k);
                for (int t = 0; t < k; ++t) {
                    ExpressResult res = express_in_basis(cf.vertices[t], alt);
                    REQUIRE(res.ok());
                    for (int r = 0; r < k; ++r) m.at(r, t) = res.coords[r];
                }
                Int v = det(m);
                if (v < 0) v = -v;
                CHECK(v == normalized_volume(n, face, d).value);
            }
    }
}

TEST_CASE("VolumeEvaluator matches the one-shot path") {
    std::mt19937_64 rng(17);
    for (int n = 2; n <= 6; ++n) {
        VolumeEvaluator ev(n);
        for (int trial = 0; trial < 10; ++trial) {
            DegreeVector d = random_degrees(rng, n);
            const auto& fs = ev.all_faces();
            for (size_t i = 0; i < fs.size(); ++i)
                CHECK(ev.normalized_volume(static_cast<int>(i), d) ==
                      normalized_volume(n, fs[i], d).value);
        }
    }
}

TEST_CASE("fault hooks perturb exactly the targeted family") {
    DegreeVector d(3, {2, 3, 4});
    Face ray{{2}}, t1{{1, 2}}, t2{{2, 3}};
    Int vr = normalized_volume(3, ray, d).value;
    Int v1 = normalized_volume(3, t1, d).value;
    Int v2 = normalized_volume(3, t2, d).value;

    faultinj::set(faultinj::Fault::DetType2);
    CHECK(normalized_volume(3, ray, d).value == vr);
    CHECK(normalized_volume(3, t1, d).value == v1);
    CHECK(normalized_volume(3, t2, d).value == v2 + 1);

    faultinj::set(faultinj::Fault::ClosedType1);
    CHECK(closed_form_volume(3, t1, d) == v1 + 1);
    CHECK(closed_form_volume(3, t2, d) == v2);

    faultinj::set(faultinj::Fault::None);
    CHECK(normalized_volume(3, t2, d).value == v2);
    CHECK(closed_form_volume(3, t1, d) == v1);
}
