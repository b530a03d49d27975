#include "doctest.h"

#include <unordered_set>

#include "cy4/json_io.hpp"
#include "cy4/torus.hpp"

using namespace cy4;

namespace {

const Mat3 a1 = parse_matrix("[[-1,0,0],[0,1,0],[0,0,1]]");
const Mat3 a2 = parse_matrix("[[1,0,0],[-1,0,1],[1,1,0]]");

// All 48 signed permutation matrices; their inverse is the transpose.
std::vector<Mat3> signed_permutations() {
    std::vector<Mat3> out;
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& p : perms)
        for (int mask = 0; mask < 8; ++mask) {
            Mat3 m;
            for (int r = 0; r < 3; ++r)
                m.at(r, p[r]) = EisensteinInt{(mask >> r) & 1 ? -1 : 1, 0};
            out.push_back(m);
        }
    return out;
}

} // namespace

TEST_CASE("torus point canonical form") {
    TorusPoint origin(3, {eis_zero, eis_zero, eis_zero});
    CHECK(origin.m == 1);
    CHECK(origin == TorusPoint());

    TorusPoint q(3, {EisensteinInt{4, -1}, eis_zero, eis_zero});
    CHECK(q.m == 3);
    CHECK(q.v[0] == EisensteinInt{1, 2});
    CHECK(q == TorusPoint(3, {EisensteinInt{1, 2}, eis_zero, eis_zero}));

    TorusPoint half(6, {EisensteinInt{2, 4}, eis_zero, eis_zero});
    CHECK(half.m == 3);
    CHECK(half.v[0] == EisensteinInt{1, 2});

    CHECK_THROWS_AS(TorusPoint(0, {eis_zero, eis_zero, eis_zero}), std::invalid_argument);
}

TEST_CASE("distinguished points") {
    auto curve = zeta_fixed_points();
    REQUIRE(curve.size() == 3);
    std::unordered_set<TorusPoint> curve_set(curve.begin(), curve.end());
    CHECK(curve_set.count(TorusPoint()) == 1);
    CHECK(curve_set.count(TorusPoint(3, {EisensteinInt{1, 2}, eis_zero, eis_zero})) == 1);
    CHECK(curve_set.count(TorusPoint(3, {EisensteinInt{2, 1}, eis_zero, eis_zero})) == 1);

    const auto& theta = theta_points();
    REQUIRE(theta.size() == 27);
    std::unordered_set<TorusPoint> distinct(theta.begin(), theta.end());
    CHECK(distinct.size() == 27);

    // Every theta point is fixed by coordinatewise multiplication by w.
    Mat3 zi = Mat3::scalar(eis_zeta);
    for (const auto& q : theta) CHECK(is_fixed_point(zi, q));
    CHECK(theta_intersection_count(zi) == 27);
}

TEST_CASE("theta intersection counts") {
    CHECK(theta_intersection_count(a1) == 9);
    CHECK(theta_intersection_count(a2) == 9);
    CHECK(theta_intersection_count(Mat3::identity()) == 27);
    CHECK(theta_intersection_count(Mat3::scalar(EisensteinInt{-1, 0})) == 1);
}

TEST_CASE("fixed locus structure") {
    FixedLocusSummary f1 = fixed_locus(a1);
    CHECK(f1.complex_dimension == 2);
    CHECK(f1.component_count == 4);
    CHECK(f1.invariant_factors == std::vector<EisensteinInt>{EisensteinInt{2, 0}});

    FixedLocusSummary f2 = fixed_locus(a2);
    CHECK(f2.complex_dimension == 2);
    CHECK(f2.component_count == 1);

    FixedLocusSummary fm = fixed_locus(Mat3::scalar(EisensteinInt{-1, 0}));
    CHECK(fm.complex_dimension == 0);
    CHECK(fm.component_count == 64);

    FixedLocusSummary fi = fixed_locus(Mat3::identity());
    CHECK(fi.complex_dimension == 3);
    CHECK(fi.component_count == 1);
    CHECK(fi.invariant_factors.empty());
}

TEST_CASE("quasi fixed counts") {
    CHECK(quasi_fixed_count(a1, 1) == 9);
    CHECK(quasi_fixed_count(a1, 2) == 9);
    CHECK(quasi_fixed_count(a2, 1) == 9);
    CHECK(quasi_fixed_count(a2, 2) == 9);
    CHECK(quasi_fixed_count(Mat3::identity(), 1) == 27);
    CHECK(quasi_fixed_count(Mat3::scalar(EisensteinInt{-1, 0}), 1) == 1);
    CHECK(!quasi_fixed_count(Mat3::scalar(eis_zeta), 1).has_value());
    CHECK_THROWS_AS(quasi_fixed_count(a1, 3), std::domain_error);
    CHECK_THROWS_AS(quasi_fixed_count(a1, 0), std::domain_error);
}

TEST_CASE("brute force grid counts") {
    const Mat3 d1 = a1 - Mat3::identity();
    const Mat3 d2 = a2 - Mat3::identity();
    CHECK(brute_force_fixed_count(d1, 2) == 64);
    CHECK(brute_force_fixed_count(d1, 4) == 1024);
    CHECK(brute_force_fixed_count(d1, 3) == 81);
    CHECK(brute_force_fixed_count(d2, 1) == 1);
    CHECK(brute_force_fixed_count(Mat3::zero(), 2) == 64);

    CHECK_THROWS_AS(brute_force_fixed_count(d1, 0), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_fixed_count(d1, 7), std::invalid_argument);

    auto pts = brute_force_fixed_points(d1, 2);
    CHECK(pts.size() == 64);

    // Serial reference, parallel kernel, and the Smith form prediction agree.
    std::vector<Mat3> samples{d1, d2, Mat3::zero(), a1 * a2 - Mat3::identity(),
                              Mat3::scalar(EisensteinInt{-2, 0})};
    for (const Mat3& m : samples)
        for (int k = 1; k <= 4; ++k) {
            std::int64_t fast = brute_force_fixed_count(m, k, 4);
            CHECK(fast == brute_force_fixed_count_serial(m, k));
            CHECK(fast == fixed_count_from_snf(m, k));
        }
}

TEST_CASE("theta counts are signed permutation invariants") {
    for (const Mat3& p : signed_permutations()) {
        Mat3 pinv = transpose(p);
        REQUIRE(p * pinv == Mat3::identity());
        CHECK(theta_intersection_count(p * a1 * pinv) == 9);
        CHECK(theta_intersection_count(p * a2 * pinv) == 9);
    }
}
