#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cy4/mat3.hpp"

namespace cy4 {

/// Torsion point v/m on the torus C^3 / Z[w]^3, stored as an integer
/// denominator m >= 1 and a numerator vector over Z[w]. Canonical form:
/// coefficients reduced into [0, m) and the common integer content of m and
/// all six coefficients divided out, so equal points compare equal.
struct TorusPoint {
    std::int64_t m = 1;
    std::array<EisensteinInt, 3> v{};

    TorusPoint() = default;
    TorusPoint(std::int64_t denom, const std::array<EisensteinInt, 3>& num);

    friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
};

/// The three points of one curve factor fixed by multiplication by w,
/// placed in the first coordinate of the torus. Derived by scanning the
/// 9-point grid of third-division points; exactly three must satisfy
/// (w - 1) q integral.
std::vector<TorusPoint> zeta_fixed_points();

/// The 27 points Q_{i,j,k} with each coordinate one of the three
/// multiplication-by-w fixed points, ordered lexicographically by (i, j, k).
const std::vector<TorusPoint>& theta_points();

/// Whether the automorphism given by a fixes q, i.e. (a - I) q is integral.
bool is_fixed_point(const Mat3& a, const TorusPoint& q);

/// Fixed locus of the automorphism a, read off the Smith form of a - I:
/// dimension 3 - rank, one component per solution class.
struct FixedLocusSummary {
    int complex_dimension = 0;
    std::int64_t component_count = 0;
    std::vector<EisensteinInt> invariant_factors;

    friend bool operator==(const FixedLocusSummary&, const FixedLocusSummary&) = default;
};

FixedLocusSummary fixed_locus(const Mat3& a);

/// Number of the 27 theta points fixed by a.
int theta_intersection_count(const Mat3& a);

/// Number of solutions of a x = w^j x on the torus, j in {1, 2}: the norm of
/// det(a - w^j I) when nonzero, nullopt when the solution set has positive
/// dimension.
std::optional<std::int64_t> quasi_fixed_count(const Mat3& a, int j);

/// Count of grid points v with coefficients in [0, k)^6 (denominator k)
/// satisfying mat v = 0 mod k. Takes mat directly, not an automorphism;
/// pass a - I to count fixed points. k must lie in [1, 6]. workers <= 0
/// picks the OpenMP default.
std::int64_t brute_force_fixed_count(const Mat3& mat, int k, int workers = 0);

/// Single-threaded reference for brute_force_fixed_count.
std::int64_t brute_force_fixed_count_serial(const Mat3& mat, int k);

/// The solutions themselves, in grid scan order. Test helper.
std::vector<std::array<EisensteinInt, 3>> brute_force_fixed_points(const Mat3& mat, int k);

/// Same count predicted from the Smith form: the product over invariant
/// factors d of norm(gcd(d, k)), with each zero diagonal contributing k^2.
std::int64_t fixed_count_from_snf(const Mat3& mat, int k);

} // namespace cy4

template <> struct std::hash<cy4::TorusPoint> {
    std::size_t operator()(const cy4::TorusPoint& q) const noexcept {
        std::size_t h = std::hash<std::int64_t>{}(q.m);
        for (const auto& z : q.v) {
            h = h * 1099511628211ULL ^ std::hash<std::int64_t>{}(z.a);
            h = h * 1099511628211ULL ^ std::hash<std::int64_t>{}(z.b);
        }
        return h;
    }
};
