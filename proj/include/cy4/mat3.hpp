#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cy4/eisenstein.hpp"

namespace cy4 {

/// 3x3 matrix over Z[w], row-major. Lies in GL_3(Z[w]) exactly when the
/// determinant is one of the six units.
struct Mat3 {
    std::array<EisensteinInt, 9> e{};

    EisensteinInt& at(int r, int c) { return e[static_cast<std::size_t>(r * 3 + c)]; }
    const EisensteinInt& at(int r, int c) const { return e[static_cast<std::size_t>(r * 3 + c)]; }

    static Mat3 zero() { return {}; }

    static Mat3 identity() {
        Mat3 m;
        m.at(0, 0) = eis_one;
        m.at(1, 1) = eis_one;
        m.at(2, 2) = eis_one;
        return m;
    }

    static Mat3 from_rows(const std::array<std::array<EisensteinInt, 3>, 3>& rows) {
        Mat3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        return m;
    }

    static Mat3 scalar(const EisensteinInt& s) {
        Mat3 m;
        m.at(0, 0) = s;
        m.at(1, 1) = s;
        m.at(2, 2) = s;
        return m;
    }

    friend bool operator==(const Mat3&, const Mat3&) = default;
};

Mat3 operator+(const Mat3& x, const Mat3& y);
Mat3 operator-(const Mat3& x, const Mat3& y);
Mat3 operator*(const Mat3& x, const Mat3& y);
Mat3 operator*(const EisensteinInt& s, const Mat3& x);

/// x^k for k >= 0; pow(x, 0) = I.
Mat3 pow(const Mat3& x, int k);

Mat3 transpose(const Mat3& x);

EisensteinInt det(const Mat3& x);
EisensteinInt trace(const Mat3& x);

/// Coefficients of det(tI - X) = t^3 - tr t^2 + c2 t - det, with c2 the sum
/// of the principal 2x2 minors. Invariant under conjugation.
struct CharPoly {
    EisensteinInt tr;
    EisensteinInt c2;
    EisensteinInt det;

    friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

CharPoly char_poly(const Mat3& x);

/// Smith normal form over the Euclidean domain Z[w]: U*M*V = D with U, V of
/// unit determinant, D diagonal with d1 | d2 | d3, each nonzero d_i in
/// canonical-associate form, zeros trailing.
struct SnfResult {
    Mat3 U;
    Mat3 D;
    Mat3 V;
};

SnfResult smith_normal_form(const Mat3& m);

/// Nonzero diagonal entries of the Smith form, in order.
std::vector<EisensteinInt> invariant_factors(const SnfResult& snf);

/// Rank over the fraction field = number of nonzero invariant factors.
int snf_rank(const SnfResult& snf);

/// 6x6 integer matrix, row-major. Image of Mat3 under the embedding that
/// replaces each entry a + b*w by its multiplication matrix [[a, -b], [b, a-b]]
/// in the basis (1, w).
struct Mat6 {
    std::array<std::int64_t, 36> e{};

    std::int64_t& at(int r, int c) { return e[static_cast<std::size_t>(r * 6 + c)]; }
    std::int64_t at(int r, int c) const { return e[static_cast<std::size_t>(r * 6 + c)]; }

    static Mat6 identity();

    friend bool operator==(const Mat6&, const Mat6&) = default;
};

Mat6 operator*(const Mat6& x, const Mat6& y);

Mat6 integer_embedding(const Mat3& x);

/// Smallest k <= 60 with x^k = I, or nullopt for infinite order. Torsion in
/// GL_6(Z) has order at most 30 and GL_3(Z[w]) embeds there, so 60 is a safe
/// cutoff. Requires det(x) to be a unit.
std::optional<int> element_order(const Mat3& x);

} // namespace cy4
