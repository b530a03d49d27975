#pragma once

#include "cy4/mat3.hpp"

namespace cy4 {

/// Euler numbers along the quotient construction: Y the rigid threefold
/// quotient (chi = 2 * 36), S_i the fixed surface of the i-th involution,
/// Xtilde_i the blown-up double cover, X_i its quotient, M the fourfold
/// glued from X_1 and X_2 along Y.
struct EulerBreakdown {
    int chi_Y = 0;
    int chi_S1 = 0;
    int chi_S2 = 0;
    int chi_Xtilde1 = 0;
    int chi_Xtilde2 = 0;
    int chi_X1 = 0;
    int chi_X2 = 0;
    int chi_M = 0;

    friend bool operator==(const EulerBreakdown&, const EulerBreakdown&) = default;
};

/// chi(Y) for the underlying threefold: h^{1,1} = 36, h^{1,2} = 0.
int chi_beauville();

/// chi(S) = 2 |S meet Theta| for the fixed surface of an admissible
/// involution; throws std::domain_error otherwise.
int chi_surface(const Mat3& a);

/// Pure arithmetic of the pipeline, exposed so callers that already know the
/// surface Euler numbers need not redo the geometry.
EulerBreakdown breakdown_from_surface_chis(int chi_s1, int chi_s2);

/// Full breakdown for an admissible pair; throws std::domain_error when the
/// pair fails any admissibility condition.
EulerBreakdown euler_breakdown(const Mat3& a1, const Mat3& a2);

} // namespace cy4
