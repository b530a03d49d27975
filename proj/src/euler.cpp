#include "cy4/euler.hpp"

#include <stdexcept>

#include "cy4/conditions.hpp"
#include "cy4/torus.hpp"

namespace cy4 {

int chi_beauville() { return 2 * (36 - 0); }

int chi_surface(const Mat3& a) {
    if (!is_admissible_matrix(a)) throw std::domain_error("chi_surface: matrix is not admissible");
    return 2 * theta_intersection_count(a);
}

EulerBreakdown breakdown_from_surface_chis(int chi_s1, int chi_s2) {
    EulerBreakdown b;
    b.chi_Y = chi_beauville();
    b.chi_S1 = chi_s1;
    b.chi_S2 = chi_s2;
    // Double cover branched over two disjoint copies of S, then the blowup
    // and the quotient by the lifted involution.
    b.chi_Xtilde1 = 2 * b.chi_Y + 2 * b.chi_S1;
    b.chi_Xtilde2 = 2 * b.chi_Y + 2 * b.chi_S2;
    b.chi_X1 = b.chi_Y + 3 * b.chi_S1;
    b.chi_X2 = b.chi_Y + 3 * b.chi_S2;
    // Gluing the two pieces along Y cancels the two copies of chi(Y), so
    // chi(M) = 3 (chi(S1) + chi(S2)).
    b.chi_M = b.chi_X1 + b.chi_X2 - 2 * b.chi_Y;
    return b;
}

EulerBreakdown euler_breakdown(const Mat3& a1, const Mat3& a2) {
    PairReport rep = check_pair(a1, a2);
    if (!rep.pair_admissible) throw std::domain_error("euler_breakdown: pair is not admissible");
    return *rep.euler;
}

} // namespace cy4
