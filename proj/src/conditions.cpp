#include "cy4/conditions.hpp"

namespace cy4 {

MatrixReport check_matrix(const Mat3& a) {
    MatrixReport r;
    r.in_gl3 = is_unit(det(a));
    r.involutive = a * a == Mat3::identity();
    r.det_minus_one = det(a) == EisensteinInt{-1, 0};
    if (r.involutive && r.det_minus_one) {
        EisensteinInt tr = trace(a);
        if (tr == eis_one)
            r.trace_profile = TraceProfile::Surface;
        else if (tr == EisensteinInt{-3, 0})
            r.trace_profile = TraceProfile::Pointwise;
    }
    r.fixed_locus = fixed_locus(a);
    r.theta_count = theta_intersection_count(a);
    r.quasi_fixed_1 = quasi_fixed_count(a, 1);
    r.quasi_fixed_2 = quasi_fixed_count(a, 2);
    r.admissible = r.in_gl3 && r.involutive && r.det_minus_one && r.trace_profile == TraceProfile::Surface;
    return r;
}

bool is_admissible_matrix(const Mat3& a) {
    if (!is_unit(det(a))) return false;
    if (!(a * a == Mat3::identity())) return false;
    if (!(det(a) == EisensteinInt{-1, 0})) return false;
    return trace(a) == eis_one;
}

PairReport check_pair(const Mat3& a1, const Mat3& a2) {
    PairReport r;
    r.first = check_matrix(a1);
    r.second = check_matrix(a2);
    Mat3 product = a1 * a2;
    r.product_invertible = is_unit(det(product));
    if (r.product_invertible) r.product_order = element_order(product);
    bool infinite_dihedral = r.product_invertible && !r.product_order.has_value();
    r.pair_admissible = r.first.admissible && r.second.admissible && infinite_dihedral;
    if (r.pair_admissible)
        r.euler = breakdown_from_surface_chis(2 * r.first.theta_count, 2 * r.second.theta_count);
    return r;
}

} // namespace cy4
