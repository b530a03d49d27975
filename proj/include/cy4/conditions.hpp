#pragma once

#include <optional>

#include "cy4/euler.hpp"
#include "cy4/mat3.hpp"
#include "cy4/torus.hpp"

namespace cy4 {

/// Shape of the fixed locus of an involutive unimodular matrix with
/// determinant -1: eigenvalues (1, 1, -1) give trace 1 and a surface,
/// (-1, -1, -1) give trace -3 and isolated points. Matrices failing the
/// involution or determinant test fall into Other.
enum class TraceProfile { Surface, Pointwise, Other };

struct MatrixReport {
    bool in_gl3 = false;
    bool involutive = false;
    bool det_minus_one = false;
    TraceProfile trace_profile = TraceProfile::Other;
    FixedLocusSummary fixed_locus;
    int theta_count = 0;
    std::optional<std::int64_t> quasi_fixed_1;
    std::optional<std::int64_t> quasi_fixed_2;
    bool admissible = false;
};

/// Conditions on a single matrix: unimodular, involutive, determinant -1,
/// surface trace profile. admissible is their conjunction.
MatrixReport check_matrix(const Mat3& a);

bool is_admissible_matrix(const Mat3& a);

struct PairReport {
    MatrixReport first;
    MatrixReport second;
    /// Order of a1 * a2; nullopt means infinite. Only meaningful when
    /// product_invertible.
    std::optional<int> product_order;
    bool product_invertible = false;
    bool pair_admissible = false;
    /// Present exactly when the pair is admissible.
    std::optional<EulerBreakdown> euler;
};

/// Pair admissibility: both matrices admissible and the product of infinite
/// order, making the generated group infinite dihedral.
PairReport check_pair(const Mat3& a1, const Mat3& a2);

} // namespace cy4
