#include "cy4/torus.hpp"

#include <numeric>
#include <stdexcept>

#include <omp.h>

namespace cy4 {

namespace {

std::array<EisensteinInt, 3> mat_vec(const Mat3& mat, const std::array<EisensteinInt, 3>& v) {
    std::array<EisensteinInt, 3> out{};
    for (int i = 0; i < 3; ++i) {
        EisensteinInt s;
        for (int j = 0; j < 3; ++j) s = s + mat.at(i, j) * v[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = s;
    }
    return out;
}

void check_grid(int k) {
    if (k < 1 || k > 6) throw std::invalid_argument("grid denominator must lie in [1, 6]");
}

} // namespace

TorusPoint::TorusPoint(std::int64_t denom, const std::array<EisensteinInt, 3>& num) {
    if (denom < 1) throw std::invalid_argument("torus point denominator must be positive");
    m = denom;
    for (std::size_t i = 0; i < 3; ++i) v[i] = mod_int(num[i], m);
    std::int64_t g = m;
    for (const auto& z : v) {
        g = std::gcd(g, z.a);
        g = std::gcd(g, z.b);
    }
    m /= g;
    for (auto& z : v) {
        z.a /= g;
        z.b /= g;
    }
}

std::vector<TorusPoint> zeta_fixed_points() {
    // q = (a + b*w)/3 is fixed by multiplication by w exactly when
    // (w - 1)(a + b*w) is divisible by 3.
    const EisensteinInt w_minus_one{-1, 1};
    std::vector<TorusPoint> out;
    for (std::int64_t a = 0; a < 3; ++a)
        for (std::int64_t b = 0; b < 3; ++b) {
            if (!divisible_by_int(w_minus_one * EisensteinInt{a, b}, 3)) continue;
            out.emplace_back(3, std::array<EisensteinInt, 3>{EisensteinInt{a, b}, eis_zero, eis_zero});
        }
    if (out.size() != 3) throw std::logic_error("multiplication by w must fix exactly 3 curve points");
    return out;
}

const std::vector<TorusPoint>& theta_points() {
    static const std::vector<TorusPoint> pts = [] {
        std::vector<TorusPoint> out;
        auto curve = zeta_fixed_points();
        std::array<EisensteinInt, 3> q;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t k = 0; k < 3; ++k) {
                    q[0] = curve[i].m == 1 ? eis_zero : curve[i].v[0];
                    q[1] = curve[j].m == 1 ? eis_zero : curve[j].v[0];
                    q[2] = curve[k].m == 1 ? eis_zero : curve[k].v[0];
                    out.emplace_back(3, q);
                }
        return out;
    }();
    return pts;
}

bool is_fixed_point(const Mat3& a, const TorusPoint& q) {
    auto image = mat_vec(a - Mat3::identity(), q.v);
    for (const auto& z : image)
        if (!divisible_by_int(z, q.m)) return false;
    return true;
}

FixedLocusSummary fixed_locus(const Mat3& a) {
    SnfResult snf = smith_normal_form(a - Mat3::identity());
    FixedLocusSummary out;
    out.invariant_factors = invariant_factors(snf);
    out.complex_dimension = 3 - static_cast<int>(out.invariant_factors.size());
    out.component_count = 1;
    for (const auto& d : out.invariant_factors)
        out.component_count = detail::checked_mul(out.component_count, norm(d));
    return out;
}

int theta_intersection_count(const Mat3& a) {
    int n = 0;
    for (const auto& q : theta_points())
        if (is_fixed_point(a, q)) ++n;
    return n;
}

std::optional<std::int64_t> quasi_fixed_count(const Mat3& a, int j) {
    if (j != 1 && j != 2) throw std::domain_error("quasi-fixed exponent must be 1 or 2");
    const EisensteinInt wj = j == 1 ? eis_zeta : EisensteinInt{-1, -1};
    EisensteinInt d = det(a - Mat3::scalar(wj));
    if (is_zero(d)) return std::nullopt;
    return norm(d);
}

std::int64_t brute_force_fixed_count(const Mat3& mat, int k, int workers) {
    check_grid(k);
    const std::int64_t kk = k;
    const std::int64_t total = kk * kk * kk * kk * kk * kk;
    const int threads = workers > 0 ? workers : omp_get_max_threads();

    std::int64_t count = 0;
    bool overflowed = false;
#pragma omp parallel for num_threads(threads) schedule(static) reduction(+ : count)
    for (std::int64_t t = 0; t < total; ++t) {
        try {
            std::int64_t rest = t;
            std::array<EisensteinInt, 3> v;
            for (std::size_t i = 0; i < 3; ++i) {
                std::int64_t a = rest % kk;
                rest /= kk;
                std::int64_t b = rest % kk;
                rest /= kk;
                v[i] = EisensteinInt{a, b};
            }
            auto image = mat_vec(mat, v);
            bool ok = true;
            for (const auto& z : image)
                if (!divisible_by_int(z, kk)) {
                    ok = false;
                    break;
                }
            if (ok) ++count;
        } catch (const std::overflow_error&) {
#pragma omp atomic write
            overflowed = true;
        }
    }
    if (overflowed) throw std::overflow_error("integer overflow in brute-force fixed point scan");
    return count;
}

std::int64_t brute_force_fixed_count_serial(const Mat3& mat, int k) {
    check_grid(k);
    const std::int64_t kk = k;
    std::int64_t count = 0;
    for (std::int64_t a0 = 0; a0 < kk; ++a0)
        for (std::int64_t b0 = 0; b0 < kk; ++b0)
            for (std::int64_t a1 = 0; a1 < kk; ++a1)
                for (std::int64_t b1 = 0; b1 < kk; ++b1)
                    for (std::int64_t a2 = 0; a2 < kk; ++a2)
                        for (std::int64_t b2 = 0; b2 < kk; ++b2) {
                            std::array<EisensteinInt, 3> v{EisensteinInt{a0, b0}, EisensteinInt{a1, b1},
                                                           EisensteinInt{a2, b2}};
                            auto image = mat_vec(mat, v);
                            bool ok = true;
                            for (const auto& z : image)
                                if (!divisible_by_int(z, kk)) {
                                    ok = false;
                                    break;
                                }
                            if (ok) ++count;
                        }
    return count;
}

std::vector<std::array<EisensteinInt, 3>> brute_force_fixed_points(const Mat3& mat, int k) {
    check_grid(k);
    const std::int64_t kk = k;
    const std::int64_t total = kk * kk * kk * kk * kk * kk;
    std::vector<std::array<EisensteinInt, 3>> out;
    for (std::int64_t t = 0; t < total; ++t) {
        std::int64_t rest = t;
        std::array<EisensteinInt, 3> v;
        for (std::size_t i = 0; i < 3; ++i) {
            std::int64_t a = rest % kk;
            rest /= kk;
            std::int64_t b = rest % kk;
            rest /= kk;
            v[i] = EisensteinInt{a, b};
        }
        auto image = mat_vec(mat, v);
        bool ok = true;
        for (const auto& z : image)
            if (!divisible_by_int(z, kk)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(v);
    }
    return out;
}

std::int64_t fixed_count_from_snf(const Mat3& mat, int k) {
    check_grid(k);
    SnfResult snf = smith_normal_form(mat);
    const EisensteinInt grid{k, 0};
    std::int64_t count = 1;
    for (int i = 0; i < 3; ++i) {
        const EisensteinInt& d = snf.D.at(i, i);
        std::int64_t factor =
            is_zero(d) ? detail::checked_mul(static_cast<std::int64_t>(k), static_cast<std::int64_t>(k))
                       : norm(gcd(d, grid));
        count = detail::checked_mul(count, factor);
    }
    return count;
}

} // namespace cy4
