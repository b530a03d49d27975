#include "doctest.h"

#include <complex>
#include <random>

#include "cy4/eisenstein.hpp"

using namespace cy4;

namespace {

std::complex<double> to_complex(const EisensteinInt& x) {
    static const std::complex<double> w{-0.5, std::sqrt(3.0) / 2.0};
    return std::complex<double>(static_cast<double>(x.a), 0.0) + static_cast<double>(x.b) * w;
}

} // namespace

TEST_CASE("ring basics") {
    CHECK(eis_zero == EisensteinInt{0, 0});
    CHECK(is_zero(eis_zero));
    CHECK(!is_zero(eis_one));
    CHECK(EisensteinInt{1, 2} + EisensteinInt{3, 4} == EisensteinInt{4, 6});
    CHECK(EisensteinInt{1, 2} - EisensteinInt{3, 4} == EisensteinInt{-2, -2});
    CHECK(-EisensteinInt{1, -2} == EisensteinInt{-1, 2});

    // w^2 = -1 - w, and w^3 = 1.
    CHECK(eis_zeta * eis_zeta == EisensteinInt{-1, -1});
    CHECK(eis_zeta * eis_zeta * eis_zeta == eis_one);
    CHECK(EisensteinInt{1, 1} * EisensteinInt{1, -1} == EisensteinInt{2, 1});
}

TEST_CASE("norm and conjugate") {
    CHECK(norm(eis_zero) == 0);
    CHECK(norm(eis_one) == 1);
    CHECK(norm(eis_zeta) == 1);
    CHECK(norm(EisensteinInt{1, -1}) == 3);
    CHECK(norm(EisensteinInt{2, 1}) == 3);
    CHECK(norm(EisensteinInt{3, 0}) == 9);

    CHECK(conj(eis_zeta) == EisensteinInt{-1, -1});
    CHECK(conj(EisensteinInt{2, 1}) == EisensteinInt{1, -1});

    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::int64_t> coeff(-80, 80);
    for (int i = 0; i < 10000; ++i) {
        EisensteinInt x{coeff(rng), coeff(rng)}, y{coeff(rng), coeff(rng)};
        CHECK(norm(x * y) == norm(x) * norm(y));
        CHECK(x * conj(x) == EisensteinInt{norm(x), 0});
    }
}

TEST_CASE("multiplication against the complex embedding") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<std::int64_t> coeff(-1000, 1000);
    for (int i = 0; i < 10000; ++i) {
        EisensteinInt x{coeff(rng), coeff(rng)}, y{coeff(rng), coeff(rng)};
        auto lhs = to_complex(x * y);
        auto rhs = to_complex(x) * to_complex(y);
        CHECK(std::abs(lhs - rhs) < 1e-6);
    }
}

TEST_CASE("units and canonical associates") {
    CHECK(units().size() == 6);
    for (const auto& u : units()) {
        CHECK(is_unit(u));
        CHECK(norm(u) == 1);
        CHECK(canonical_associate(u) == eis_one);
    }
    for (std::int64_t a = -3; a <= 3; ++a)
        for (std::int64_t b = -3; b <= 3; ++b)
            CHECK(is_unit(EisensteinInt{a, b}) == (norm(EisensteinInt{a, b}) == 1));

    CHECK(canonical_associate(eis_zero) == eis_zero);
    CHECK(canonical_associate(EisensteinInt{1, -1}) == EisensteinInt{2, 1});
    CHECK(canonical_associate(EisensteinInt{-2, 0}) == EisensteinInt{2, 0});

    std::mt19937 rng(4242);
    std::uniform_int_distribution<std::int64_t> coeff(-50, 50);
    for (int i = 0; i < 2000; ++i) {
        EisensteinInt x{coeff(rng), coeff(rng)};
        EisensteinInt c = canonical_associate(x);
        CHECK(norm(c) == norm(x));
        CHECK(canonical_associate(c) == c);
        if (!is_zero(x)) {
            CHECK(c.b >= 0);
            CHECK(c.a > c.b);
        }
        for (const auto& u : units()) CHECK(canonical_associate(u * x) == c);
    }
}

TEST_CASE("euclidean division") {
    auto [q1, r1] = divmod(EisensteinInt{3, 0}, EisensteinInt{1, -1});
    CHECK(q1 == EisensteinInt{2, 1});
    CHECK(r1 == eis_zero);

    auto [q2, r2] = divmod(EisensteinInt{0, 1}, EisensteinInt{2, 0});
    CHECK(q2 == eis_zero);
    CHECK(r2 == eis_zeta);

    auto [q3, r3] = divmod(EisensteinInt{2, 2}, EisensteinInt{1, -1});
    CHECK(q3 == EisensteinInt{1, 1});
    CHECK(r3 == eis_zeta);

    CHECK_THROWS_AS(divmod(eis_one, eis_zero), std::domain_error);

    // Nearest-point rounding keeps norm(r) <= (3/4) norm(y).
    std::mt19937 rng(31337);
    std::uniform_int_distribution<std::int64_t> coeff(-50, 50);
    int checked = 0;
    while (checked < 10000) {
        EisensteinInt x{coeff(rng), coeff(rng)}, y{coeff(rng), coeff(rng)};
        if (is_zero(y)) continue;
        auto [q, r] = divmod(x, y);
        CHECK(q * y + r == x);
        CHECK(4 * norm(r) <= 3 * norm(y));
        ++checked;
    }
}

TEST_CASE("gcd") {
    CHECK(gcd(EisensteinInt{1, -1}, EisensteinInt{3, 0}) == EisensteinInt{2, 1});
    CHECK(gcd(EisensteinInt{2, 0}, EisensteinInt{3, 0}) == eis_one);
    CHECK(gcd(eis_zero, EisensteinInt{-2, 0}) == EisensteinInt{2, 0});
    CHECK(gcd(EisensteinInt{4, 0}, eis_zero) == EisensteinInt{4, 0});
    CHECK_THROWS_AS(gcd(eis_zero, eis_zero), std::domain_error);

    std::mt19937 rng(99);
    std::uniform_int_distribution<std::int64_t> coeff(-30, 30);
    for (int i = 0; i < 2000; ++i) {
        EisensteinInt x{coeff(rng), coeff(rng)}, y{coeff(rng), coeff(rng)};
        if (is_zero(x) && is_zero(y)) continue;
        EisensteinInt g = gcd(x, y);
        CHECK(g == canonical_associate(g));
        if (!is_zero(x)) CHECK(is_zero(divmod(x, g).r));
        if (!is_zero(y)) CHECK(is_zero(divmod(y, g).r));
        // Symmetric up to the canonical choice.
        CHECK(gcd(y, x) == g);
    }
}

TEST_CASE("integer divisibility helpers") {
    CHECK(divisible_by_int(EisensteinInt{3, 6}, 3));
    CHECK(!divisible_by_int(EisensteinInt{3, 5}, 3));
    CHECK(divisible_by_int(eis_zero, 7));
    CHECK(mod_int(EisensteinInt{-1, -5}, 3) == EisensteinInt{2, 1});
    CHECK(mod_int(EisensteinInt{7, 3}, 3) == EisensteinInt{1, 0});
    CHECK_THROWS_AS(divisible_by_int(eis_one, 0), std::domain_error);
    CHECK_THROWS_AS(mod_int(eis_one, -2), std::domain_error);
}

TEST_CASE("rendering") {
    CHECK(to_string(eis_zero) == "0");
    CHECK(to_string(eis_one) == "1");
    CHECK(to_string(EisensteinInt{-1, 0}) == "-1");
    CHECK(to_string(eis_zeta) == "w");
    CHECK(to_string(EisensteinInt{0, -1}) == "-w");
    CHECK(to_string(EisensteinInt{0, 2}) == "2*w");
    CHECK(to_string(EisensteinInt{1, 1}) == "1+w");
    CHECK(to_string(EisensteinInt{1, -1}) == "1-w");
    CHECK(to_string(EisensteinInt{2, -3}) == "2-3*w");
    CHECK(to_string(EisensteinInt{-2, 2}) == "-2+2*w");
}

TEST_CASE("checked arithmetic overflows loudly") {
    const std::int64_t big = INT64_MAX / 2 + 1;
    const EisensteinInt huge{big, 0};
    const EisensteinInt two{2, 0};
    CHECK_THROWS_AS(huge + huge, std::overflow_error);
    CHECK_THROWS_AS(huge * two, std::overflow_error);
    CHECK_THROWS_AS(norm(EisensteinInt{INT64_MAX, 0}), std::overflow_error);
}
