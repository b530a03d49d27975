#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cy4 {

namespace detail {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in Eisenstein add");
    return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in Eisenstein sub");
    return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in Eisenstein mul");
    return r;
}

} // namespace detail

/// Element a + b*w of the ring Z[w], where w = exp(2*pi*i/3) satisfies
/// w^2 + w + 1 = 0. The pair (a, b) is unique; w^2 is never stored, it is
/// reduced to -1 - w on the fly.
struct EisensteinInt {
    std::int64_t a = 0;
    std::int64_t b = 0;

    constexpr EisensteinInt() = default;
    constexpr EisensteinInt(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {}

    friend constexpr bool operator==(const EisensteinInt&, const EisensteinInt&) = default;
};

inline constexpr EisensteinInt eis_zero{0, 0};
inline constexpr EisensteinInt eis_one{1, 0};
inline constexpr EisensteinInt eis_zeta{0, 1};

inline bool is_zero(const EisensteinInt& x) { return x.a == 0 && x.b == 0; }

inline EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
    return {detail::checked_add(x.a, y.a), detail::checked_add(x.b, y.b)};
}

inline EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
    return {detail::checked_sub(x.a, y.a), detail::checked_sub(x.b, y.b)};
}

inline EisensteinInt operator-(const EisensteinInt& x) {
    return {detail::checked_sub(0, x.a), detail::checked_sub(0, x.b)};
}

/// (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w.
inline EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
    using detail::checked_add;
    using detail::checked_mul;
    using detail::checked_sub;
    const std::int64_t bb = checked_mul(x.b, y.b);
    return {checked_sub(checked_mul(x.a, y.a), bb),
            checked_sub(checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a)), bb)};
}

/// Field norm a^2 - a b + b^2; equals |a + b w|^2, multiplicative,
/// zero only at zero.
inline std::int64_t norm(const EisensteinInt& x) {
    using detail::checked_mul;
    return detail::checked_add(detail::checked_sub(checked_mul(x.a, x.a), checked_mul(x.a, x.b)),
                               checked_mul(x.b, x.b));
}

/// Complex conjugate: conj(w) = w^2 = -1 - w, so (a, b) -> (a - b, -b).
inline EisensteinInt conj(const EisensteinInt& x) {
    return {detail::checked_sub(x.a, x.b), detail::checked_sub(0, x.b)};
}

inline bool is_unit(const EisensteinInt& x) { return norm(x) == 1; }

/// The six units of Z[w]: 1, w, w^2, -1, -w, -w^2.
inline const std::array<EisensteinInt, 6>& units() {
    static const std::array<EisensteinInt, 6> u = {{
        {1, 0}, {0, 1}, {-1, -1}, {-1, 0}, {0, -1}, {1, 1},
    }};
    return u;
}

/// The unique associate u*x whose argument lies in [0, 60) degrees.
/// Integer criterion: b >= 0 and a > b, or zero. Idempotent.
inline EisensteinInt canonical_associate(const EisensteinInt& x) {
    if (is_zero(x)) return x;
    for (const EisensteinInt& u : units()) {
        const EisensteinInt y = u * x;
        if (y.b >= 0 && y.a > y.b) return y;
    }
    throw std::logic_error("canonical_associate: no associate in sector");
}

struct EisensteinDivMod {
    EisensteinInt q;
    EisensteinInt r;
};

namespace detail {

// Nearest integer to p/d (d > 0), ties to even.
inline std::int64_t round_nearest_even(std::int64_t p, std::int64_t d) {
    std::int64_t f = p / d;
    std::int64_t rem = p % d;
    if (rem < 0) {
        f -= 1;
        rem += d;
    }
    const std::int64_t other = d - rem;
    if (rem < other) return f;
    if (rem > other) return checked_add(f, 1);
    return (f % 2 == 0) ? f : checked_add(f, 1);
}

} // namespace detail

/// Euclidean division: x = q*y + r with norm(r) < norm(y). The quotient is
/// the lattice point nearest to the exact ratio x*conj(y)/norm(y) in the
/// (1, w) basis, coordinates rounded half to even. The nearest-point rule
/// gives norm(r) <= (3/4)*norm(y).
inline EisensteinDivMod divmod(const EisensteinInt& x, const EisensteinInt& y) {
    if (is_zero(y)) throw std::domain_error("Eisenstein division by zero");
    const EisensteinInt num = x * conj(y);
    const std::int64_t den = norm(y);
    const EisensteinInt q{detail::round_nearest_even(num.a, den),
                          detail::round_nearest_even(num.b, den)};
    const EisensteinInt r = x - q * y;
    return {q, r};
}

/// Euclidean gcd, normalized to its canonical associate.
inline EisensteinInt gcd(EisensteinInt x, EisensteinInt y) {
    if (is_zero(x) && is_zero(y)) throw std::domain_error("gcd(0, 0) is undefined");
    while (!is_zero(y)) {
        EisensteinInt r = divmod(x, y).r;
        x = y;
        y = r;
    }
    return canonical_associate(x);
}

/// True iff m divides both coefficients, i.e. x lies in m*Z[w].
inline bool divisible_by_int(const EisensteinInt& x, std::int64_t m) {
    if (m < 1) throw std::domain_error("divisible_by_int: modulus must be positive");
    return x.a % m == 0 && x.b % m == 0;
}

/// Componentwise representative of x mod m with coefficients in [0, m).
inline EisensteinInt mod_int(const EisensteinInt& x, std::int64_t m) {
    if (m < 1) throw std::domain_error("mod_int: modulus must be positive");
    std::int64_t a = x.a % m;
    std::int64_t b = x.b % m;
    if (a < 0) a += m;
    if (b < 0) b += m;
    return {a, b};
}

/// Text form "a", "w", "-w", "b*w" or "a+b*w" / "a-b*w".
inline std::string to_string(const EisensteinInt& x) {
    if (x.b == 0) return std::to_string(x.a);
    std::string wpart;
    if (x.b == 1)
        wpart = "w";
    else if (x.b == -1)
        wpart = "-w";
    else
        wpart = std::to_string(x.b) + "*w";
    if (x.a == 0) return wpart;
    if (x.b > 0) return std::to_string(x.a) + "+" + wpart;
    return std::to_string(x.a) + wpart; // wpart already carries the minus sign
}

} // namespace cy4
