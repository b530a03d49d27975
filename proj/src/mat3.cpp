#include "cy4/mat3.hpp"

#include <stdexcept>
#include <utility>

namespace cy4 {

Mat3 operator+(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (std::size_t i = 0; i < 9; ++i) r.e[i] = x.e[i] + y.e[i];
    return r;
}

Mat3 operator-(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (std::size_t i = 0; i < 9; ++i) r.e[i] = x.e[i] - y.e[i];
    return r;
}

Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            EisensteinInt s;
            for (int k = 0; k < 3; ++k) s = s + x.at(i, k) * y.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

Mat3 operator*(const EisensteinInt& s, const Mat3& x) {
    Mat3 r;
    for (std::size_t i = 0; i < 9; ++i) r.e[i] = s * x.e[i];
    return r;
}

Mat3 pow(const Mat3& x, int k) {
    if (k < 0) throw std::domain_error("matrix pow: negative exponent");
    Mat3 acc = Mat3::identity();
    Mat3 base = x;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Mat3 transpose(const Mat3& x) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = x.at(j, i);
    return r;
}

EisensteinInt det(const Mat3& x) {
    EisensteinInt d;
    d = d + x.at(0, 0) * (x.at(1, 1) * x.at(2, 2) - x.at(1, 2) * x.at(2, 1));
    d = d - x.at(0, 1) * (x.at(1, 0) * x.at(2, 2) - x.at(1, 2) * x.at(2, 0));
    d = d + x.at(0, 2) * (x.at(1, 0) * x.at(2, 1) - x.at(1, 1) * x.at(2, 0));
    return d;
}

EisensteinInt trace(const Mat3& x) { return x.at(0, 0) + x.at(1, 1) + x.at(2, 2); }

CharPoly char_poly(const Mat3& x) {
    EisensteinInt c2;
    c2 = c2 + (x.at(1, 1) * x.at(2, 2) - x.at(1, 2) * x.at(2, 1));
    c2 = c2 + (x.at(0, 0) * x.at(2, 2) - x.at(0, 2) * x.at(2, 0));
    c2 = c2 + (x.at(0, 0) * x.at(1, 1) - x.at(0, 1) * x.at(1, 0));
    return CharPoly{trace(x), c2, det(x)};
}

namespace {

// Elementary row/column operations that keep U*M*V = D intact. Row ops act on
// D and U together, column ops on D and V.
struct SnfWork {
    Mat3 U, D, V;

    void swap_rows(int i, int j) {
        for (int c = 0; c < 3; ++c) {
            std::swap(D.at(i, c), D.at(j, c));
            std::swap(U.at(i, c), U.at(j, c));
        }
    }

    void swap_cols(int i, int j) {
        for (int r = 0; r < 3; ++r) {
            std::swap(D.at(r, i), D.at(r, j));
            std::swap(V.at(r, i), V.at(r, j));
        }
    }

    // row i -= q * row j
    void row_sub(int i, int j, const EisensteinInt& q) {
        for (int c = 0; c < 3; ++c) {
            D.at(i, c) = D.at(i, c) - q * D.at(j, c);
            U.at(i, c) = U.at(i, c) - q * U.at(j, c);
        }
    }

    // col i -= q * col j
    void col_sub(int i, int j, const EisensteinInt& q) {
        for (int r = 0; r < 3; ++r) {
            D.at(r, i) = D.at(r, i) - q * D.at(r, j);
            V.at(r, i) = V.at(r, i) - q * V.at(r, j);
        }
    }

    void scale_row(int i, const EisensteinInt& u) {
        for (int c = 0; c < 3; ++c) {
            D.at(i, c) = u * D.at(i, c);
            U.at(i, c) = u * U.at(i, c);
        }
    }

    // row i += row j
    void row_add(int i, int j) {
        for (int c = 0; c < 3; ++c) {
            D.at(i, c) = D.at(i, c) + D.at(j, c);
            U.at(i, c) = U.at(i, c) + U.at(j, c);
        }
    }
};

// Pivot of minimal norm in the trailing block starting at (k, k); ties go to
// the smallest (row, col). Returns false when the block is all zero.
bool find_pivot(const SnfWork& w, int k, int& pr, int& pc) {
    bool found = false;
    std::int64_t best = 0;
    for (int r = k; r < 3; ++r)
        for (int c = k; c < 3; ++c) {
            const EisensteinInt& x = w.D.at(r, c);
            if (is_zero(x)) continue;
            std::int64_t n = norm(x);
            if (!found || n < best) {
                found = true;
                best = n;
                pr = r;
                pc = c;
            }
        }
    return found;
}

} // namespace

SnfResult smith_normal_form(const Mat3& m) {
    SnfWork w{Mat3::identity(), m, Mat3::identity()};

    for (int k = 0; k < 3; ++k) {
        int pr = 0, pc = 0;
        if (!find_pivot(w, k, pr, pc)) break;
        w.swap_rows(k, pr);
        w.swap_cols(k, pc);

        // Kill the rest of row k and column k. Division may leave nonzero
        // remainders of smaller norm, so repeat until clean; norms strictly
        // decrease, so this terminates.
        for (;;) {
            bool dirty = false;
            for (int r = k + 1; r < 3; ++r) {
                if (is_zero(w.D.at(r, k))) continue;
                auto [q, rem] = divmod(w.D.at(r, k), w.D.at(k, k));
                w.row_sub(r, k, q);
                if (!is_zero(rem)) {
                    w.swap_rows(k, r);
                    dirty = true;
                }
            }
            for (int c = k + 1; c < 3; ++c) {
                if (is_zero(w.D.at(k, c))) continue;
                auto [q, rem] = divmod(w.D.at(k, c), w.D.at(k, k));
                w.col_sub(c, k, q);
                if (!is_zero(rem)) {
                    w.swap_cols(k, c);
                    dirty = true;
                }
            }
            if (!dirty) break;
        }
    }

    // Enforce the divisibility chain d1 | d2 | d3. If d_k does not divide
    // d_{k+1}, folding row k+1 into row k puts d_{k+1} next to d_k, and the
    // elimination pass replaces d_k by their gcd.
    for (;;) {
        bool fixed = true;
        for (int k = 0; k < 2; ++k) {
            const EisensteinInt& a = w.D.at(k, k);
            const EisensteinInt& b = w.D.at(k + 1, k + 1);
            if (is_zero(b)) continue;
            if (is_zero(a)) {
                // A zero before a nonzero entry: swap them forward.
                w.swap_rows(k, k + 1);
                w.swap_cols(k, k + 1);
                fixed = false;
                continue;
            }
            if (is_zero(divmod(b, a).r)) continue;
            w.row_add(k, k + 1);
            for (;;) {
                auto [q, rem] = divmod(w.D.at(k, k + 1), w.D.at(k, k));
                w.col_sub(k + 1, k, q);
                if (is_zero(rem)) break;
                w.swap_cols(k, k + 1);
            }
            // The column op may have reintroduced an off-diagonal in row k+1.
            for (;;) {
                if (is_zero(w.D.at(k + 1, k))) break;
                auto [q, rem] = divmod(w.D.at(k + 1, k), w.D.at(k, k));
                w.row_sub(k + 1, k, q);
                if (is_zero(rem)) {
                    break;
                }
                w.swap_rows(k, k + 1);
            }
            fixed = false;
        }
        if (fixed) break;
    }

    // Normalize each nonzero diagonal entry to its canonical associate by a
    // unit row scaling (units have unit inverse, so U stays invertible).
    for (int k = 0; k < 3; ++k) {
        EisensteinInt d = w.D.at(k, k);
        if (is_zero(d)) continue;
        EisensteinInt target = canonical_associate(d);
        if (target == d) continue;
        for (const EisensteinInt& u : units()) {
            if (u * d == target) {
                w.scale_row(k, u);
                break;
            }
        }
    }

    return SnfResult{w.U, w.D, w.V};
}

std::vector<EisensteinInt> invariant_factors(const SnfResult& snf) {
    std::vector<EisensteinInt> out;
    for (int k = 0; k < 3; ++k)
        if (!is_zero(snf.D.at(k, k))) out.push_back(snf.D.at(k, k));
    return out;
}

int snf_rank(const SnfResult& snf) { return static_cast<int>(invariant_factors(snf).size()); }

Mat6 Mat6::identity() {
    Mat6 m;
    for (int i = 0; i < 6; ++i) m.at(i, i) = 1;
    return m;
}

Mat6 operator*(const Mat6& x, const Mat6& y) {
    Mat6 r;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::int64_t s = 0;
            for (int k = 0; k < 6; ++k)
                s = detail::checked_add(s, detail::checked_mul(x.at(i, k), y.at(k, j)));
            r.at(i, j) = s;
        }
    return r;
}

Mat6 integer_embedding(const Mat3& x) {
    Mat6 m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            const EisensteinInt& z = x.at(r, c);
            m.at(2 * r, 2 * c) = z.a;
            m.at(2 * r, 2 * c + 1) = -z.b;
            m.at(2 * r + 1, 2 * c) = z.b;
            m.at(2 * r + 1, 2 * c + 1) = detail::checked_sub(z.a, z.b);
        }
    return m;
}

std::optional<int> element_order(const Mat3& x) {
    if (!is_unit(det(x))) throw std::domain_error("element_order: determinant is not a unit");

    // Finite order forces all eigenvalues onto the unit circle, so |tr| <= 3
    // and |c2| <= 3. Anything outside that box has infinite order.
    CharPoly cp = char_poly(x);
    if (norm(cp.tr) > 9 || norm(cp.c2) > 9) return std::nullopt;

    constexpr int cutoff = 60;
    const Mat6 id = Mat6::identity();
    Mat6 m = integer_embedding(x);
    try {
        Mat6 acc = m;
        for (int k = 1; k <= cutoff; ++k) {
            if (acc == id) return k;
            acc = acc * m;
        }
    } catch (const std::overflow_error&) {
        // Entries blowing past 64 bits certainly rules out finite order.
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace cy4
