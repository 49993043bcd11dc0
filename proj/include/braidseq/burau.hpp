#pragma once

#include "braidseq/braid.hpp"
#include "braidseq/laurent.hpp"

#include <vector>

namespace braidseq {

// Reduced Burau representation over exact integer Laurent polynomials, and
// the Alexander polynomial it yields through
//   det(burau(w) - I) = Alexander(closure) . (1 - t^n) / (1 - t)
// for a braid word w on n strands whose closure is a knot. This is the
// cross-check route; seifert.hpp computes the same polynomial from a
// spanning surface.

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

inline PolyMatrix poly_identity(int m) {
    PolyMatrix out(static_cast<std::size_t>(m),
                   std::vector<LaurentPoly>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        out[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = LaurentPoly::one();
    return out;
}

inline PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b) {
    const std::size_t m = a.size();
    PolyMatrix out(m, std::vector<LaurentPoly>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (b[k][j].is_zero()) continue;
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    return out;
}

// Fraction-free Bareiss elimination; exact over any integral domain.
inline LaurentPoly poly_det(PolyMatrix m) {
    const int sz = static_cast<int>(m.size());
    if (sz == 0) return LaurentPoly::one();
    int sign = 1;
    LaurentPoly denom = LaurentPoly::one();
    for (int k = 0; k < sz - 1; ++k) {
        if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)].is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < sz; ++r)
                if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return LaurentPoly::zero();
            std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < sz; ++i)
            for (int j = k + 1; j < sz; ++j) {
                LaurentPoly num =
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                        m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                        m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = num.exact_div(denom);
            }
        denom = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    LaurentPoly det = m[static_cast<std::size_t>(sz - 1)][static_cast<std::size_t>(sz - 1)];
    return (sign < 0) ? -det : det;
}

// (n-1)x(n-1) reduced Burau matrix of one generator.
inline PolyMatrix reduced_burau_generator(int n, int letter) {
    const int g = std::abs(letter);
    if (n < 2 || g < 1 || g > n - 1)
        throw std::invalid_argument("burau: generator out of range");
    const int m = n - 1;
    PolyMatrix out = poly_identity(m);
    const LaurentPoly t = LaurentPoly::power(1);
    const LaurentPoly tinv = LaurentPoly::power(-1);
    auto at = [&out](int r, int c) -> LaurentPoly& {
        return out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    };
    if (letter > 0) {
        // row g-1 holds the twisted column block
        at(g - 1, g - 1) = -t;
        if (g > 1) at(g - 1, g - 2) = t;
        if (g < m) at(g - 1, g) = LaurentPoly::one();
    } else {
        at(g - 1, g - 1) = -tinv;
        if (g > 1) at(g - 1, g - 2) = LaurentPoly::one();
        if (g < m) at(g - 1, g) = tinv;
    }
    return out;
}

inline PolyMatrix reduced_burau(const BraidWord& w) {
    PolyMatrix out = poly_identity(w.strands() - 1);
    for (int v : w.letters()) out = poly_mul(out, reduced_burau_generator(w.strands(), v));
    return out;
}

// Alexander polynomial of the closure (which must be a knot), normalized so
// the lowest exponent is 0 and the lowest coefficient is positive.
inline LaurentPoly alexander_via_burau(const BraidWord& w) {
    if (closure_components(w) != 1)
        throw std::invalid_argument("alexander: closure is not a knot");
    const int n = w.strands();
    if (n == 1) return LaurentPoly::one();
    PolyMatrix m = reduced_burau(w);
    for (int i = 0; i < n - 1; ++i)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] -= LaurentPoly::one();
    LaurentPoly det = poly_det(std::move(m));
    LaurentPoly one_minus_t;  // 1 - t
    one_minus_t.add_term(0, 1);
    one_minus_t.add_term(1, -1);
    LaurentPoly one_minus_tn;  // 1 - t^n
    one_minus_tn.add_term(0, 1);
    one_minus_tn.add_term(n, -1);
    return (det * one_minus_t).exact_div(one_minus_tn).canonicalize_up_to_unit();
}

}  // namespace braidseq
