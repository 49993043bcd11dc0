#pragma once

#include "braidseq/braid.hpp"
#include "braidseq/laurent.hpp"

#include <map>
#include <numeric>
#include <vector>

namespace braidseq {

// Kauffman bracket and Jones polynomial, computed exactly in the
// Temperley-Lieb algebra TL_n: each braid letter maps to
//   sigma_i   ->  A . 1 + A^-1 . e_i
//   sigma_i^-1 -> A^-1 . 1 + A . e_i
// with e_i^2 = delta . e_i and delta = -A^2 - A^-2. States are planar
// pairings of the n top points with the current bottom frontier; the state
// map holds at most Catalan(n) pairings (n = 10 gives 16796), which bounds
// memory. Closing the frontier turns each pairing into delta^(loops-1).

namespace tl_detail {

// pairing over 2n points: 0..n-1 top, n..2n-1 bottom frontier
using Pairing = std::vector<int>;

inline Pairing initial_pairing(int n) {
    Pairing m(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        m[static_cast<std::size_t>(i)] = n + i;
        m[static_cast<std::size_t>(n + i)] = i;
    }
    return m;
}

// compose with the cup-cap generator e_g at the frontier; returns true if a
// closed loop was created (caller multiplies its coefficient by delta)
inline bool apply_cupcap(Pairing& m, int n, int g) {
    const int u = n + g - 1;
    const int v = n + g;
    const int x = m[static_cast<std::size_t>(u)];
    const int y = m[static_cast<std::size_t>(v)];
    if (x == v) return true;  // frontier cup meets the new cap: a loop
    m[static_cast<std::size_t>(x)] = y;
    m[static_cast<std::size_t>(y)] = x;
    m[static_cast<std::size_t>(u)] = v;
    m[static_cast<std::size_t>(v)] = u;
    return false;
}

inline int closure_loops(const Pairing& m, int n) {
    std::vector<bool> seen(m.size(), false);
    int loops = 0;
    for (std::size_t start = 0; start < m.size(); ++start) {
        if (seen[start]) continue;
        ++loops;
        std::size_t x = start;
        while (!seen[x]) {
            seen[x] = true;
            std::size_t y = static_cast<std::size_t>(m[x]);  // pairing arc
            seen[y] = true;
            // closure arc: top i joins bottom n+i
            x = (y < static_cast<std::size_t>(n)) ? y + static_cast<std::size_t>(n)
                                                  : y - static_cast<std::size_t>(n);
        }
    }
    return loops;
}

}  // namespace tl_detail

// A formal sum of TL_n basis diagrams with Laurent coefficients in A.
struct TLElement {
    int strands = 1;
    std::map<tl_detail::Pairing, LaurentPoly> diagrams;
};

inline LaurentPoly bracket_delta() {
    LaurentPoly d;
    d.add_term(2, -1);
    d.add_term(-2, -1);
    return d;  // -A^2 - A^-2
}

// Kauffman bracket of the braid closure, as a Laurent polynomial in A.
inline LaurentPoly kauffman_bracket(const BraidWord& w) {
    using namespace tl_detail;
    const int n = w.strands();
    const LaurentPoly delta = bracket_delta();

    TLElement state;
    state.strands = n;
    state.diagrams[initial_pairing(n)] = LaurentPoly::one();

    for (int v : w.letters()) {
        const int g = std::abs(v);
        const int id_exp = (v > 0) ? 1 : -1;
        std::map<Pairing, LaurentPoly> next;
        for (const auto& [pairing, coeff] : state.diagrams) {
            {  // identity smoothing
                LaurentPoly c = coeff.shifted(1, id_exp);
                auto [it, fresh] = next.try_emplace(pairing, c);
                if (!fresh) it->second += c;
            }
            {  // cup-cap smoothing
                Pairing m = pairing;
                LaurentPoly c = coeff.shifted(1, -id_exp);
                if (apply_cupcap(m, n, g)) c *= delta;
                auto [it, fresh] = next.try_emplace(std::move(m), c);
                if (!fresh) it->second += c;
            }
        }
        // drop cancelled diagrams to keep the state tight
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        state.diagrams = std::move(next);
    }

    LaurentPoly out;
    for (const auto& [pairing, coeff] : state.diagrams) {
        const int loops = closure_loops(pairing, n);
        LaurentPoly term = coeff;
        for (int i = 1; i < loops; ++i) term *= delta;
        out += term;
    }
    return out;
}

// Independent oracle: the same bracket by brute-force enumeration of all 2^c
// smoothing states, counting loops with union-find on the diagram grid.
// Exponential in the letter count; intended for short words only.
inline LaurentPoly kauffman_bracket_enumerated(const BraidWord& w) {
    const int n = w.strands();
    const int c = static_cast<int>(w.length());
    if (c > 24) throw std::invalid_argument("bracket enumeration: word too long");
    const LaurentPoly delta = bracket_delta();

    const int levels = c + 1;
    std::vector<int> parent(static_cast<std::size_t>(levels * n));
    std::vector<int> rank_(parent.size());
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        if (rank_[static_cast<std::size_t>(a)] == rank_[static_cast<std::size_t>(b)])
            ++rank_[static_cast<std::size_t>(a)];
    };
    auto node = [&](int level, int pos) { return level * n + pos; };

    LaurentPoly out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
        std::iota(parent.begin(), parent.end(), 0);
        std::fill(rank_.begin(), rank_.end(), 0);
        int a_exp = 0;
        for (int level = 0; level < c; ++level) {
            const int v = w.letters()[static_cast<std::size_t>(level)];
            const int g = std::abs(v) - 1;  // 0-based position of the crossing
            const bool cupcap = (mask >> level) & 1;
            a_exp += (v > 0 ? 1 : -1) * (cupcap ? -1 : 1);
            for (int x = 0; x < n; ++x) {
                if (x == g || x == g + 1) continue;
                unite(node(level, x), node(level + 1, x));
            }
            if (cupcap) {
                unite(node(level, g), node(level, g + 1));
                unite(node(level + 1, g), node(level + 1, g + 1));
            } else {
                unite(node(level, g), node(level + 1, g));
                unite(node(level, g + 1), node(level + 1, g + 1));
            }
        }
        for (int x = 0; x < n; ++x) unite(node(c, x), node(0, x));
        int loops = 0;
        for (std::size_t i = 0; i < parent.size(); ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) ++loops;
        LaurentPoly term = LaurentPoly::power(a_exp);
        for (int i = 1; i < loops; ++i) term *= delta;
        out += term;
    }
    return out;
}

// Jones polynomial of the braid closure. Exponents are stored on a doubled
// grid (units of t^(1/2)) so that even-component links, whose Jones
// polynomials live in half-integer powers, stay exact; for knots and
// odd-component links every stored exponent is even.
inline LaurentPoly jones_polynomial(const BraidWord& w) {
    const LaurentPoly br = kauffman_bracket(w);
    const int wr = writhe(w);
    // (-A^3)^(-wr) . bracket, then  t^(1/2) = A^-2
    LaurentPoly f = br.shifted((wr % 2 == 0) ? 1 : -1, -3 * static_cast<LaurentPoly::ExpType>(wr));
    LaurentPoly out;
    for (const auto& [e, c] : f.terms()) {
        if (e % 2 != 0) throw std::runtime_error("jones: odd bracket exponent");
        out.add_term(-e / 2, c);
    }
    return out;
}

// Render a doubled-grid polynomial in t: even stored exponents print as
// t^E, odd ones as t^(E/2). Inverse of parse_halfgrid_poly.
inline std::string halfgrid_to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        BigInt mag = neg ? BigInt(-c) : c;
        out += mag.str();
        if (e % 2 == 0) out += "*t^" + std::to_string(e / 2);
        else out += "*t^(" + std::to_string(e) + "/2)";
    }
    return out;
}

inline LaurentPoly parse_halfgrid_poly(const std::string& text) {
    LaurentPoly p;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    auto read_int = [&]() -> long long {
        bool neg = false;
        if (i < text.size() && text[i] == '-') { neg = true; ++i; }
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw std::invalid_argument("poly: expected integer");
        long long v = std::stoll(text.substr(start, i - start));
        return neg ? -v : v;
    };
    skip_ws();
    if (i >= text.size()) throw std::invalid_argument("poly: empty input");
    if (text.compare(i, text.size() - i, "0") == 0) return p;
    bool neg = false;
    if (text[i] == '-') { neg = true; ++i; }
    while (true) {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw std::invalid_argument("poly: expected coefficient");
        BigInt mag(text.substr(start, i - start));
        if (text.compare(i, 3, "*t^") != 0) throw std::invalid_argument("poly: expected *t^");
        i += 3;
        long long e2;
        if (i < text.size() && text[i] == '(') {
            ++i;
            e2 = read_int();
            if (text.compare(i, 3, "/2)") != 0) throw std::invalid_argument("poly: expected /2)");
            i += 3;
        } else {
            e2 = 2 * read_int();
        }
        p.add_term(e2, neg ? -mag : mag);
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] == '+') { neg = false; ++i; }
        else if (text[i] == '-') { neg = true; ++i; }
        else throw std::invalid_argument("poly: expected '+' or '-'");
    }
    return p;
}

// Closed form for the Jones polynomial of the (p,q) torus knot, on the same
// doubled grid and with the same chirality convention as jones_polynomial
// applied to the all-positive toric word (fixed by the (2,3) case).
inline LaurentPoly torus_jones_oracle(int p, int q) {
    if (p < 2 || q < 2) throw std::invalid_argument("torus jones oracle: need p, q >= 2");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("torus jones oracle: p, q must be coprime");
    LaurentPoly num;  // 1 - t^(p+1) - t^(q+1) + t^(p+q)
    num.add_term(0, 1);
    num.add_term(p + 1, -1);
    num.add_term(q + 1, -1);
    num.add_term(p + q, 1);
    LaurentPoly den;  // 1 - t^2
    den.add_term(0, 1);
    den.add_term(2, -1);
    LaurentPoly t_poly = num.exact_div(den)
                             .shifted(1, static_cast<LaurentPoly::ExpType>(p - 1) * (q - 1) / 2);
    return t_poly.stretched(2);  // onto the doubled grid
}

}  // namespace braidseq
