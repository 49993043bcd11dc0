#pragma once

#include "braidseq/braid.hpp"

#include <cstdint>
#include <vector>

namespace braidseq {

// Exact solution of the braid group word problem via Garside left normal
// form. Simple factors are permutation braids stored as permutation tables
// (perm[i] = end position of the strand entering at position i, 0-based).
// The normal form is Delta^e . A_1 ... A_m with every adjacent pair left
// weighted and no factor equal to the identity or to Delta; two words are
// equal in B_n iff their normal forms coincide.

namespace garside_detail {

using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
    Perm p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
}

inline Perm perm_w0(int n) {
    Perm p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = n - 1 - i;
    return p;
}

inline bool is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

inline bool is_w0(const Perm& p) {
    const int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i)
        if (p[static_cast<std::size_t>(i)] != n - 1 - i) return false;
    return true;
}

// conjugation by Delta: tau(A) = Delta^-1 A Delta; an automorphism on simples
inline Perm tau(const Perm& p) {
    const int n = static_cast<int>(p.size());
    Perm r(p.size());
    for (int x = 0; x < n; ++x)
        r[static_cast<std::size_t>(x)] = n - 1 - p[static_cast<std::size_t>(n - 1 - x)];
    return r;
}

// g in start set of B <=> B = sigma_g . B' with B' simple
inline bool in_start_set(const Perm& b, int g) {
    return b[static_cast<std::size_t>(g - 1)] > b[static_cast<std::size_t>(g)];
}

// g in finish set of A <=> A = A' . sigma_g with A' simple
inline bool in_finish_set(const Perm& a, int g) {
    int pos_lo = -1, pos_hi = -1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == g - 1) pos_lo = static_cast<int>(i);
        else if (a[i] == g) pos_hi = static_cast<int>(i);
    }
    return pos_lo > pos_hi;
}

// A <- A . sigma_g (caller guarantees g not in finish set)
inline void append_gen(Perm& a, int g) {
    for (int& v : a) {
        if (v == g - 1) v = g;
        else if (v == g) v = g - 1;
    }
}

// B <- sigma_g^-1 . B (caller guarantees g in start set)
inline void strip_gen(Perm& b, int g) {
    std::swap(b[static_cast<std::size_t>(g - 1)], b[static_cast<std::size_t>(g)]);
}

// Slide crossings from the head of b to the tail of a until the pair is
// left weighted (start(b) contained in finish(a)). Returns true if moved.
inline bool weight_pair(Perm& a, Perm& b) {
    const int n = static_cast<int>(a.size());
    bool moved = false;
    bool again = true;
    while (again) {
        again = false;
        for (int g = 1; g <= n - 1; ++g) {
            if (in_start_set(b, g) && !in_finish_set(a, g)) {
                append_gen(a, g);
                strip_gen(b, g);
                moved = true;
                again = true;
            }
        }
    }
    return moved;
}

}  // namespace garside_detail

struct GarsideNF {
    int strands = 1;
    std::int64_t delta_power = 0;
    std::vector<garside_detail::Perm> simples;

    friend bool operator==(const GarsideNF& a, const GarsideNF& b) {
        return a.strands == b.strands && a.delta_power == b.delta_power && a.simples == b.simples;
    }
    friend bool operator!=(const GarsideNF& a, const GarsideNF& b) { return !(a == b); }

    bool is_trivial() const { return delta_power == 0 && simples.empty(); }

    // canonical positive-letter expansion of each simple factor, for display
    std::vector<std::vector<int>> factor_words() const {
        using namespace garside_detail;
        std::vector<std::vector<int>> out;
        for (Perm p : simples) {
            std::vector<int> word;
            while (!is_identity(p)) {
                for (int g = 1; g < strands; ++g) {
                    if (in_start_set(p, g)) {
                        word.push_back(g);
                        strip_gen(p, g);
                        break;
                    }
                }
            }
            out.push_back(std::move(word));
        }
        return out;
    }
};

inline GarsideNF normal_form(const BraidWord& w) {
    using namespace garside_detail;
    const int n = w.strands();
    GarsideNF nf;
    nf.strands = n;

    // letters -> Delta^e . simples, pushing Delta^-1 factors to the front
    for (int v : w.letters()) {
        const int g = std::abs(v);
        if (v > 0) {
            Perm s = perm_identity(n);
            strip_gen(s, g);  // transposition g-1 <-> g
            nf.simples.push_back(std::move(s));
        } else {
            nf.delta_power -= 1;
            for (Perm& s : nf.simples) s = tau(s);
            Perm m = perm_w0(n);
            append_gen(m, g);  // Delta . sigma_g^-1, still simple
            nf.simples.push_back(std::move(m));
        }
    }

    // normalize: drop identities, promote full twists, left-weight pairs
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < nf.simples.size();) {
            if (is_identity(nf.simples[s])) {
                nf.simples.erase(nf.simples.begin() + static_cast<std::ptrdiff_t>(s));
                changed = true;
            } else if (is_w0(nf.simples[s])) {
                nf.delta_power += 1;
                for (std::size_t r = 0; r < s; ++r) nf.simples[r] = tau(nf.simples[r]);
                nf.simples.erase(nf.simples.begin() + static_cast<std::ptrdiff_t>(s));
                changed = true;
            } else {
                ++s;
            }
        }
        for (std::size_t t = 0; t + 1 < nf.simples.size(); ++t)
            if (weight_pair(nf.simples[t], nf.simples[t + 1])) changed = true;
    }
    return nf;
}

// Exact braid group equality. Requires matching strand counts; words of
// different strand counts are different objects here even when their
// closures agree (compare closures through invariants instead).
inline bool braids_equal(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw std::invalid_argument("braids_equal: strand count mismatch");
    if (writhe(a) != writhe(b)) return false;
    if (permutation_of(a) != permutation_of(b)) return false;
    const BraidWord ra = free_reduce(a), rb = free_reduce(b);
    if (ra.letters() == rb.letters()) return true;
    return normal_form(ra) == normal_form(rb);
}

inline bool is_trivial_braid(const BraidWord& w) {
    return braids_equal(w, BraidWord::identity(w.strands()));
}

}  // namespace braidseq
