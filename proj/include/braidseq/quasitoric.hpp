#pragma once

#include "braidseq/braid.hpp"
#include "braidseq/fingerprint.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace braidseq {

// Two families of quasitoric braid closures with fixed crossing-change
// patterns that trivialize them, giving unknotting-number upper bounds:
//   family A: closure of (s1 s2^-1)^q      on 3 strands, q = 6m + r
//   family B: closure of (s1 s2 s3^-1)^q   on 4 strands, q = 4m + r
// Pattern positions are 1-based letter indices into the written word.

enum class QuasitoricFamily { A, B };

inline char family_letter(QuasitoricFamily f) { return f == QuasitoricFamily::A ? 'A' : 'B'; }

inline QuasitoricFamily parse_family(const std::string& s) {
    if (s == "A" || s == "a") return QuasitoricFamily::A;
    if (s == "B" || s == "b") return QuasitoricFamily::B;
    throw std::invalid_argument("quasitoric family must be A or B");
}

inline BraidWord quasitoric_braid(QuasitoricFamily f, int q) {
    if (q < 0) throw std::invalid_argument("quasitoric braid: need q >= 0");
    std::vector<int> ls;
    if (f == QuasitoricFamily::A) {
        for (int i = 0; i < q; ++i) {
            ls.push_back(1);
            ls.push_back(-2);
        }
        return BraidWord(3, std::move(ls));
    }
    for (int i = 0; i < q; ++i) {
        ls.push_back(1);
        ls.push_back(2);
        ls.push_back(-3);
    }
    return BraidWord(4, std::move(ls));
}

inline CrossingData unknotting_pattern(QuasitoricFamily f, int q) {
    if (q < 0) throw std::invalid_argument("quasitoric pattern: need q >= 0");
    CrossingData data;
    if (f == QuasitoricFamily::A) {
        const int m = q / 6, r = q % 6;
        for (int i = 1; i <= m; ++i)
            for (int off : {2, 5, 8, 11}) data.positions.push_back(12 * (i - 1) + off);
        if (r == 2) data.positions.push_back(12 * m + 2);
        else if (r == 3 || r == 4) {
            data.positions.push_back(12 * m + 2);
            data.positions.push_back(12 * m + 5);
        } else if (r == 5) {
            data.positions.push_back(12 * m + 4);
            data.positions.push_back(12 * m + 9);
        }
    } else {
        const int m = q / 4, r = q % 4;
        for (int i = 1; i <= m; ++i)
            for (int off : {3, 8, 10, 11}) data.positions.push_back(12 * (i - 1) + off);
        if (r == 2) data.positions.push_back(12 * m + 5);
        else if (r == 3) {
            data.positions.push_back(12 * m + 3);
            data.positions.push_back(12 * m + 8);
        }
    }
    data.validate(quasitoric_braid(f, q).length());
    return data;
}

inline long long unknotting_bound(QuasitoricFamily f, int q) {
    if (q < 0) throw std::invalid_argument("quasitoric bound: need q >= 0");
    if (f == QuasitoricFamily::A) {
        const long long m = q / 6;
        switch (q % 6) {
            case 0:
            case 1: return 4 * m;
            case 2: return 4 * m + 1;
            default: return 4 * m + 2;
        }
    }
    return q % 4 == 0 ? q : q - 1;
}

struct QuasitoricResult {
    QuasitoricFamily family = QuasitoricFamily::A;
    int q = 0;
    CrossingData pattern;
    long long bound = 0;
    BraidWord flipped = BraidWord::identity(1);
    bool is_unknot_after_pattern = false;
    KnotFingerprint fp;  // of the flipped word
};

inline QuasitoricResult quasitoric_check(QuasitoricFamily f, int q) {
    QuasitoricResult out;
    out.family = f;
    out.q = q;
    out.pattern = unknotting_pattern(f, q);
    out.bound = unknotting_bound(f, q);
    out.flipped = flip_letters(quasitoric_braid(f, q), out.pattern);
    out.fp = fingerprint(out.flipped);
    out.is_unknot_after_pattern = out.fp.is_unknot();
    return out;
}

inline nlohmann::ordered_json quasitoric_to_json(const QuasitoricResult& r) {
    nlohmann::ordered_json j;
    j["family"] = std::string(1, family_letter(r.family));
    j["q"] = r.q;
    j["pattern"] = r.pattern.positions;
    j["bound"] = r.bound;
    j["is_unknot_after_pattern"] = r.is_unknot_after_pattern;
    j["fingerprint"] = fingerprint_to_json(r.fp);
    return j;
}

}  // namespace braidseq
