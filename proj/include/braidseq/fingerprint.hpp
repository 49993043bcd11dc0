#pragma once

#include "braidseq/bracket.hpp"
#include "braidseq/braid.hpp"
#include "braidseq/laurent.hpp"
#include "braidseq/seifert.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace braidseq {

// Bundle of exact invariants of a braid closure, used to certify unknotting
// claims and to key the catalog. Jones is always present (stored on the
// doubled exponent grid, see bracket.hpp); the remaining fields are computed
// only when the closure is a knot.
struct KnotFingerprint {
    int components = 1;
    LaurentPoly jones;                      // doubled grid
    std::optional<LaurentPoly> alexander;   // canonical: lowest exp 0, positive lead
    std::optional<BigInt> determinant;
    std::optional<int> signature;

    bool operator==(const KnotFingerprint& o) const {
        return components == o.components && jones == o.jones && alexander == o.alexander &&
               determinant == o.determinant && signature == o.signature;
    }
    bool operator!=(const KnotFingerprint& o) const { return !(*this == o); }

    // fingerprint of the mirror image: Jones reverses, signature negates
    KnotFingerprint mirrored() const {
        KnotFingerprint out = *this;
        out.jones = jones.mirrored();
        if (signature) out.signature = -*signature;
        return out;
    }

    bool is_unknot() const {
        return components == 1 && jones.is_one() && alexander && alexander->is_one();
    }
};

inline KnotFingerprint fingerprint(const BraidWord& w) {
    KnotFingerprint fp;
    fp.components = closure_components(w);
    fp.jones = jones_polynomial(w);
    if (fp.components == 1) {
        fp.alexander = alexander_polynomial(w);
        const SignatureResult sr = signature_and_determinant(w);
        fp.determinant = sr.determinant;
        fp.signature = sr.signature;
    }
    return fp;
}

// Certified unknot test: trivial Jones and Alexander polynomials of a
// one-component closure. No knot with at most 12 crossings shares both
// trivial polynomials, which covers everything this library constructs.
inline bool is_unknot(const BraidWord& w) { return fingerprint(w).is_unknot(); }

// The closure of the n-strand identity braid: an n-component unlink.
inline KnotFingerprint unlink_fingerprint(int n) {
    if (n < 1) throw std::invalid_argument("unlink: need n >= 1");
    return fingerprint(BraidWord::identity(n));
}

inline nlohmann::ordered_json fingerprint_to_json(const KnotFingerprint& fp) {
    nlohmann::ordered_json j;
    j["components"] = fp.components;
    j["jones"] = halfgrid_to_string(fp.jones);
    if (fp.alexander) j["alexander"] = fp.alexander->to_string();
    if (fp.determinant) {
        const long long v = fp.determinant->convert_to<long long>();
        if (BigInt(v) != *fp.determinant)
            throw std::overflow_error("fingerprint: determinant exceeds JSON integer range");
        j["determinant"] = v;
    }
    if (fp.signature) j["signature"] = *fp.signature;
    return j;
}

inline KnotFingerprint fingerprint_from_json(const nlohmann::json& j) {
    KnotFingerprint fp;
    fp.components = j.at("components").get<int>();
    fp.jones = parse_halfgrid_poly(j.at("jones").get<std::string>());
    if (j.contains("alexander"))
        fp.alexander = LaurentPoly::parse(j.at("alexander").get<std::string>());
    if (j.contains("determinant")) fp.determinant = BigInt(j.at("determinant").get<long long>());
    if (j.contains("signature")) fp.signature = j.at("signature").get<int>();
    return fp;
}

}  // namespace braidseq
