#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace braidseq {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in one variable with exact integer coefficients.
// Coefficients are arbitrary precision, exponents are 64-bit (checked).
// Value type, safe to copy and share across threads.
class LaurentPoly {
public:
    using ExpType = std::int64_t;
    using Terms = std::map<ExpType, BigInt>;

    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }

    static LaurentPoly constant(BigInt c) { return monomial(std::move(c), 0); }

    static LaurentPoly one() { return constant(1); }

    static LaurentPoly monomial(BigInt c, ExpType e) {
        LaurentPoly p;
        if (c != 0) p.terms_[e] = std::move(c);
        return p;
    }

    // t^e
    static LaurentPoly power(ExpType e) { return monomial(1, e); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }

    const Terms& terms() const { return terms_; }

    BigInt coeff(ExpType e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    ExpType min_exp() const {
        require_nonzero("min_exp");
        return terms_.begin()->first;
    }

    ExpType max_exp() const {
        require_nonzero("max_exp");
        return terms_.rbegin()->first;
    }

    void add_term(ExpType e, const BigInt& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(checked_exp_add(ea, eb), ca * cb);
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // multiply by c * t^e
    LaurentPoly shifted(const BigInt& c, ExpType e) const {
        LaurentPoly r;
        if (c == 0) return r;
        for (const auto& [ex, cx] : terms_) r.terms_[checked_exp_add(ex, e)] = cx * c;
        return r;
    }

    // substitute t -> t^-1
    LaurentPoly mirrored() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[-e] = c;
        return r;
    }

    // substitute t -> t^k, k != 0
    LaurentPoly stretched(ExpType k) const {
        if (k == 0) throw std::invalid_argument("laurent: stretch by zero");
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[checked_exp_mul(e, k)] = c;
        return r;
    }

    BigInt eval(const BigInt& x) const {
        // Laurent: negative exponents need x = +-1; that is the only use here.
        BigInt acc = 0;
        for (const auto& [e, c] : terms_) {
            if (x == 1) {
                acc += c;
            } else if (x == -1) {
                acc += (e % 2 == 0) ? c : -c;
            } else if (e < 0) {
                throw std::invalid_argument("laurent: eval with negative exponent at |x| != 1");
            } else {
                BigInt px = 1;
                for (ExpType i = 0; i < e; ++i) px *= x;
                acc += c * px;
            }
        }
        return acc;
    }

    // Exact division: returns q with *this == q * d, throws if no such q exists.
    LaurentPoly exact_div(const LaurentPoly& d) const {
        if (d.is_zero()) throw std::invalid_argument("laurent: division by zero");
        if (is_zero()) return LaurentPoly();
        LaurentPoly rem = *this;
        LaurentPoly q;
        const ExpType dmax = d.max_exp();
        const BigInt& dlead = d.terms_.rbegin()->second;
        while (!rem.is_zero()) {
            const ExpType rmax = rem.max_exp();
            const BigInt& rlead = rem.terms_.rbegin()->second;
            if (rlead % dlead != 0) throw std::runtime_error("laurent: inexact division");
            BigInt c = rlead / dlead;
            ExpType e = rmax - dmax;
            q.add_term(e, c);
            rem -= d.shifted(c, e);
            if (!rem.is_zero() && rem.max_exp() >= rmax)
                throw std::runtime_error("laurent: division failed to reduce");
        }
        return q;
    }

    // Canonical representative of the +-t^k unit orbit: lowest exponent 0,
    // lowest-degree coefficient positive. Errors on zero input.
    LaurentPoly canonicalize_up_to_unit() const {
        require_nonzero("canonicalize_up_to_unit");
        LaurentPoly r;
        const ExpType lo = min_exp();
        const bool flip = terms_.begin()->second < 0;
        for (const auto& [e, c] : terms_) r.terms_[e - lo] = flip ? -c : c;
        return r;
    }

    // True when the two polynomials agree up to multiplication by +-t^k.
    static bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
        return a.canonicalize_up_to_unit() == b.canonicalize_up_to_unit();
    }

    // Textual form, e.g. "-1*t^-4 + 1*t^-3 + 1*t^-1". Terms ascend by
    // exponent; the sign lives in the separator (leading '-' on the first
    // term); zero prints as "0". Round-trips through parse().
    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool neg = c < 0;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            BigInt mag = neg ? BigInt(-c) : c;
            out += mag.str();
            out += "*" + var + "^" + std::to_string(e);
        }
        return out;
    }

    static LaurentPoly parse(const std::string& text, const std::string& var = "t") {
        LaurentPoly p;
        std::size_t i = 0;
        auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
        skip_ws();
        if (i >= text.size()) throw std::invalid_argument("laurent: empty input");
        if (text.compare(i, text.size() - i, "0") == 0) return p;
        bool neg = false;
        if (text[i] == '-') { neg = true; ++i; }
        while (true) {
            skip_ws();
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw std::invalid_argument("laurent: expected coefficient");
            BigInt mag(text.substr(start, i - start));
            if (text.compare(i, 1 + var.size() + 1, "*" + var + "^") != 0)
                throw std::invalid_argument("laurent: expected *" + var + "^");
            i += 1 + var.size() + 1;
            bool eneg = false;
            if (i < text.size() && text[i] == '-') { eneg = true; ++i; }
            start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw std::invalid_argument("laurent: expected exponent");
            ExpType e = std::stoll(text.substr(start, i - start));
            p.add_term(eneg ? -e : e, neg ? -mag : mag);
            skip_ws();
            if (i >= text.size()) break;
            if (text[i] == '+') { neg = false; ++i; }
            else if (text[i] == '-') { neg = true; ++i; }
            else throw std::invalid_argument("laurent: expected '+' or '-'");
        }
        return p;
    }

    static ExpType checked_exp_add(ExpType a, ExpType b) {
        ExpType r;
        if (__builtin_add_overflow(a, b, &r))
            throw std::overflow_error("laurent: exponent overflow");
        return r;
    }

    static ExpType checked_exp_mul(ExpType a, ExpType b) {
        ExpType r;
        if (__builtin_mul_overflow(a, b, &r))
            throw std::overflow_error("laurent: exponent overflow");
        return r;
    }

private:
    void require_nonzero(const char* what) const {
        if (terms_.empty())
            throw std::invalid_argument(std::string("laurent: ") + what + " of zero polynomial");
    }

    Terms terms_;
};

}  // namespace braidseq
