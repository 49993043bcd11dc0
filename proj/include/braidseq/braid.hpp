#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidseq {

// A word in the braid group B_n. Letters are nonzero integers: +i stands for
// the generator sigma_i, -i for its inverse, 1 <= i <= strands-1. The empty
// word is the identity braid. Value type; all operations return new words.
class BraidWord {
public:
    BraidWord(int strands, std::vector<int> letters)
        : strands_(strands), letters_(std::move(letters)) {
        if (strands_ < 1) throw std::invalid_argument("braid: strands must be >= 1");
        for (int v : letters_) {
            if (v == 0 || std::abs(v) > strands_ - 1)
                throw std::invalid_argument("braid: letter " + std::to_string(v) +
                                            " out of range for " + std::to_string(strands_) +
                                            " strands");
        }
    }

    static BraidWord identity(int strands) { return BraidWord(strands, {}); }

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }

    friend bool operator==(const BraidWord& a, const BraidWord& b) {
        return a.strands_ == b.strands_ && a.letters_ == b.letters_;
    }
    friend bool operator!=(const BraidWord& a, const BraidWord& b) { return !(a == b); }

    BraidWord operator*(const BraidWord& o) const {
        if (strands_ != o.strands_)
            throw std::invalid_argument("braid: strand count mismatch in product");
        std::vector<int> ls = letters_;
        ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
        return BraidWord(strands_, std::move(ls));
    }

    BraidWord inverse() const {
        std::vector<int> ls(letters_.rbegin(), letters_.rend());
        for (int& v : ls) v = -v;
        return BraidWord(strands_, std::move(ls));
    }

    BraidWord repeated(int times) const {
        if (times < 0) return inverse().repeated(-times);
        std::vector<int> ls;
        ls.reserve(letters_.size() * static_cast<std::size_t>(times));
        for (int i = 0; i < times; ++i) ls.insert(ls.end(), letters_.begin(), letters_.end());
        return BraidWord(strands_, std::move(ls));
    }

    // cyclic rotation w = a.b -> b.a; closure-preserving
    BraidWord rotated(std::size_t k) const {
        if (letters_.empty()) return *this;
        k %= letters_.size();
        std::vector<int> ls(letters_.begin() + static_cast<std::ptrdiff_t>(k), letters_.end());
        ls.insert(ls.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k));
        return BraidWord(strands_, std::move(ls));
    }

    // embed into a larger braid group, same letters
    BraidWord widened(int strands) const {
        if (strands < strands_) throw std::invalid_argument("braid: cannot shrink strands");
        return BraidWord(strands, letters_);
    }

private:
    int strands_;
    std::vector<int> letters_;
};

// An ordered set of 1-based letter positions in some braid word.
struct CrossingData {
    std::vector<int> positions;

    void validate(std::size_t word_length) const {
        int prev = 0;
        for (int p : positions) {
            if (p <= prev)
                throw std::invalid_argument("crossing data: positions must be strictly increasing");
            if (static_cast<std::size_t>(p) > word_length)
                throw std::invalid_argument("crossing data: position " + std::to_string(p) +
                                            " beyond word length " + std::to_string(word_length));
            prev = p;
        }
    }
};

// Text format: whitespace-separated signed generator indices, e.g. "1 1 1"
// or "1 -2 1 -2". Empty input parses to the identity braid.
inline BraidWord parse_braid(const std::string& text, int strands) {
    std::vector<int> letters;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
        if (i >= text.size()) break;
        bool neg = false;
        if (text[i] == '-') { neg = true; ++i; }
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start) throw std::invalid_argument("braid: bad token in \"" + text + "\"");
        int v = std::stoi(text.substr(start, i - start));
        letters.push_back(neg ? -v : v);
    }
    return BraidWord(strands, std::move(letters));  // range checks in ctor
}

inline std::string format_braid(const BraidWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.letters().size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w.letters()[i]);
    }
    return out;
}

inline std::string format_positions(const std::vector<int>& positions) {
    std::string out;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(positions[i]);
    }
    return out;
}

// Cancel adjacent inverse pairs until none remain.
inline BraidWord free_reduce(const BraidWord& w) {
    std::vector<int> stack;
    for (int v : w.letters()) {
        if (!stack.empty() && stack.back() == -v) stack.pop_back();
        else stack.push_back(v);
    }
    return BraidWord(w.strands(), std::move(stack));
}

// Underlying permutation: perm[i] is the 0-based end position of the strand
// that starts at position i (letters applied left to right).
inline std::vector<int> permutation_of(const BraidWord& w) {
    std::vector<int> perm(static_cast<std::size_t>(w.strands()));
    std::iota(perm.begin(), perm.end(), 0);
    for (int v : w.letters()) {
        const int g = std::abs(v) - 1;
        for (int& p : perm) {
            if (p == g) p = g + 1;
            else if (p == g + 1) p = g;
        }
    }
    return perm;
}

// Number of link components of the braid closure = cycles of the permutation.
inline int closure_components(const BraidWord& w) {
    std::vector<int> perm = permutation_of(w);
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
    }
    return cycles;
}

inline int writhe(const BraidWord& w) {
    int s = 0;
    for (int v : w.letters()) s += (v > 0) ? 1 : -1;
    return s;
}

// Invert the sign of the letters at the given 1-based positions (a crossing
// change per position). Word length and strand count are unchanged.
inline BraidWord flip_letters(const BraidWord& w, const CrossingData& data) {
    data.validate(w.length());
    std::vector<int> ls = w.letters();
    for (int p : data.positions) ls[static_cast<std::size_t>(p - 1)] = -ls[static_cast<std::size_t>(p - 1)];
    return BraidWord(w.strands(), std::move(ls));
}

inline BraidWord flip_letters(const BraidWord& w, std::vector<int> positions) {
    return flip_letters(w, CrossingData{std::move(positions)});
}

// ascending run sigma_lo sigma_lo+1 ... sigma_hi; empty when lo > hi
inline std::vector<int> ascending_run(int lo, int hi) {
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i) out.push_back(i);
    return out;
}

// Braid-trivial word on n+1 strands of length n(n+1): block b (1-based,
// b = 1..n+1) is sigma_1..sigma_{n+1-b} followed by the inverses of
// sigma_{n+2-b}..sigma_n; the closure is the (n+1)-component unlink and the
// word itself reduces to the identity braid.
inline BraidWord trivial_braid_word(int n) {
    if (n < 1) throw std::invalid_argument("trivial_braid_word: n must be >= 1");
    std::vector<int> ls;
    ls.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1));
    for (int b = 1; b <= n + 1; ++b) {
        for (int i = 1; i <= n + 1 - b; ++i) ls.push_back(i);
        for (int i = n + 2 - b; i <= n; ++i) ls.push_back(-i);
    }
    return BraidWord(n + 1, std::move(ls));
}

}  // namespace braidseq
