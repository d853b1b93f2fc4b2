#pragma once

// Base-b digit expansions and exact occurrence counting of digit patterns.
//
// An integer's expansion is conceptually padded with infinitely many leading
// zeros. A pattern is a finite digit word that contains at least one nonzero
// digit, so every occurrence of it must touch the finite part of the
// expansion: padding with exactly |w|-1 zeros is enough to catch them all.

#include "patseq/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace patseq {

using Digit = std::uint32_t;

// A finite word of base-b digits, most significant first.
struct Word {
    std::uint32_t base = 2;
    std::vector<Digit> digits;

    Word() = default;

    Word(std::uint32_t base_, std::vector<Digit> digits_) : base(base_), digits(std::move(digits_)) {
        if (base < 2) throw std::invalid_argument("Word: base must be at least 2");
        for (Digit d : digits)
            if (d >= base) throw std::invalid_argument("Word: digit out of range for base");
    }

    // Parse a digit string like "0021"; only meaningful for base <= 10.
    static Word parse(std::string_view text, std::uint32_t base_) {
        if (base_ < 2 || base_ > 10)
            throw std::invalid_argument("Word::parse: digit strings require 2 <= base <= 10");
        std::vector<Digit> ds;
        ds.reserve(text.size());
        for (char ch : text) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("Word::parse: invalid digit character");
            ds.push_back(static_cast<Digit>(ch - '0'));
        }
        return Word(base_, std::move(ds));
    }

    std::size_t size() const { return digits.size(); }
    bool empty() const { return digits.empty(); }

    // A valid pattern: nonempty and not all zeros.
    bool is_pattern() const {
        return !digits.empty() && std::any_of(digits.begin(), digits.end(), [](Digit d) { return d != 0; });
    }

    bool has_leading_zero() const { return !digits.empty() && digits.front() == 0; }

    // The word w' = w[2..|w|] (everything after the first letter).
    Word tail() const {
        if (digits.empty()) throw std::invalid_argument("Word::tail: empty word");
        return Word(base, std::vector<Digit>(digits.begin() + 1, digits.end()));
    }

    std::string to_string() const {
        std::string out;
        if (base <= 10) {
            for (Digit d : digits) out.push_back(static_cast<char>('0' + d));
        } else {
            for (std::size_t i = 0; i < digits.size(); ++i) {
                if (i) out.push_back('.');
                out += std::to_string(digits[i]);
            }
        }
        return out;
    }

    friend bool operator==(const Word&, const Word&) = default;
    // Lexicographic digit order; words compared within one set share a base.
    friend bool operator<(const Word& a, const Word& b) { return a.digits < b.digits; }
};

// Most-significant-first digits of n in base b; empty for n = 0.
inline Word to_digits(const BigInt& n, std::uint32_t base) {
    if (base < 2) throw std::invalid_argument("to_digits: base must be at least 2");
    if (n < 0) throw std::invalid_argument("to_digits: negative value");
    std::vector<Digit> ds;
    BigInt v = n;
    while (v != 0) {
        ds.push_back(static_cast<Digit>(v % base));
        v /= base;
    }
    std::reverse(ds.begin(), ds.end());
    return Word(base, std::move(ds));
}

// (w)_b = sum_i w[i] * b^(|w|-i); the empty word has value 0.
inline BigInt word_value(const Word& w) {
    BigInt v = 0;
    for (Digit d : w.digits) {
        v *= w.base;
        v += d;
    }
    return v;
}

// The canonical expansion of a nonnegative integer, padded on demand.
struct Expansion {
    BigInt value;
    std::uint32_t base = 2;
    std::vector<Digit> digits; // canonical, no leading zeros; empty for 0

    static Expansion of(const BigInt& n, std::uint32_t base_) {
        Expansion e;
        e.value = n;
        e.base = base_;
        e.digits = to_digits(n, base_).digits;
        return e;
    }

    // Digits with `zeros` extra leading zeros prepended.
    std::vector<Digit> padded(std::size_t zeros) const {
        std::vector<Digit> out(zeros, 0);
        out.insert(out.end(), digits.begin(), digits.end());
        return out;
    }
};

// Occurrences of `pattern` anywhere in `buffer` (possibly overlapping).
// The buffer is expected to already carry enough leading-zero padding; since a
// pattern contains a nonzero digit, extra padding never adds occurrences.
inline std::uint64_t count_in_buffer(std::span<const Digit> pattern, std::span<const Digit> buffer) {
    const std::size_t k = pattern.size();
    if (k == 0 || buffer.size() < k) return 0;
    std::uint64_t count = 0;
    for (std::size_t start = 0; start + k <= buffer.size(); ++start) {
        bool match = true;
        for (std::size_t i = 0; i < k; ++i) {
            if (buffer[start + i] != pattern[i]) {
                match = false;
                break;
            }
        }
        if (match) ++count;
    }
    return count;
}

// e_{b,w}(n): occurrences of the pattern w in the expansion of n padded with
// exactly |w|-1 leading zeros.
inline std::uint64_t count_occurrences(const Word& w, const BigInt& n) {
    if (!w.is_pattern())
        throw std::invalid_argument("count_occurrences: pattern must contain a nonzero digit");
    const Expansion e = Expansion::of(n, w.base);
    const std::vector<Digit> buf = e.padded(w.size() - 1);
    return count_in_buffer(w.digits, buf);
}

} // namespace patseq
