#pragma once

// Window functions and the substitution fixed point that generates a pattern
// sequence without evaluating digit counts position by position.
//
// For a proper word w over base b, the window of w covers the positions
//     alpha1 * |v| < j <= alpha2 * |v|,   alpha1 = (w')_b / b^(|w|-1),
//                                          alpha2 = ((w')_b + 1) / b^(|w|-1),
// of a word v. Prepending a digit k to the expansions of 0 .. |v|-1 creates
// exactly one new occurrence of each pattern k·w' inside that window, so the
// sequence satisfies
//     u_{t+1} = u_t · phi_{S_1}(u_t) · ... · phi_{S_{b-1}}(u_t)
// with S_k the first-letter-k part of the properized set, and u_0 the direct
// evaluation of the first b^l terms.

#include "patseq/digits.hpp"
#include "patseq/numeric.hpp"
#include "patseq/weighted_set.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace patseq {

// Window bounds as exact rationals with denominator b^(|w|-1), plus the
// multiplier exponent of the attached weight (1 for the bare window).
struct Window {
    BigRat lower;
    BigRat upper;
    std::uint32_t exponent = 1;
};

inline Window window_of(const Word& w) {
    if (w.empty() || w.has_leading_zero())
        throw std::invalid_argument("window_of: word must be proper and nonempty");
    const BigInt den = big_pow(BigInt(w.base), static_cast<unsigned>(w.size() - 1));
    const BigInt tail_value = word_value(w.tail());
    return Window{BigRat(tail_value, den), BigRat(tail_value + 1, den), 1};
}

inline Window window_of(const Word& w, const BigInt& weight, std::uint32_t modulus) {
    Window win = window_of(w);
    win.exponent = mod_residue(weight, modulus);
    return win;
}

// A word over the m-th roots of unity, stored as exponent residues.
struct ExponentWord {
    std::uint32_t modulus = 2;
    std::vector<std::uint32_t> values;

    std::size_t size() const { return values.size(); }

    friend bool operator==(const ExponentWord&, const ExponentWord&) = default;
};

namespace subst_detail {

// Add each pattern's window contribution over a prefix of a block.
// `block_len` is the full length |v| the windows are scaled to; only the
// first `out_len` positions are produced, reading the same prefix of `v`.
inline void apply_windows_prefix(const WeightedSet& part, const std::uint32_t* v, std::size_t block_len,
                                 std::uint32_t* out, std::size_t out_len) {
    const std::uint32_t m = part.modulus();
    std::vector<std::uint32_t> shift(out_len + 1, 0); // difference array of exponent adds
    for (const auto& [w, c] : part.entries()) {
        const std::size_t span_den = checked_pow(w.base, static_cast<unsigned>(w.size() - 1));
        if (block_len % span_den != 0)
            throw std::invalid_argument("apply_window_set: length not divisible by b^(|w|-1)");
        const std::size_t span = block_len / span_den;
        // 0-based half-open range [lo, hi) of covered positions.
        const BigInt lo_big = word_value(w.tail()) * span;
        if (lo_big >= BigInt(static_cast<std::uint64_t>(out_len))) continue;
        const std::size_t lo = static_cast<std::size_t>(static_cast<std::uint64_t>(lo_big));
        const std::size_t hi = std::min(out_len, lo + span);
        const std::uint32_t add = mod_residue(c, m);
        if (add == 0) continue;
        shift[lo] = (shift[lo] + add) % m;
        shift[hi] = (shift[hi] + m - add) % m;
    }
    std::uint32_t acc = 0;
    for (std::size_t j = 0; j < out_len; ++j) {
        acc = (acc + shift[j]) % m;
        std::uint32_t x = v[j] + acc;
        out[j] = x >= m ? x - m : x;
    }
}

} // namespace subst_detail

// phi_{b,m,S_k} applied to a whole word: position j gains the summed weights
// of the windows that cover it, mod m.
inline ExponentWord apply_window_set(const ProperWeightedSet& part, const ExponentWord& v) {
    const WeightedSet& set = part.set();
    if (set.modulus() != v.modulus)
        throw std::invalid_argument("apply_window_set: modulus mismatch");
    ExponentWord out;
    out.modulus = v.modulus;
    out.values.resize(v.size());
    if (!v.values.empty())
        subst_detail::apply_windows_prefix(set, v.values.data(), v.size(), out.values.data(), v.size());
    return out;
}

// u_0: the first b^l sequence values, evaluated directly from digit counts.
inline ExponentWord seed_word(const WeightedSet& s) {
    const ProperWeightedSet proper = properize(s);
    if (proper.set().empty())
        throw std::domain_error("seed_word: set is empty after properization (constant sequence)");
    const std::size_t l = max_pattern_length(proper.set());
    const std::size_t n0 = checked_pow(s.base(), static_cast<unsigned>(l));
    ExponentWord u;
    u.modulus = s.modulus();
    u.values.reserve(n0);
    for (std::size_t j = 0; j < n0; ++j) u.values.push_back(a_exponent(s, BigInt(j)));
    return u;
}

// The prefix of the substitution fixed point, materialized lazily: each stage
// appends phi_{S_k}(u_t) for k = 1..b-1, truncating blocks past target_len.
inline ExponentWord iterate(const WeightedSet& s, std::size_t target_len) {
    const ProperWeightedSet proper = properize(s);
    if (proper.set().empty())
        throw std::domain_error("iterate: set is empty after properization (constant sequence)");
    const std::uint32_t b = s.base();
    const std::uint32_t m = s.modulus();
    const std::size_t l = max_pattern_length(proper.set());
    const std::size_t n0 = checked_pow(b, static_cast<unsigned>(l));
    const std::vector<ProperWeightedSet> parts = decompose(proper);

    ExponentWord u;
    u.modulus = m;
    u.values.reserve(std::max(target_len, n0));
    for (std::size_t j = 0; j < std::min(n0, target_len); ++j)
        u.values.push_back(a_exponent(s, BigInt(j)));
    if (target_len <= n0) return u;

    std::size_t block_len = n0;
    while (u.values.size() < target_len) {
        for (std::uint32_t k = 1; k < b && u.values.size() < target_len; ++k) {
            const std::size_t out_len = std::min(block_len, target_len - u.values.size());
            const std::size_t base_idx = u.values.size();
            u.values.resize(base_idx + out_len);
            subst_detail::apply_windows_prefix(parts[k - 1].set(), u.values.data(), block_len,
                                               u.values.data() + base_idx, out_len);
        }
        block_len *= b;
    }
    return u;
}

} // namespace patseq
