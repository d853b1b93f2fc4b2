#pragma once

// Bulk evaluation of e_{b,S}(n) mod m over integer ranges.
//
// A fixed-width digit odometer replaces per-n expansion work: the buffer
// holds the digits of n left-padded with max|w| - 1 zeros. Extra leading
// zeros beyond a pattern's own |w| - 1 never change its count, because every
// pattern contains a nonzero digit and so cannot match inside the zero run.

#include "patseq/digits.hpp"
#include "patseq/numeric.hpp"
#include "patseq/weighted_set.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace patseq {

// Calls f(e_{b,S}(n) mod m) for n = n_begin .. n_end-1 in order. Weights are
// reduced mod m up front; entries divisible by m drop out.
template <typename F>
void for_each_exponent(const WeightedSet& s, std::uint64_t n_begin, std::uint64_t n_end, F&& f) {
    if (n_begin >= n_end) return;
    const std::uint32_t b = s.base();
    const std::uint32_t m = s.modulus();

    struct Pat {
        std::vector<Digit> digits;
        std::uint32_t weight;
    };
    std::vector<Pat> pats;
    std::size_t max_len = 1;
    for (const auto& [w, c] : s.entries()) {
        const std::uint32_t r = mod_residue(c, m);
        if (r == 0) continue;
        max_len = std::max(max_len, w.size());
        pats.push_back(Pat{w.digits, r});
    }

    std::size_t width = 1;
    for (std::uint64_t v = (n_end - 1) / b; v != 0; v /= b) ++width;
    std::vector<Digit> buf(max_len - 1 + width, 0);
    {
        std::uint64_t v = n_begin;
        for (std::size_t i = buf.size(); v != 0;) {
            buf[--i] = static_cast<Digit>(v % b);
            v /= b;
        }
    }

    for (std::uint64_t n = n_begin;; ++n) {
        std::uint64_t acc = 0;
        for (const Pat& p : pats) acc += p.weight * count_in_buffer(p.digits, buf);
        f(static_cast<std::uint32_t>(acc % m));
        if (n + 1 == n_end) break;
        for (std::size_t i = buf.size(); i-- > 0;) {
            if (++buf[i] < b) break;
            buf[i] = 0;
        }
    }
}

} // namespace patseq
