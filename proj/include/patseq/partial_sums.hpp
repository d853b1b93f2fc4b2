#pragma once

// Partial sums S_N = sum_{n<N} a_{b,m,S}(n), kept exact as residue-class
// counts: c_k = #{n < N : e_S(n) = k mod m} determines S_N = sum c_k zeta^k.
// Floating-point magnitudes are derived from the counts only for reporting.

#include "patseq/cyclotomic.hpp"
#include "patseq/enumerate.hpp"
#include "patseq/substitution.hpp"
#include "patseq/weighted_set.hpp"

#include <algorithm>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace patseq {

enum class Method { direct, substitution };

// The first `len` exponents of the sequence. Both engines agree exactly; the
// substitution engine is the fast path for long prefixes.
inline std::vector<std::uint32_t> sequence_exponents(const WeightedSet& s, std::size_t len, Method method) {
    if (method == Method::direct) {
        std::vector<std::uint32_t> out;
        out.reserve(len);
        for_each_exponent(s, 0, len, [&](std::uint32_t e) { out.push_back(e); });
        return out;
    }
    if (properize(s).set().empty()) return std::vector<std::uint32_t>(len, 0);
    return iterate(s, len).values;
}

using ResidueCounts = std::vector<std::uint64_t>;

// S_N from its residue-class counts: reduced in the cyclotomic field first,
// so sums that are exactly zero come out as exactly (0, 0).
inline std::complex<double> counts_to_complex(const CycField& field, const ResidueCounts& counts) {
    return field.to_complex(from_residue_counts(field, counts));
}

struct TraceRow {
    std::uint64_t n = 0;   // checkpoint N
    ResidueCounts counts;  // cumulative over n' < N
    double abs_sum = 0.0;  // |S_N|
    double mean_abs = 0.0; // |S_N| / N
};

// Cumulative residue counts snapshotted at each checkpoint. Checkpoints are
// sorted and deduplicated; each must be at least 1.
inline std::vector<TraceRow> partial_sum_trace(const WeightedSet& s, std::vector<std::uint64_t> checkpoints,
                                               Method method) {
    std::sort(checkpoints.begin(), checkpoints.end());
    checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
    if (checkpoints.empty()) return {};
    if (checkpoints.front() == 0) throw std::invalid_argument("partial_sum_trace: checkpoint must be positive");
    const std::uint64_t last = checkpoints.back();

    const CycField field(s.modulus());
    std::vector<TraceRow> rows;
    rows.reserve(checkpoints.size());
    ResidueCounts counts(s.modulus(), 0);
    std::uint64_t seen = 0;
    std::size_t next = 0;
    const auto consume = [&](std::uint32_t e) {
        ++counts[e];
        ++seen;
        if (seen == checkpoints[next]) {
            TraceRow row;
            row.n = seen;
            row.counts = counts;
            row.abs_sum = std::abs(counts_to_complex(field, counts));
            row.mean_abs = row.abs_sum / static_cast<double>(seen);
            rows.push_back(std::move(row));
            ++next;
        }
    };

    if (method == Method::direct) {
        for_each_exponent(s, 0, last, consume);
    } else {
        const std::vector<std::uint32_t> exps =
            sequence_exponents(s, static_cast<std::size_t>(last), Method::substitution);
        for (std::uint32_t e : exps) consume(e);
    }
    return rows;
}

} // namespace patseq
