#pragma once

// The b^l x b^l transfer matrix M_{b,m,S} acting on block-sum vectors, and
// the exact decision procedure for the vanishing-mean property:
//
//     (1/N) sum_{n<N} a_{b,m,S}(n) -> 0
//       iff  b is not an eigenvalue of M, or M^(b-1) A(0) = 0.
//
// Rows come in b bands: row s*b^(l-1) + r (1-based) carries the slice
// V_s[(r-1)b+1 .. (r-1)b+b] in columns (r-1)b+1 .. (r-1)b+b, where V_0 is
// all ones and V_k = phi_{S_k}(V_0). Both tests run in exact cyclotomic
// arithmetic; no floating point enters the decision.

#include "patseq/cyclotomic.hpp"
#include "patseq/enumerate.hpp"
#include "patseq/numeric.hpp"
#include "patseq/substitution.hpp"
#include "patseq/weighted_set.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace patseq {

struct TransferMatrix {
    std::uint32_t base = 2;
    std::uint32_t modulus = 2;
    std::size_t l = 1;
    std::size_t dim = 2;              // b^l
    std::vector<std::uint32_t> exps;  // dim x base, row-major: the band entries

    // First column of row's nonzero band (0-based indices).
    std::size_t band_col(std::size_t row) const { return (row % (dim / base)) * base; }

    // Exponent of the (row, col) entry when it lies in the band; zero entries
    // return nothing.
    std::optional<std::uint32_t> exponent_at(std::size_t row, std::size_t col) const {
        const std::size_t c0 = band_col(row);
        if (col < c0 || col >= c0 + base) return std::nullopt;
        return exps[row * base + (col - c0)];
    }
};

// Block sums A(t): entry j (1-based) is the exact sum of a(n) over the j-th
// block of b^t consecutive integers. At t = 0 each entry is one root of unity.
struct BlockSumVector {
    std::size_t stage = 0;
    std::vector<CycElem> entries;

    bool all_zero() const {
        for (const CycElem& e : entries)
            if (!e.is_zero()) return false;
        return true;
    }
};

// V_0 (all exponent zero) and V_k = phi_{S_k}(V_0) for k = 1..b-1, each of
// length b^l.
inline std::vector<ExponentWord> build_V(const WeightedSet& s) {
    const ProperWeightedSet proper = properize(s);
    if (proper.set().empty())
        throw std::domain_error("build_V: set is empty after properization (constant sequence)");
    const std::uint32_t b = s.base();
    const std::size_t l = max_pattern_length(proper.set());
    const std::size_t dim = checked_pow(b, static_cast<unsigned>(l));
    const std::vector<ProperWeightedSet> parts = decompose(proper);

    ExponentWord v0;
    v0.modulus = s.modulus();
    v0.values.assign(dim, 0);
    std::vector<ExponentWord> v;
    v.reserve(b);
    v.push_back(v0);
    for (std::uint32_t k = 1; k < b; ++k) v.push_back(apply_window_set(parts[k - 1], v0));
    return v;
}

inline TransferMatrix build_matrix(const WeightedSet& s) {
    const std::vector<ExponentWord> v = build_V(s);
    TransferMatrix mat;
    mat.base = s.base();
    mat.modulus = s.modulus();
    mat.l = max_pattern_length(properize(s).set());
    mat.dim = v[0].size();
    mat.exps.resize(mat.dim * mat.base);
    const std::size_t rows_per_band = mat.dim / mat.base; // b^(l-1)
    for (std::size_t row = 0; row < mat.dim; ++row) {
        const std::size_t s_idx = row / rows_per_band;
        const std::size_t c0 = mat.band_col(row);
        for (std::uint32_t t = 0; t < mat.base; ++t)
            mat.exps[row * mat.base + t] = v[s_idx].values[c0 + t];
    }
    return mat;
}

// A(t) computed directly: enumerate the first b^(l+t) integers and
// accumulate per-block residue counts.
inline BlockSumVector block_sums(const CycField& field, const WeightedSet& s, std::size_t stage) {
    if (field.modulus() != s.modulus())
        throw std::invalid_argument("block_sums: field modulus mismatch");
    const ProperWeightedSet proper = properize(s);
    if (proper.set().empty())
        throw std::domain_error("block_sums: set is empty after properization (constant sequence)");
    const std::size_t l = max_pattern_length(proper.set());
    const std::size_t total = checked_pow(s.base(), static_cast<unsigned>(l + stage));
    const std::size_t dim = checked_pow(s.base(), static_cast<unsigned>(l));
    const std::uint64_t block_len = total / dim; // b^stage

    std::vector<std::vector<std::uint64_t>> counts(dim, std::vector<std::uint64_t>(s.modulus(), 0));
    std::uint64_t idx = 0;
    for_each_exponent(s, 0, total, [&](std::uint32_t e) {
        ++counts[static_cast<std::size_t>(idx / block_len)][e];
        ++idx;
    });

    BlockSumVector a;
    a.stage = stage;
    a.entries.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j) a.entries.push_back(from_residue_counts(field, counts[j]));
    return a;
}

// One recursion step A(t+1) = M A(t).
inline BlockSumVector advance(const CycField& field, const TransferMatrix& mat, const BlockSumVector& a) {
    if (a.entries.size() != mat.dim) throw std::invalid_argument("advance: dimension mismatch");
    if (field.modulus() != mat.modulus) throw std::invalid_argument("advance: field modulus mismatch");
    BlockSumVector out;
    out.stage = a.stage + 1;
    out.entries.reserve(mat.dim);
    for (std::size_t row = 0; row < mat.dim; ++row) {
        const std::size_t c0 = mat.band_col(row);
        CycElem acc = field.zero();
        for (std::uint32_t t = 0; t < mat.base; ++t)
            acc = field.add(acc, field.mul_root(a.entries[c0 + t], mat.exps[row * mat.base + t]));
        out.entries.push_back(std::move(acc));
    }
    return out;
}

enum class PivotRule { first_nonzero, last_nonzero };

// det(b I - M), exact. Gaussian elimination over the cyclotomic field with
// row swaps tracked by sign; zero entries are skipped, which keeps the early
// sweeps proportional to the band width.
inline CycElem char_det_at_b(const CycField& field, const TransferMatrix& mat,
                             PivotRule rule = PivotRule::first_nonzero) {
    const std::size_t n = mat.dim;
    std::vector<std::vector<CycElem>> a(n, std::vector<CycElem>(n, field.zero()));
    const CycElem b_elem = field.from_rational(BigRat(mat.base));
    for (std::size_t row = 0; row < n; ++row) {
        const std::size_t c0 = mat.band_col(row);
        for (std::uint32_t t = 0; t < mat.base; ++t) {
            const std::size_t col = c0 + t;
            a[row][col] = field.neg(field.root_of_unity(mat.exps[row * mat.base + t]));
            if (col == row) a[row][col] = field.add(a[row][col], b_elem);
        }
        if (row < c0 || row >= c0 + mat.base) a[row][row] = b_elem;
    }

    int sign = 1;
    CycElem det = field.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        if (rule == PivotRule::first_nonzero) {
            for (std::size_t r = col; r < n; ++r)
                if (!a[r][col].is_zero()) {
                    piv = r;
                    break;
                }
        } else {
            for (std::size_t r = n; r-- > col;)
                if (!a[r][col].is_zero()) {
                    piv = r;
                    break;
                }
        }
        if (piv == n) return field.zero();
        if (piv != col) {
            std::swap(a[piv], a[col]);
            sign = -sign;
        }
        det = field.mul(det, a[col][col]);
        const CycElem pivot_inv = field.inv(a[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            const CycElem factor = field.mul(a[r][col], pivot_inv);
            a[r][col] = field.zero();
            for (std::size_t c = col + 1; c < n; ++c) {
                if (a[col][c].is_zero()) continue;
                a[r][c] = field.sub(a[r][c], field.mul(factor, a[col][c]));
            }
        }
    }
    return sign < 0 ? field.neg(det) : det;
}

struct EigenvalueTest {
    bool is_eigenvalue = false;
    CycElem det; // det(b I - M); zero exactly when b is an eigenvalue
};

inline EigenvalueTest is_b_eigenvalue(const CycField& field, const TransferMatrix& mat) {
    CycElem det = char_det_at_b(field, mat);
    return EigenvalueTest{det.is_zero(), std::move(det)};
}

// M^(b-1) A(0) = 0?
inline bool kernel_condition(const CycField& field, const TransferMatrix& mat, const BlockSumVector& a0) {
    BlockSumVector cur = a0;
    for (std::uint32_t step = 0; step + 1 < mat.base; ++step) cur = advance(field, mat, cur);
    return cur.all_zero();
}

struct StarDecision {
    bool holds = false;
    bool degenerate = false; // S empty after properization and mod-m reduction
    bool b_is_eigenvalue = false;
    bool kernel_condition = false;
    std::optional<CycElem> det_certificate; // det(b I - M); absent when degenerate
    std::size_t dimension = 0;              // b^l; 0 when degenerate
    std::size_t l = 0;
    // Smallest e with M^e A(0) = 0, when one exists. Any such e is at most
    // b^l, so the search over e <= b^l is conclusive.
    std::optional<std::size_t> kernel_min_power;
};

inline StarDecision star_decide(const WeightedSet& s) {
    StarDecision d;
    if (mod_reduced(properize(s).set()).empty()) {
        // The sequence is constantly 1; its Cesaro mean is 1.
        d.degenerate = true;
        return d;
    }
    const CycField field(s.modulus());
    const TransferMatrix mat = build_matrix(s);
    d.dimension = mat.dim;
    d.l = mat.l;

    EigenvalueTest eig = is_b_eigenvalue(field, mat);
    d.b_is_eigenvalue = eig.is_eigenvalue;
    d.det_certificate = std::move(eig.det);

    BlockSumVector cur = block_sums(field, s, 0);
    for (std::size_t e = 1; e <= mat.dim; ++e) {
        cur = advance(field, mat, cur);
        if (cur.all_zero()) {
            d.kernel_min_power = e;
            break;
        }
    }
    d.kernel_condition = d.kernel_min_power.has_value() &&
                         *d.kernel_min_power <= static_cast<std::size_t>(mat.base - 1);
    d.holds = !d.b_is_eigenvalue || d.kernel_condition;
    return d;
}

// Orthogonality of two sequences over the same (b, m): the mean of
// a_{S1}(n) * conj(a_{S2}(n)) is the mean of a_{S1 (+) (-S2)}(n).
inline StarDecision orthogonality_decide(const WeightedSet& s1, const WeightedSet& s2) {
    return star_decide(oplus(s1, negate(s2)));
}

} // namespace patseq
