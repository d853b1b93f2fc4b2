#pragma once

// Finite weighted subsets of base-b digit words: the algebra of pattern sets.
//
// A weighted set S assigns a nonzero integer weight to finitely many patterns
// over a fixed base b, together with a modulus m for the derived sequence of
// m-th roots of unity  a(n) = zeta_m ^ e_S(n),  where e_S(n) is the weighted
// occurrence count over the expansion of n.

#include "patseq/digits.hpp"
#include "patseq/numeric.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace patseq {

class WeightedSet {
public:
    using EntryMap = std::map<Word, BigInt>; // lexicographic word order

    WeightedSet(std::uint32_t base, std::uint32_t modulus) : base_(base), modulus_(modulus) {
        if (base < 2) throw std::invalid_argument("WeightedSet: base must be at least 2");
        if (modulus < 2) throw std::invalid_argument("WeightedSet: modulus must be at least 2");
    }

    std::uint32_t base() const { return base_; }
    std::uint32_t modulus() const { return modulus_; }
    const EntryMap& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    // Merge `weight` onto `w`; entries whose weight reaches zero are pruned.
    void add(const Word& w, const BigInt& weight) {
        if (w.base != base_) throw std::invalid_argument("WeightedSet::add: word base mismatch");
        if (!w.is_pattern())
            throw std::invalid_argument("WeightedSet::add: word must contain a nonzero digit");
        if (weight == 0) return;
        auto [it, inserted] = entries_.try_emplace(w, weight);
        if (!inserted) {
            it->second += weight;
            if (it->second == 0) entries_.erase(it);
        }
    }

    BigInt weight_of(const Word& w) const {
        auto it = entries_.find(w);
        return it == entries_.end() ? BigInt(0) : it->second;
    }

    friend bool operator==(const WeightedSet&, const WeightedSet&) = default;

private:
    std::uint32_t base_;
    std::uint32_t modulus_;
    EntryMap entries_;
};

// A weighted set in which no word has a leading zero.
class ProperWeightedSet {
public:
    explicit ProperWeightedSet(WeightedSet set) : set_(std::move(set)) {
        for (const auto& [w, c] : set_.entries())
            if (w.has_leading_zero())
                throw std::invalid_argument("ProperWeightedSet: word has a leading zero");
    }

    const WeightedSet& set() const { return set_; }
    operator const WeightedSet&() const { return set_; }

    friend bool operator==(const ProperWeightedSet&, const ProperWeightedSet&) = default;

private:
    WeightedSet set_;
};

// Pointwise weight addition; cancelled entries disappear.
inline WeightedSet oplus(const WeightedSet& s1, const WeightedSet& s2) {
    if (s1.base() != s2.base() || s1.modulus() != s2.modulus())
        throw std::invalid_argument("oplus: mismatched base or modulus");
    WeightedSet out = s1;
    for (const auto& [w, c] : s2.entries()) out.add(w, c);
    return out;
}

inline WeightedSet negate(const WeightedSet& s) {
    WeightedSet out(s.base(), s.modulus());
    for (const auto& [w, c] : s.entries()) out.add(w, -c);
    return out;
}

// Weights reduced to [0, m); entries with weight divisible by m disappear.
// The derived sequence zeta^e_S depends only on this reduction.
inline WeightedSet mod_reduced(const WeightedSet& s) {
    WeightedSet out(s.base(), s.modulus());
    for (const auto& [w, c] : s.entries()) out.add(w, BigInt(mod_residue(c, s.modulus())));
    return out;
}

// Eliminate leading zeros. An occurrence of 0v in an expansion is an
// occurrence of v whose preceding digit is 0, and every occurrence of v has
// some preceding digit, so
//     e_{0v} = e_v - sum_{d=1}^{b-1} e_{dv}
// holds exactly. Rewriting (c, 0v) -> (c, v) + sum_d (-c, dv) terminates
// because each step trades one leading zero for same-length proper words.
inline ProperWeightedSet properize(const WeightedSet& s) {
    WeightedSet work = s;
    for (;;) {
        const Word* found = nullptr;
        for (const auto& [w, c] : work.entries()) {
            if (w.has_leading_zero()) {
                found = &w;
                break;
            }
        }
        if (!found) break;
        const Word zero_word = *found;
        const BigInt coeff = work.weight_of(zero_word);
        const Word v = zero_word.tail();
        work.add(zero_word, -coeff);
        work.add(v, coeff);
        for (Digit d = 1; d < work.base(); ++d) {
            std::vector<Digit> dv;
            dv.reserve(v.size() + 1);
            dv.push_back(d);
            dv.insert(dv.end(), v.digits.begin(), v.digits.end());
            work.add(Word(work.base(), std::move(dv)), -coeff);
        }
    }
    return ProperWeightedSet(std::move(work));
}

// Split a proper set by first letter: result[k-1] holds the words starting
// with digit k, for k = 1..b-1. Their oplus-fold recovers the input.
inline std::vector<ProperWeightedSet> decompose(const ProperWeightedSet& s) {
    const WeightedSet& base_set = s.set();
    std::vector<WeightedSet> groups(base_set.base() - 1, WeightedSet(base_set.base(), base_set.modulus()));
    for (const auto& [w, c] : base_set.entries()) groups[w.digits.front() - 1].add(w, c);
    std::vector<ProperWeightedSet> out;
    out.reserve(groups.size());
    for (auto& g : groups) out.emplace_back(std::move(g));
    return out;
}

// Maximal word length over the entries; the empty set has no length and
// signals the degenerate constant-sequence case to the caller.
inline std::size_t max_pattern_length(const WeightedSet& s) {
    if (s.empty()) throw std::invalid_argument("max_pattern_length: empty weighted set");
    std::size_t l = 0;
    for (const auto& [w, c] : s.entries()) l = std::max(l, w.size());
    return l;
}

// e_{b,S}(n): the weighted sum of pattern occurrence counts.
inline BigInt eval_weighted(const WeightedSet& s, const BigInt& n) {
    BigInt total = 0;
    for (const auto& [w, c] : s.entries()) total += c * BigInt(count_occurrences(w, n));
    return total;
}

// e_{b,S}(n) mod m; the sequence value is zeta_m ^ result.
inline std::uint32_t a_exponent(const WeightedSet& s, const BigInt& n) {
    return mod_residue(eval_weighted(s, n), s.modulus());
}

} // namespace patseq
