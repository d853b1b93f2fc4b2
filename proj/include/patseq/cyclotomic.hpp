#pragma once

// Exact arithmetic in the m-th cyclotomic field Q(zeta_m).
//
// Elements are coefficient vectors of length phi(m) over arbitrary-precision
// rationals, always kept reduced modulo the m-th cyclotomic polynomial. All
// zero tests, determinants, and kernel checks in the decision pipeline run on
// these exact values; floating point appears only in to_complex for reporting.

#include "patseq/numeric.hpp"

#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace patseq {

namespace poly_detail {

// Long division of a by monic b over the integers; remainder must vanish.
inline std::vector<BigInt> div_exact_monic(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    const std::size_t db = b.size() - 1;
    if (b.empty() || b.back() != 1) throw std::invalid_argument("div_exact_monic: divisor not monic");
    if (a.size() < b.size()) throw std::invalid_argument("div_exact_monic: degree underflow");
    std::vector<BigInt> q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        BigInt c = a[i];
        if (c == 0) continue;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (const BigInt& c : a)
        if (c != 0) throw std::logic_error("div_exact_monic: nonzero remainder");
    return q;
}

inline void trim(std::vector<BigRat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// divmod over Q[x]; returns remainder, stores quotient.
inline std::vector<BigRat> divmod(std::vector<BigRat> a, const std::vector<BigRat>& b,
                                  std::vector<BigRat>& quotient) {
    trim(a);
    quotient.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigRat(0));
    const BigRat lead = b.back();
    while (a.size() >= b.size()) {
        BigRat c = a.back() / lead;
        const std::size_t shift = a.size() - b.size();
        quotient[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        trim(a);
        if (a.empty()) break;
        while (a.size() >= b.size() && a.back() == 0) a.pop_back();
    }
    return a;
}

} // namespace poly_detail

// Coefficients of the m-th cyclotomic polynomial, ascending, monic, with
// degree phi(m). Computed by exact division of x^m - 1 by the cyclotomic
// polynomials of the proper divisors of m.
inline std::vector<BigInt> cyclotomic_poly(std::uint32_t m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_poly: m must be positive");
    std::vector<BigInt> p(m + 1, 0);
    p.front() = -1;
    p.back() = 1;
    for (std::uint32_t d = 1; d < m; ++d)
        if (m % d == 0) p = poly_detail::div_exact_monic(std::move(p), cyclotomic_poly(d));
    return p;
}

// An element of Q(zeta_m): phi(m) rational coefficients, reduced mod Phi_m.
struct CycElem {
    std::vector<BigRat> coeff;

    bool is_zero() const {
        for (const BigRat& c : coeff)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const CycElem&, const CycElem&) = default;
};

class CycField {
public:
    explicit CycField(std::uint32_t m) : m_(m), phi_(cyclotomic_poly(m)) {
        if (m < 2) throw std::invalid_argument("CycField: modulus must be at least 2");
        deg_ = phi_.size() - 1;
        // x^(deg+t) mod Phi_m for t = 0 .. deg-2 (integer coefficients);
        // entry 0 doubles as the shift rule for mul_by_x.
        std::vector<BigInt> cur(deg_);
        for (std::size_t i = 0; i < deg_; ++i) cur[i] = -phi_[i];
        high_.push_back(cur);
        for (std::size_t t = 1; t + 1 < deg_; ++t) {
            std::vector<BigInt> next(deg_, 0);
            for (std::size_t i = 0; i + 1 < deg_; ++i) next[i + 1] = cur[i];
            const BigInt top = cur[deg_ - 1];
            if (top != 0)
                for (std::size_t i = 0; i < deg_; ++i) next[i] += top * high_[0][i];
            high_.push_back(next);
            cur = std::move(next);
        }
        // zeta^k for k = 0 .. m-1.
        roots_.resize(m_);
        roots_[0] = one();
        for (std::uint32_t k = 1; k < m_; ++k) roots_[k] = mul_by_x(roots_[k - 1]);
    }

    std::uint32_t modulus() const { return m_; }
    std::size_t degree() const { return deg_; }
    const std::vector<BigInt>& poly() const { return phi_; }

    CycElem zero() const { return CycElem{std::vector<BigRat>(deg_, BigRat(0))}; }

    CycElem one() const {
        CycElem e = zero();
        e.coeff[0] = 1;
        return e;
    }

    CycElem from_rational(const BigRat& v) const {
        CycElem e = zero();
        e.coeff[0] = v;
        return e;
    }

    // x^k reduced mod Phi_m, for 0 <= k < m.
    const CycElem& root_of_unity(std::uint32_t k) const {
        if (k >= m_) throw std::invalid_argument("root_of_unity: exponent out of range");
        return roots_[k];
    }

    CycElem add(const CycElem& a, const CycElem& b) const {
        CycElem out = a;
        for (std::size_t i = 0; i < deg_; ++i) out.coeff[i] += b.coeff[i];
        return out;
    }

    CycElem sub(const CycElem& a, const CycElem& b) const {
        CycElem out = a;
        for (std::size_t i = 0; i < deg_; ++i) out.coeff[i] -= b.coeff[i];
        return out;
    }

    CycElem neg(const CycElem& a) const {
        CycElem out = a;
        for (BigRat& c : out.coeff) c = -c;
        return out;
    }

    CycElem mul(const CycElem& a, const CycElem& b) const {
        std::vector<BigRat> prod(2 * deg_ - 1, BigRat(0));
        for (std::size_t i = 0; i < deg_; ++i) {
            if (a.coeff[i] == 0) continue;
            for (std::size_t j = 0; j < deg_; ++j) {
                if (b.coeff[j] == 0) continue;
                prod[i + j] += a.coeff[i] * b.coeff[j];
            }
        }
        return reduce(std::move(prod));
    }

    // Multiply by zeta^k; k may be any residue mod m.
    CycElem mul_root(const CycElem& a, std::uint32_t k) const {
        std::uint32_t r = k % m_;
        if (r == 0) return a;
        CycElem out = a;
        for (std::uint32_t step = 0; step < r; ++step) out = mul_by_x(out);
        return out;
    }

    // Inverse via the extended Euclidean algorithm against Phi_m, which is
    // irreducible over Q, so every nonzero element is a unit.
    CycElem inv(const CycElem& a) const {
        if (a.is_zero()) throw std::domain_error("CycField::inv: inversion of zero");
        std::vector<BigRat> r0(phi_.size());
        for (std::size_t i = 0; i < phi_.size(); ++i) r0[i] = BigRat(phi_[i]);
        std::vector<BigRat> r1 = a.coeff;
        poly_detail::trim(r1);
        std::vector<BigRat> t0{}, t1{BigRat(1)};
        while (r1.size() > 1) {
            std::vector<BigRat> q;
            std::vector<BigRat> r2 = poly_detail::divmod(std::move(r0), r1, q);
            // t2 = t0 - q * t1
            std::vector<BigRat> t2 = t0;
            t2.resize(std::max(t2.size(), q.size() + t1.size()), BigRat(0));
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (std::size_t j = 0; j < t1.size(); ++j) t2[i + j] -= q[i] * t1[j];
            }
            poly_detail::trim(t2);
            r0 = std::move(r1);
            r1 = std::move(r2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r1.empty()) throw std::logic_error("CycField::inv: zero gcd remainder");
        const BigRat scale = r1[0];
        std::vector<BigRat> out(2 * deg_ - 1, BigRat(0));
        for (std::size_t i = 0; i < t1.size() && i < out.size(); ++i) out[i] = t1[i] / scale;
        return reduce(std::move(out));
    }

    // Floating-point evaluation at e^(2*pi*i/m); reporting only.
    std::complex<double> to_complex(const CycElem& a) const {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t i = deg_; i-- > 0;) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / m_;
            acc += a.coeff[i].convert_to<double>() * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        return acc;
    }

private:
    CycElem reduce(std::vector<BigRat> v) const {
        for (std::size_t j = v.size(); j-- > deg_;) {
            if (v[j] == 0) continue;
            const std::vector<BigInt>& fold = high_[j - deg_];
            for (std::size_t i = 0; i < deg_; ++i)
                if (fold[i] != 0) v[i] += v[j] * BigRat(fold[i]);
            v[j] = 0;
        }
        v.resize(deg_);
        return CycElem{std::move(v)};
    }

    CycElem mul_by_x(const CycElem& a) const {
        std::vector<BigRat> out(deg_, BigRat(0));
        for (std::size_t i = 0; i + 1 < deg_; ++i) out[i + 1] = a.coeff[i];
        const BigRat& top = a.coeff[deg_ - 1];
        if (top != 0)
            for (std::size_t i = 0; i < deg_; ++i)
                if (high_[0][i] != 0) out[i] += top * BigRat(high_[0][i]);
        return CycElem{std::move(out)};
    }

    std::uint32_t m_;
    std::vector<BigInt> phi_;
    std::size_t deg_ = 0;
    std::vector<std::vector<BigInt>> high_;
    std::vector<CycElem> roots_;
};

// Sum of counts[k] * zeta^k as an exact field element.
inline CycElem from_residue_counts(const CycField& field, const std::vector<std::uint64_t>& counts) {
    CycElem out = field.zero();
    for (std::uint32_t k = 0; k < counts.size(); ++k) {
        if (counts[k] == 0) continue;
        const CycElem& root = field.root_of_unity(k);
        const BigRat scale(counts[k]);
        for (std::size_t i = 0; i < out.coeff.size(); ++i)
            if (root.coeff[i] != 0) out.coeff[i] += scale * root.coeff[i];
    }
    return out;
}

} // namespace patseq
