#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace patseq {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// base^exp as size_t; throws std::overflow_error if the result does not fit.
inline std::size_t checked_pow(std::size_t base, unsigned exp) {
    std::size_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<std::size_t>::max() / base)
            throw std::overflow_error("checked_pow: result does not fit in size_t");
        result *= base;
    }
    return result;
}

inline BigInt big_pow(const BigInt& base, unsigned exp) {
    BigInt result = 1;
    BigInt b = base;
    unsigned e = exp;
    while (e != 0) {
        if (e & 1u) result *= b;
        e >>= 1u;
        if (e != 0) b *= b;
    }
    return result;
}

// Residue of v in [0, m), correct for negative v.
inline std::uint32_t mod_residue(const BigInt& v, std::uint32_t m) {
    if (m == 0) throw std::invalid_argument("mod_residue: zero modulus");
    BigInt r = v % m;
    if (r < 0) r += m;
    return static_cast<std::uint32_t>(r);
}

} // namespace patseq
