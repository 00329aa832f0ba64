#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace wavenum {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt to_big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

inline bool fits_u64(const BigInt& v) { return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64; }

inline std::uint64_t to_u64(const BigInt& v)
{
    if (!fits_u64(v))
        throw std::overflow_error("value does not fit in 64 bits: " + v.get_str());
    return static_cast<std::uint64_t>(v.get_ui());
}

/// Product of all values, multiplied as a balanced tree.
inline BigInt product_of(const std::uint64_t* first, const std::uint64_t* last)
{
    const auto n = last - first;
    if (n == 0)
        return 1;
    if (n <= 16) {
        BigInt acc = 1;
        for (; first != last; ++first)
            acc *= to_big(*first);
        return acc;
    }
    const auto* mid = first + n / 2;
    return BigInt(product_of(first, mid) * product_of(mid, last));
}

} // namespace wavenum
