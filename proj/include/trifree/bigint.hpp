#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace trifree {

using BigInt = mpz_class;

inline BigInt pow2(std::uint64_t e)
{
    BigInt r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
    return r;
}

inline BigInt pow_ui(unsigned long base, unsigned long e)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

/// Number of bits in the binary representation; 0 for zero.
inline std::uint64_t bit_length(const BigInt& x)
{
    if (x == 0)
        return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

/// Converts a nonnegative value known to fit in 64 bits.
inline std::uint64_t to_u64(const BigInt& x)
{
    // mpz_get_ui is 64-bit on LP64 targets.
    static_assert(sizeof(unsigned long) == 8);
    return mpz_get_ui(x.get_mpz_t());
}

inline bool fits_u64(const BigInt& x) { return x >= 0 && bit_length(x) <= 64; }

}  // namespace trifree
