#pragma once

#include <cstdint>

#include "jinv/errors.hpp"

namespace jinv {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// p-adic valuation v_p(n) for n >= 1.
inline int p_adic_valuation(std::uint64_t n, std::uint64_t p) {
    if (n == 0 || p < 2) throw InvalidInputError("p_adic_valuation: need n >= 1 and p >= 2");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline int v2(std::uint64_t n) { return p_adic_valuation(n, 2); }

// p^e with an overflow guard; exponents in this library stay desk-scale.
inline std::uint64_t checked_pow(std::uint64_t p, int e) {
    std::uint64_t result = 1;
    for (int i = 0; i < e; ++i) {
        if (result > (std::uint64_t{1} << 40))
            throw InvalidInputError("checked_pow: exponent too large for a dense polynomial");
        result *= p;
    }
    return result;
}

// Largest power of p dividing n (the p-primary part of n).
inline std::uint64_t p_primary_part(std::uint64_t n, std::uint64_t p) {
    return checked_pow(p, p_adic_valuation(n, p));
}

inline bool is_power_of(std::uint64_t n, std::uint64_t p) {
    if (n == 0) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace jinv
