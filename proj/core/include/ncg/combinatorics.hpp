#ifndef NCG_COMBINATORICS_HPP
#define NCG_COMBINATORICS_HPP

#include <cstdint>

#include "ncg/errors.hpp"

namespace ncg {

/// Binomial coefficient with the combinatorial convention C(n,k) = 0 for
/// k < 0 or k > n. Exact for every value that fits in 64 bits.
inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (acc > ~std::uint64_t{0}) throw InternalError("binomial overflow");
    }
    return static_cast<std::uint64_t>(acc);
}

/// base^exp, throwing instead of wrapping on overflow.
inline std::uint64_t checked_pow(std::uint64_t base, int exp) {
    unsigned __int128 acc = 1;
    for (int i = 0; i < exp; ++i) {
        acc *= base;
        if (acc > ~std::uint64_t{0}) throw InternalError("power overflow");
    }
    return static_cast<std::uint64_t>(acc);
}

} // namespace ncg

#endif
