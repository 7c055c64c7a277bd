#pragma once

#include <stdexcept>

#include "bigint.hpp"

namespace hws {

struct OutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline BigInt binomial(long n, long k) {
    if (n < 0 || k < 0) throw OutOfRange("binomial: negative argument");
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

// Number of k-dimensional subspaces of GF(q)^n.
inline BigInt gaussian_binomial(long n, long k, long q) {
    if (q < 2) throw OutOfRange("gaussian_binomial: q >= 2 required");
    if (k < 0 || k > n) throw OutOfRange("gaussian_binomial: need 0 <= k <= n");
    BigInt num = 1, den = 1, Q(q);
    for (long i = 0; i < k; ++i) {
        num *= big_pow(Q, (unsigned long)(n - i)) - 1;
        den *= big_pow(Q, (unsigned long)(i + 1)) - 1;
    }
    return exact_div(num, den);
}

inline int popcount64(unsigned long long x) { return __builtin_popcountll(x); }

} // namespace hws
