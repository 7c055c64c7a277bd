#pragma once

#include <gmpxx.h>
#include <string>

namespace hws {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt big_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt big_pow(long base, unsigned long e) { return big_pow(BigInt(base), e); }

// Exact quotient; aborts via assertion semantics if the division is not exact.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::runtime_error("exact_div: non-exact division");
    return q;
}

inline bool is_integral(const BigRat& x) {
    BigRat c = x;
    c.canonicalize();
    return c.get_den() == 1;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const BigRat& x) { return x.get_str(); }

} // namespace hws
