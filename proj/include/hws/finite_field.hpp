#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace hws {

struct NotPrime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct TooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// GF(p^e).  Elements are canonical integers in [0, q): the base-p packed
// coefficient vector of the polynomial representative (constant term least
// significant).  The modulus is the lexicographically least monic irreducible
// of degree e, coefficients compared from the constant term upward.
class FiniteField {
public:
    FiniteField(long p, long e) : p_(p), e_(e) {
        if (!is_prime(p)) throw NotPrime("p must be prime");
        if (e < 1) throw TooLarge("e must be >= 1");
        double qd = 1;
        for (long i = 0; i < e; ++i) qd *= double(p);
        if (qd > double(1 << 20)) throw TooLarge("p^e > 2^20");
        q_ = 1;
        for (long i = 0; i < e; ++i) q_ *= p;
        if (e_ > 1) modulus_ = find_modulus();
        else modulus_ = {0, 1}; // x (unused for prime fields)
        if (q_ <= 512) build_tables();
    }

    long p() const { return p_; }
    long e() const { return e_; }
    long q() const { return q_; }
    const std::vector<long>& modulus() const { return modulus_; }

    long add(long a, long b) const {
        if (!add_.empty()) return add_[a * q_ + b];
        return add_slow(a, b);
    }
    long sub(long a, long b) const { return add(a, neg(b)); }
    long neg(long a) const {
        if (!neg_.empty()) return neg_[a];
        return neg_slow(a);
    }
    long mul(long a, long b) const {
        if (!mul_.empty()) return mul_[a * q_ + b];
        return mul_slow(a, b);
    }
    long inv(long a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        if (!inv_.empty()) return inv_[a];
        return pow(a, q_ - 2);
    }
    long pow(long a, long n) const {
        long r = 1, base = a;
        while (n > 0) {
            if (n & 1) r = mul(r, base);
            base = mul(base, base);
            n >>= 1;
        }
        return r;
    }

    // Multiplicative order of a nonzero element.
    long order(long a) const {
        long r = a, n = 1;
        while (r != 1) { r = mul(r, a); ++n; }
        return n;
    }

private:
    long p_, e_, q_;
    std::vector<long> modulus_; // degree e, monic: modulus_[e] == 1
    std::vector<long> add_, mul_, neg_, inv_;

    std::vector<long> unpack(long a) const {
        std::vector<long> c(e_);
        for (long i = 0; i < e_; ++i) { c[i] = a % p_; a /= p_; }
        return c;
    }
    long pack(const std::vector<long>& c) const {
        long a = 0;
        for (long i = e_ - 1; i >= 0; --i) a = a * p_ + c[i];
        return a;
    }

    long add_slow(long a, long b) const {
        if (e_ == 1) return (a + b) % p_;
        long r = 0, f = 1;
        for (long i = 0; i < e_; ++i) {
            r += ((a % p_ + b % p_) % p_) * f;
            a /= p_; b /= p_; f *= p_;
        }
        return r;
    }
    long neg_slow(long a) const {
        if (e_ == 1) return (p_ - a) % p_;
        long r = 0, f = 1;
        for (long i = 0; i < e_; ++i) {
            r += ((p_ - a % p_) % p_) * f;
            a /= p_; f *= p_;
        }
        return r;
    }
    long mul_slow(long a, long b) const {
        if (e_ == 1) return (a * b) % p_;
        auto ca = unpack(a), cb = unpack(b);
        std::vector<long> prod(2 * e_ - 1, 0);
        for (long i = 0; i < e_; ++i)
            for (long j = 0; j < e_; ++j)
                prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
        // reduce modulo the monic modulus
        for (long d = 2 * e_ - 2; d >= e_; --d) {
            long c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (long i = 0; i < e_; ++i)
                prod[d - e_ + i] = ((prod[d - e_ + i] - c * modulus_[i]) % p_ + p_) % p_;
        }
        prod.resize(e_);
        return pack(prod);
    }

    // Polynomial arithmetic over GF(p) on coefficient vectors (for the
    // irreducibility search only).
    static std::vector<long> poly_mod(std::vector<long> a, const std::vector<long>& m, long p) {
        long dm = long(m.size()) - 1;
        for (long d = long(a.size()) - 1; d >= dm; --d) {
            long c = a[d];
            if (c == 0) continue;
            long lead_inv = 1; // m monic
            long f = (c * lead_inv) % p;
            for (long i = 0; i <= dm; ++i)
                a[d - dm + i] = ((a[d - dm + i] - f * m[i]) % p + p) % p;
        }
        while (a.size() > 1 && a.back() == 0) a.pop_back();
        return a;
    }

    std::vector<long> find_modulus() const {
        // enumerate monic degree-e polynomials in lexicographic order of
        // (c0, c1, ..., c_{e-1}); last coefficient varies fastest
        std::vector<long> c(e_, 0);
        while (true) {
            std::vector<long> m = c;
            m.push_back(1);
            if (poly_irreducible(m, p_)) return m;
            long i = e_ - 1;
            while (i >= 0 && c[i] == p_ - 1) { c[i] = 0; --i; }
            if (i < 0) throw std::logic_error("no irreducible polynomial found");
            ++c[i];
        }
    }

    static bool poly_irreducible(const std::vector<long>& m, long p) {
        long deg = long(m.size()) - 1;
        // trial division by all monic polynomials of degree 1..deg/2
        for (long d = 1; 2 * d <= deg; ++d) {
            long count = 1;
            for (long i = 0; i < d; ++i) count *= p;
            for (long idx = 0; idx < count; ++idx) {
                std::vector<long> div(d + 1);
                long t = idx;
                for (long i = 0; i < d; ++i) { div[i] = t % p; t /= p; }
                div[d] = 1;
                if (poly_divides(div, m, p)) return false;
            }
        }
        return true;
    }

    static bool poly_divides(const std::vector<long>& d, const std::vector<long>& m, long p) {
        auto r = poly_mod(m, d, p);
        return r.size() == 1 && r[0] == 0;
    }

    void build_tables() {
        add_.resize(q_ * q_);
        mul_.resize(q_ * q_);
        neg_.resize(q_);
        inv_.assign(q_, 0);
        for (long a = 0; a < q_; ++a) {
            neg_[a] = neg_slow(a);
            for (long b = 0; b < q_; ++b) {
                add_[a * q_ + b] = add_slow(a, b);
                mul_[a * q_ + b] = mul_slow(a, b);
            }
        }
        for (long a = 1; a < q_; ++a)
            for (long b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) { inv_[a] = b; break; }
    }
};

inline std::shared_ptr<const FiniteField> make_field(long p, long e) {
    return std::make_shared<const FiniteField>(p, e);
}

// Factor q = p^e or throw.
inline std::pair<long, long> factor_prime_power(long q) {
    for (long p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        if (q % p) continue;
        long e = 0, t = q;
        while (t % p == 0) { t /= p; ++e; }
        if (t == 1) return {p, e};
        break;
    }
    throw NotPrime("not a prime power: " + std::to_string(q));
}

inline std::shared_ptr<const FiniteField> make_field_q(long q) {
    auto [p, e] = factor_prime_power(q);
    return make_field(p, e);
}

} // namespace hws
