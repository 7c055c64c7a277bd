#pragma once

#include <initializer_list>
#include <set>
#include <vector>

#include "gwp.hpp"
#include "matroid.hpp"
#include "resolution.hpp"

namespace hws {

struct NoFixtures : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsupportedQ : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// polynomial in q, coefficients listed from the highest power down
inline BigInt poly_q(long q, std::initializer_list<long> coeffs) {
    BigInt v = 0, Q(q);
    for (long c : coeffs) v = v * Q + c;
    return v;
}

inline BigInt frac(const BigInt& num, long den) { return exact_div(num, BigInt(den)); }

// --- higher weight spectra ------------------------------------------------

// For q < 7 distinct weight labels can coincide; the contributions add up,
// which is exactly the column merging of the small-field tables.
inline SpectrumTable fallq_generic(long q) {
    SpectrumTable t;
    long n = q * q;
    auto put = [&](int r, long w, const BigInt& v) { t.add(r, w, v); };
    t.set(0, 0, 1);
    put(1, n - 2 * q, frac(poly_q(q, {1, 0, -1, 0}), 2));
    put(1, n - 2 * q + 1, frac(poly_q(q, {1, 1, 0, 0, 0}), 2));
    put(1, n - q - 1, frac(poly_q(q, {1, -2, 1, 0, 0, 0}), 2));
    put(1, n - q, poly_q(q, {1, 0, 1, 2, 0}));
    put(1, n - q + 1, frac(poly_q(q, {1, 0, -1, 0, 0, 0}), 2));
    put(1, n - 1, frac(poly_q(q, {1, -1, 0, 0, 0}), 2));
    put(1, n, frac(poly_q(q, {1, 0, -1, 2}), 2));
    put(2, n - q - 1, poly_q(q, {1, 0, -1, 0, 0}));
    put(2, n - q, poly_q(q, {2, 3, 1, 0}));
    put(2, n - 4, frac(poly_q(q, {1, -4, 5, 1, -6, 3, 0, 0, 0}), 24));
    put(2, n - 3, frac(poly_q(q, {4, -9, 1, 9, -5, 0, 0, 0}), 6));
    put(2, n - 2, frac(poly_q(q, {1, -2, 13, -9, -14, 11, 0, 0, 0}), 4));
    put(2, n - 1, frac(poly_q(q, {2, 4, -5, 29, 15, -27, 6, 0, 0}), 6));
    put(2, n, frac(poly_q(q, {9, 8, 21, -19, 42, 59, -24, 0, 24}), 24));
    put(3, n - q, poly_q(q, {1, 1, 0}));
    put(3, n - 3, frac(poly_q(q, {1, -1, -1, 1, 0, 0, 0}), 6));
    put(3, n - 2, frac(poly_q(q, {1, 0, 1, 0, -2, 0, 0, 0}), 2));
    put(3, n - 1, frac(poly_q(q, {2, 0, 3, 3, 5, 3, 0, 0, 0}), 2));
    put(3, n, frac(poly_q(q, {6, 0, 9, 8, 7, 4, 14, 6, 0, 6}), 6));
    put(4, n - 2, frac(poly_q(q, {1, 0, -1, 0, 0}), 2));
    put(4, n - 1, poly_q(q, {1, 1, 0, 1, 2, 0, 0}));
    put(4, n, frac(poly_q(q, {2, 2, 2, 2, 5, 2, 1, 2, 2}), 2));
    put(5, n - 1, poly_q(q, {1, 0, 0}));
    put(5, n, poly_q(q, {1, 1, 1, 0, 1, 1}));
    put(6, n, 1);
    return t;
}

inline SpectrumTable fallq_spectra(long q) {
    factor_prime_power(q); // validates
    if (q == 2) {
        SpectrumTable t;
        t.set(0, 0, 1);
        long e[][3] = {{1, 1, 4}, {1, 2, 6}, {1, 3, 4}, {1, 4, 1}, {2, 2, 6},
                       {2, 3, 16}, {2, 4, 13}, {3, 3, 4}, {3, 4, 11}, {4, 4, 1}};
        for (auto& [r, w, v] : e) t.set(int(r), w, v);
        return t;
    }
    return fallq_generic(q);
}

// --- closed Betti tables --------------------------------------------------

struct TypoSlot {
    int ell;
    int i;
    long j;
    BigRat printed;   // may not even be an integer
    BigInt canonical; // the reading confirmed by the solver and brute force
    const char* note;
};

// Slots where one published reading disagrees with the solver; both readings
// are kept so cross-checks can report the discrepancy explicitly.
inline std::vector<TypoSlot> typo_slots(long q) {
    std::vector<TypoSlot> v;
    if (q >= 7) {
        long n = q * q;
        // beta_{4,q^2-2}: a -5q^6 monomial sometimes appears as -5q^9
        BigInt canon4 = frac(poly_q(q, {1, -6, 13, -5, -14, 11, 0, 0, 0, 0}), 4);
        BigRat printed4 = BigRat(poly_q(q, {-4, -6, 13, 0, -14, 11, 0, 0, 0, 0}), 4);
        printed4.canonicalize();
        v.push_back({0, 4, n - 2, printed4, canon4, "degree-9 term printed for a degree-6 term"});
        // beta^(1)_{5,q^2}: the -31q^5 monomial sometimes appears as -31q^6
        BigInt canon5 = frac(poly_q(q, {1, -4, 13, -31, 10, 59, -48, -24, 24}), 24);
        BigRat printed5 = BigRat(poly_q(q, {1, -4, -18, 0, 10, 59, -48, -24, 24}), 24);
        printed5.canonicalize();
        v.push_back({1, 5, n, printed5, canon5, "repeated power in one monomial"});
    }
    if (q == 4) {
        v.push_back({0, 2, 12, BigRat(1920), 3120, "tabulated value off by 1200"});
    }
    return v;
}

struct FixtureSet {
    long q;
    int k;
    long n;
    std::vector<BettiTable> tables; // ell = 0..k-1
};

inline FixtureSet fixtures(long q) {
    // canonical reference tables for the four small fields
    static const long t2[][4] = {{0, 1, 1, 4}, {0, 2, 2, 6}, {0, 3, 3, 4}, {0, 4, 4, 1},
                                 {1, 1, 2, 6}, {1, 2, 3, 8}, {1, 3, 4, 3},
                                 {2, 1, 3, 4}, {2, 2, 4, 3}, {3, 1, 4, 1}};
    static const long t3[][4] = {
        {0, 1, 3, 12},  {0, 1, 4, 54},  {0, 2, 5, 324}, {0, 3, 6, 600}, {0, 4, 7, 540},
        {0, 5, 8, 243}, {0, 6, 9, 44},  {1, 1, 5, 126}, {1, 2, 6, 420}, {1, 3, 7, 540},
        {1, 4, 8, 315}, {1, 5, 9, 70},  {2, 1, 6, 84},  {2, 2, 7, 216}, {2, 3, 8, 189},
        {2, 4, 9, 56},  {3, 1, 7, 36},  {3, 2, 8, 63},  {3, 3, 9, 28},  {4, 1, 8, 9},
        {4, 2, 9, 8},   {5, 1, 9, 1}};
    static const long t4[][4] = {
        {0, 1, 8, 30},    {0, 1, 9, 160},   {0, 1, 11, 288}, {0, 2, 11, 960},
        {0, 2, 12, 3120}, {0, 3, 12, 600},  {0, 3, 13, 10080}, {0, 4, 14, 12480},
        {0, 5, 15, 6816}, {0, 6, 16, 1413}, {1, 1, 11, 240}, {1, 1, 12, 840},
        {1, 2, 12, 220},  {1, 2, 13, 4320}, {1, 3, 14, 6960}, {1, 4, 15, 4624},
        {1, 5, 16, 1125}, {2, 1, 12, 20},   {2, 1, 13, 480}, {2, 2, 14, 1440},
        {2, 3, 15, 1376}, {2, 4, 16, 435},  {3, 1, 14, 120}, {3, 2, 15, 224},
        {3, 3, 16, 105},  {4, 1, 15, 16},   {4, 2, 16, 15},  {5, 1, 16, 1}};
    static const long t5[][4] = {
        {0, 1, 15, 60},    {0, 1, 16, 375},   {0, 1, 19, 1000},  {0, 1, 20, 600},
        {0, 2, 19, 3000},  {0, 2, 21, 31000}, {0, 3, 20, 2160},  {0, 3, 22, 100000},
        {0, 4, 23, 127500}, {0, 5, 24, 73250}, {0, 6, 25, 15944}, {1, 1, 19, 600},
        {1, 1, 21, 6500},  {1, 2, 20, 570},   {1, 2, 22, 30000}, {1, 3, 23, 48000},
        {1, 4, 24, 32725}, {1, 5, 25, 8196},  {2, 1, 20, 30},    {2, 1, 22, 2000},
        {2, 2, 23, 6000},  {2, 3, 24, 5875},  {2, 4, 25, 1904},  {3, 1, 23, 300},
        {3, 2, 24, 575},   {3, 3, 25, 276},   {4, 1, 24, 25},    {4, 2, 25, 24},
        {5, 1, 25, 1}};
    FixtureSet fs;
    fs.q = q;
    auto load = [&](const long (*rows)[4], size_t count, int k, long n) {
        fs.k = k;
        fs.n = n;
        fs.tables.assign(k, BettiTable{});
        for (int l = 0; l < k; ++l) fs.tables[l].ell = l;
        for (size_t t = 0; t < count; ++t)
            fs.tables[rows[t][0]].set(int(rows[t][1]), rows[t][2], rows[t][3]);
    };
    if (q == 2) load(t2, sizeof(t2) / sizeof(t2[0]), 4, 4);
    else if (q == 3) load(t3, sizeof(t3) / sizeof(t3[0]), 6, 9);
    else if (q == 4) load(t4, sizeof(t4) / sizeof(t4[0]), 6, 16);
    else if (q == 5) load(t5, sizeof(t5) / sizeof(t5[0]), 6, 25);
    else throw NoFixtures("no reference tables for q=" + std::to_string(q));
    return fs;
}

inline BettiTable closed_betti(long q, int ell) {
    factor_prime_power(q);
    if (q == 2) {
        if (ell < 0 || ell > 3) throw OutOfRangeElong("elongation out of range");
        auto t = uniform_betti(ell, 4, ell); // MDS: the matroid is U(ell, 4)
        return t;
    }
    if (ell < 0 || ell > 5) throw OutOfRangeElong("elongation out of range");
    long n = q * q;
    if (q <= 5) return fixtures(q).tables[ell];
    if (ell >= 3) return uniform_betti(n - (6 - ell), n, ell);
    BettiTable t;
    t.ell = ell;
    if (ell == 0) {
        t.set(1, n - 2 * q, frac(poly_q(q, {1, 0, -1, 0}), 2));
        t.set(1, n - 2 * q + 1, frac(poly_q(q, {1, 1, 0, 0, 0}), 2));
        t.set(1, n - q - 1, frac(poly_q(q, {1, -2, 1, 0, 0, 0}), 2));
        t.set(1, n - q, poly_q(q, {1, 0, -1, 0, 0}));
        t.set(1, n - q + 1, frac(poly_q(q, {1, 0, -1, 0, 0, 0}), 2));
        t.set(2, n - q - 1, poly_q(q, {1, 0, -1, 0, 0, 0}));
        t.set(2, n - 4, frac(poly_q(q, {1, -4, 5, 1, -6, 3, 0, 0, 0, 0}), 24));
        t.set(3, n - q, poly_q(q, {1, -1, -3, 1, 2, 0}));
        t.set(3, n - 3, frac(poly_q(q, {1, -5, 8, 0, -9, 5, 0, 0, 0, 0}), 6));
        t.set(4, n - 2, frac(poly_q(q, {1, -6, 13, -5, -14, 11, 0, 0, 0, 0}), 4));
        t.set(5, n - 1, frac(poly_q(q, {1, -7, 20, -20, -15, 30, -9, 0, 0, 0}), 6));
        t.set(6, n, frac(poly_q(q, {1, -8, 29, -51, 18, 59, -60, 0, 36, -24}), 24));
    } else if (ell == 1) {
        t.set(1, n - q - 1, poly_q(q, {1, 0, -1, 0, 0}));
        t.set(1, n - 4, frac(poly_q(q, {1, -4, 5, 1, -6, 3, 0, 0, 0}), 24));
        t.set(2, n - q, poly_q(q, {1, 0, -2, -1, 0}));
        t.set(2, n - 3, frac(poly_q(q, {1, -4, 7, -1, -8, 5, 0, 0, 0}), 6));
        t.set(3, n - 2, frac(poly_q(q, {1, -4, 9, -7, -10, 11, 0, 0, 0}), 4));
        t.set(4, n - 1, frac(poly_q(q, {1, -4, 11, -17, -6, 27, -6, 0, 0}), 6));
        t.set(5, n, frac(poly_q(q, {1, -4, 13, -31, 10, 59, -48, -24, 24}), 24));
    } else { // ell == 2
        t.set(1, n - q, poly_q(q, {1, 1, 0}));
        t.set(1, n - 3, frac(poly_q(q, {1, -1, -1, 1, 0, 0, 0}), 6));
        t.set(2, n - 2, frac(poly_q(q, {1, -1, -1, 1, 0, 0, 0}), 2));
        t.set(3, n - 1, frac(poly_q(q, {1, -1, -1, -1, 0, 0, 0}), 2));
        t.set(4, n, frac(poly_q(q, {1, -1, -1, -5, 6, 6, -6}), 6));
    }
    return t;
}

// --- generalized weight polynomials for q >= 7 ----------------------------

inline GwpFamily closed_gwp(long q) {
    if (q < 7) throw UnsupportedQ("closed weight polynomials assume q >= 7");
    GwpFamily fam;
    fam.k = 6;
    fam.q = q;
    long n = q * q;
    auto F = [&](std::initializer_list<long> c, long den) { return frac(poly_q(q, c), den); };
    fam.p[0] = {1};
    fam.p[n - 2 * q] = {-F({1, 0, -1, 0}, 2), F({1, 0, -1, 0}, 2)};
    fam.p[n - 2 * q + 1] = {-F({1, 1, 0, 0, 0}, 2), F({1, 1, 0, 0, 0}, 2)};
    fam.p[n - q - 1] = {F({1, 2, -3, 0, 0, 0}, 2), -F({1, 4, -3, -2, 0, 0}, 2),
                        poly_q(q, {1, 0, -1, 0, 0})};
    fam.p[n - q] = {-poly_q(q, {1, 0, -3, 0, 2, 0}), poly_q(q, {1, 1, -3, -2, 1, 0}),
                    poly_q(q, {-1, 0, 1, 0, 0}), poly_q(q, {1, 1, 0})};
    fam.p[n - q + 1] = {-F({1, 0, -1, 0, 0, 0}, 2), F({1, 0, -1, 0, 0, 0}, 2)};
    fam.p[n - 4] = {F({1, -4, 5, 1, -6, 3, 0, 0, 0, 0}, 24),
                    -F({1, -3, 1, 6, -5, -3, 3, 0, 0, 0}, 24),
                    F({1, -4, 5, 1, -6, 3, 0, 0, 0}, 24)};
    fam.p[n - 3] = {-F({1, -5, 8, 0, -9, 5, 0, 0, 0, 0}, 6),
                    F({1, -4, 4, 7, -10, -3, 5, 0, 0, 0}, 6),
                    -F({1, -4, 8, -2, -9, 6, 0, 0, 0}, 6), F({1, -1, -1, 1, 0, 0, 0}, 6)};
    fam.p[n - 2] = {F({1, -6, 13, -5, -14, 11, 0, 0, 0, 0}, 4),
                    -F({1, -5, 9, 4, -21, 1, 11, 0, 0, 0}, 4),
                    F({1, -4, 11, -9, -12, 13, 0, 0, 0}, 4), -F({1, -1, 0, 1, -1, 0, 0}, 2),
                    F({1, 0, -1, 0, 0}, 2)};
    fam.p[n - 1] = {-F({1, -7, 20, -20, -15, 30, -9, 0, 0, 0}, 6),
                    F({1, -6, 16, -9, -32, 24, 18, -6, 0, 0}, 6),
                    -F({1, -4, 14, -20, -9, 24, -6, 0, 0}, 6), F({1, -1, 1, -1, -4, 0, 0}, 2),
                    -poly_q(q, {1, 0, -1, 0, 0}), poly_q(q, {1, 0, 0})};
    fam.p[n] = {F({1, -8, 29, -51, 18, 59, -60, 0, 36, -24}, 24),
                -F({1, -7, 25, -38, -13, 69, -1, -48, 12, 0}, 24),
                F({1, -4, 17, -35, 6, 39, -24, 0, 0}, 24), -F({1, -1, 2, -5, -3, 6, 0}, 6),
                F({1, 0, -1, 0, 0}, 2), -poly_q(q, {1, 0, 0}), BigInt(1)};
    return fam;
}

// --- first order Reed-Muller closed forms ---------------------------------

inline SpectrumTable rm1m_spectra(long q, int m) {
    SpectrumTable t;
    t.set(0, 0, 1);
    BigInt qm = big_pow(q, (unsigned long)m);
    for (int i = 1; i <= m; ++i) {
        BigInt w = qm - big_pow(q, (unsigned long)(m - i));
        t.set(i, w.get_si(), big_pow(q, (unsigned long)i) * gaussian_binomial(m, i, q));
        t.add(i, qm.get_si(), gaussian_binomial(m, i - 1, q));
    }
    t.set(m + 1, qm.get_si(), gaussian_binomial(m, m, q));
    return t;
}

inline std::vector<long> rm1m_degrees(long q, int m) {
    std::vector<long> d;
    BigInt qm = big_pow(q, (unsigned long)m);
    for (int i = 1; i <= m; ++i) {
        BigInt w = qm - big_pow(q, (unsigned long)(m - i));
        d.push_back(w.get_si());
    }
    d.push_back(qm.get_si());
    return d;
}

// the elongations are pure of type (0, d_{l+1}, ..., d_{m+1})
inline BettiTable rm1m_betti(long q, int m, int ell) {
    auto d = rm1m_degrees(q, m);
    if (ell < 0 || ell > m) throw OutOfRangeElong("bad elongation");
    std::vector<long> tail(d.begin() + ell, d.end());
    return herzog_kuhl(tail, ell);
}

// --- miscellaneous closed data --------------------------------------------

inline std::vector<long> hamming_weights(long q) {
    if (q == 2) return {1, 2, 3, 4};
    if (q < 2) throw UnsupportedQ("q must be a prime power >= 2");
    long n = q * q;
    return {n - 2 * q, n - q - 1, n - q, n - 2, n - 1, n};
}

// counts of the nullity-2 and nullity-3 configuration families
struct NullityCensus {
    BigInt theta;      // complements of a line plus an outside point (nullity 2)
    BigInt quads;      // complements of 4 points in general position (nullity 2)
    BigInt lines;      // complements of a full affine line (nullity 3)
    BigInt triangles;  // complements of 3 non-collinear points (nullity 3)
};

inline NullityCensus nullity_census(long q) {
    NullityCensus c;
    BigInt n(q * q);
    c.lines = q * q + q;
    c.theta = c.lines * (n - q);
    c.quads = exact_div(n * (n - 1) * (n - q) * (n - 3 * q + 3), BigInt(24));
    c.triangles = exact_div(n * (n - 1) * (n - q), BigInt(6));
    return c;
}

} // namespace hws
