#pragma once

#include <vector>

#include "matroid.hpp"

namespace hws {

struct NonIntegralSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NegativeBetti : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BSViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// phi column sums of a table, j=0 included via beta_{0,0} = 1
inline std::map<long, BigInt> phi_of(const BettiTable& t) {
    std::map<long, BigInt> phi;
    phi[0] = 1;
    for (auto& [ij, v] : t.b) {
        if (ij.first % 2 == 0) phi[ij.second] += v;
        else phi[ij.second] -= v;
    }
    return phi;
}

// residuals of sum_j j^s phi_j = 0 for s = 0..corank-1
inline std::vector<BigInt> bs_residuals(const BettiTable& t, int corank) {
    auto phi = phi_of(t);
    std::vector<BigInt> res;
    for (int s = 0; s < corank; ++s) {
        BigInt r = 0;
        for (auto& [j, v] : phi) {
            if (j == 0) { if (s == 0) r += v; continue; }
            r += v * big_pow(j, (unsigned long)s);
        }
        res.push_back(r);
    }
    return res;
}

inline bool bs_verify(const BettiTable& t, int corank) {
    for (auto& r : bs_residuals(t, corank))
        if (r != 0) return false;
    return true;
}

// Unknown slot: the single missing beta entry of column j sits in
// homological degree i.
struct UnknownColumn {
    long j;
    int i;
};

// Complete a partially known table using the alternating-sum identities.
// The knowns (already present in `partial`, including any other beta in an
// unknown's column) contribute to the right hand side; each unknown is one
// beta value.  Requires #unknowns <= corank and a unique solution.
inline BettiTable bs_solve(const BettiTable& partial, int corank,
                           const std::vector<UnknownColumn>& unknowns) {
    auto phi = phi_of(partial);
    size_t m = unknowns.size();
    if (m == 0) {
        if (!bs_verify(partial, corank)) throw BSViolation("known table fails the identities");
        return partial;
    }
    std::vector<std::vector<BigRat>> a(corank, std::vector<BigRat>(m));
    std::vector<BigRat> rhs(corank);
    for (int s = 0; s < corank; ++s) {
        BigInt r = 0;
        for (auto& [j, v] : phi) {
            if (j == 0) { if (s == 0) r += v; continue; }
            r += v * big_pow(j, (unsigned long)s);
        }
        rhs[s] = BigRat(-r);
        for (size_t u = 0; u < m; ++u) {
            BigInt c = (unknowns[u].j == 0 && s > 0) ? BigInt(0)
                                                     : big_pow(unknowns[u].j, (unsigned long)s);
            if (unknowns[u].i % 2 != 0) c = -c;
            a[s][u] = BigRat(c);
        }
    }
    auto x = solve_exact(a, rhs);
    BettiTable out = partial;
    for (size_t u = 0; u < m; ++u) {
        if (!is_integral(x[u])) throw NonIntegralSolution("non-integral Betti number");
        BigRat c = x[u];
        c.canonicalize();
        BigInt v = c.get_num();
        if (v < 0) throw NegativeBetti("negative Betti number at j=" + std::to_string(unknowns[u].j));
        out.b[{unknowns[u].i, unknowns[u].j}] += v;
    }
    if (!bs_verify(out, corank)) throw BSViolation("solved table fails the identities");
    return out;
}

// Pure resolution with internal degrees 0 < d_1 < ... < d_c: the identities
// determine every beta uniquely (c equations, c unknowns).
inline BettiTable herzog_kuhl(const std::vector<long>& degrees, int ell = 0) {
    BettiTable t;
    t.ell = ell;
    std::vector<UnknownColumn> unknowns;
    for (size_t i = 0; i < degrees.size(); ++i) unknowns.push_back({degrees[i], int(i) + 1});
    return bs_solve(t, int(degrees.size()), unknowns);
}

// Graded Betti table of the uniform matroid U(s, n):
// beta_{i, s+i} = C(s+i-1, s) * C(n, s+i) for i = 1..n-s.
inline BettiTable uniform_betti(long s, long n, int ell = 0) {
    BettiTable t;
    t.ell = ell;
    for (long i = 1; i + s <= n; ++i)
        t.set(int(i), s + i, binomial(s + i - 1, s) * binomial(n, s + i));
    return t;
}

} // namespace hws
