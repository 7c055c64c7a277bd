#pragma once

#include <map>
#include <set>
#include <vector>

#include "codes.hpp"
#include "matroid.hpp"

namespace hws {

struct NonIntegralSpectrum : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NegativeSpectrum : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MissingRow : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Poly = std::vector<BigInt>; // coefficient i belongs to Z^i

inline BigInt eval_poly(const Poly& p, const BigInt& z) {
    BigInt v = 0;
    for (size_t i = p.size(); i-- > 0;) v = v * z + p[i];
    return v;
}

inline void trim_poly(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// w -> P_w(Z); zero polynomials are absent keys
struct GwpFamily {
    int k = 0;
    long q = 0;
    std::map<long, Poly> p;
    Poly at(long w) const {
        auto it = p.find(w);
        return it == p.end() ? Poly{} : it->second;
    }
};

// P_w(Z) = sum_l (phi_w^(l) - phi_w^(l-1)) Z^l over l = 0..k, using the
// profile's convention rows phi^(-1) = 0 and phi^(k) = [w = 0].
inline GwpFamily gwp_assemble(const PhiProfile& profile, long q) {
    GwpFamily fam;
    fam.k = profile.k;
    fam.q = q;
    std::set<long> ws;
    ws.insert(0);
    for (auto& [lj, v] : profile.phi) ws.insert(lj.second);
    for (long w : ws) {
        Poly poly(profile.k + 1, 0);
        for (int l = 0; l <= profile.k; ++l) poly[l] = profile.at(l, w) - profile.at(l - 1, w);
        trim_poly(poly);
        if (!poly.empty()) fam.p[w] = std::move(poly);
    }
    return fam;
}

// product basis b_r(Z) = prod_{i<r} (Z - q^i)
inline Poly falling_basis(long q, int r) {
    Poly b{1};
    BigInt qi = 1;
    for (int i = 0; i < r; ++i) {
        Poly nb(b.size() + 1, 0);
        for (size_t t = 0; t < b.size(); ++t) {
            nb[t + 1] += b[t];
            nb[t] -= b[t] * qi;
        }
        b = std::move(nb);
        qi *= q;
    }
    return b;
}

// Triangular inversion of P_w(q^e) = sum_r A_w^(r) prod_{i<r} (q^e - q^i).
inline SpectrumTable gwp_invert(const GwpFamily& fam) {
    SpectrumTable out;
    long q = fam.q;
    int k = fam.k;
    // prod_{i<r}(q^e - q^i) evaluated lazily
    for (auto& [w, poly] : fam.p) {
        std::vector<BigInt> a(k + 1, 0);
        BigInt qe = 1;
        for (int e = 0; e <= k; ++e, qe *= q) {
            BigInt rest = eval_poly(poly, qe);
            BigInt prod = 1, qi = 1;
            for (int r = 0; r < e; ++r) {
                rest -= a[r] * prod;
                prod *= (qe - qi);
                qi *= q;
            }
            // prod now equals prod_{i<e}(q^e - q^i), nonzero
            BigInt rem;
            BigInt val;
            mpz_tdiv_qr(val.get_mpz_t(), rem.get_mpz_t(), rest.get_mpz_t(), prod.get_mpz_t());
            if (rem != 0) throw NonIntegralSpectrum("inexact inversion at w=" + std::to_string(w));
            if (val < 0) throw NegativeSpectrum("negative count at w=" + std::to_string(w));
            a[e] = val;
            out.add(e, w, val);
        }
    }
    return out;
}

// Forward direction: P_w(Z) = sum_r A_w^(r) b_r(Z).
inline GwpFamily spectra_to_gwp(const SpectrumTable& t, long q, int k) {
    GwpFamily fam;
    fam.k = k;
    fam.q = q;
    std::vector<Poly> basis;
    for (int r = 0; r <= k; ++r) basis.push_back(falling_basis(q, r));
    for (auto& [rw, a] : t.cells()) {
        auto [r, w] = rw;
        if (r > k) throw MissingRow("spectrum row above k");
        Poly& poly = fam.p[w];
        poly.resize(k + 1, 0);
        for (size_t i = 0; i < basis[r].size(); ++i) poly[i] += a * basis[r][i];
    }
    for (auto it = fam.p.begin(); it != fam.p.end();) {
        trim_poly(it->second);
        if (it->second.empty()) it = fam.p.erase(it);
        else ++it;
    }
    return fam;
}

// W_r(X, Y) coefficients of Y^w, w = 0..n.
inline std::vector<BigInt> spectrum_polynomial(const SpectrumTable& t, int r, long n) {
    bool found = (r == 0);
    std::vector<BigInt> coeff(n + 1, 0);
    if (r == 0) coeff[0] = 1;
    for (auto& [rw, a] : t.cells())
        if (rw.first == r) {
            coeff[rw.second] = a;
            found = true;
        }
    if (!found) throw MissingRow("no spectrum row r=" + std::to_string(r));
    return coeff;
}

struct ExtensionMismatch {
    long w;
    BigInt predicted;
    BigInt actual;
};

// P_w(q^m) must count the weight-w words of the degree-m extension code.
inline std::vector<ExtensionMismatch> extension_check(const LinearCode& c, int m,
                                                      const GwpFamily& fam) {
    LinearCode ext = extend_code(c, m);
    auto wd = weight_distribution(ext);
    BigInt zm = big_pow(c.q(), (unsigned long)m);
    std::vector<ExtensionMismatch> bad;
    for (long w = 0; w <= c.n(); ++w) {
        BigInt predicted = eval_poly(fam.at(w), zm);
        BigInt actual = wd.count(w) ? wd[w] : BigInt(0);
        if (predicted != actual) bad.push_back({w, predicted, actual});
    }
    return bad;
}

} // namespace hws
