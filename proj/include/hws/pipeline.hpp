#pragma once

#include <memory>

#include "codes.hpp"
#include "formulas.hpp"
#include "geometry.hpp"
#include "gwp.hpp"
#include "matroid.hpp"
#include "resolution.hpp"

namespace hws {

struct PipelineResult {
    long q = 0;
    int k = 0;
    long n = 0;
    std::vector<BettiTable> tables; // ell = 0..k-1
    PhiProfile phi;
    GwpFamily gwp;
    SpectrumTable spectra;
};

// |mu| of the nullity-2 set ("a line plus an outside point" complement) in the
// base matroid.  Geometric: the proper cycles it contains are exactly the
// complements of the line pairs through the extra point.
inline BigInt theta_mu_geometric(long q) {
    auto conics = enumerate_conics(q);
    auto maximal = maximal_zero_sets(q);
    std::bitset<256> target;
    for (long x = 0; x < q; ++x) target.set(x * q); // line y = 0
    target.set(1);                                  // plus the point (0,1)
    long contained = 0;
    for (const auto& rec : conics) {
        if (!maximal.count(rec.cat)) continue;
        if ((target & rec.zero_set) == target) ++contained;
    }
    return BigInt(contained) - 1;
}

// same quantity from the matroid itself (needs n <= 64)
inline BigInt theta_mu_local(long q) {
    auto code = std::make_shared<LinearCode>(build_rm22(q));
    Matroid m(code, 0);
    uint64_t sigma = ~0ULL >> (64 - q * q);
    for (long x = 0; x < q; ++x) sigma &= ~(1ULL << (x * q)); // drop the line
    sigma &= ~(1ULL << 1);                                    // and the point
    return abs(mobius_local(m, sigma));
}

// Betti tables of every elongation, straight from the cycle inventory.
inline std::vector<BettiTable> matroid_betti_tables(std::shared_ptr<const LinearCode> code,
                                                    InventoryMethod method,
                                                    const BruteForceOptions& opt = {}) {
    int k = code->k();
    std::vector<BettiTable> tables;
    for (int l = 0; l < k; ++l) {
        Matroid m(code, l);
        auto inv = cycle_inventory(m, method, opt);
        tables.push_back(betti_table_from_inventory(inv, l));
    }
    return tables;
}

inline std::vector<BettiTable> small_q_betti(long q, InventoryMethod method,
                                             const BruteForceOptions& opt) {
    return matroid_betti_tables(std::make_shared<LinearCode>(build_rm22(q)), method, opt);
}

// Betti tables for q >= 7: the degree-1 column comes from the conic census,
// the theta column from a local Moebius computation, everything else from the
// numerical conditions on the resolution.
inline std::vector<BettiTable> large_q_betti(long q) {
    long n = q * q;
    auto conics = enumerate_conics(q);
    auto maximal = maximal_zero_sets(q);
    BettiTable beta1;
    for (const auto& rec : conics)
        if (maximal.count(rec.cat)) beta1.set(1, n - rec.affine_zeros,
                                              beta1.at(1, n - rec.affine_zeros) + 1);
    BigInt theta_mu = (q <= 8) ? theta_mu_local(q) : theta_mu_geometric(q);
    auto cen = nullity_census(q);

    std::vector<BettiTable> tables;
    { // ell = 0
        BettiTable partial = beta1;
        partial.ell = 0;
        partial.set(2, n - q - 1, cen.theta * theta_mu);
        std::vector<UnknownColumn> unk = {{n - 4, 2}, {n - q, 3}, {n - 3, 3},
                                          {n - 2, 4}, {n - 1, 5}, {n, 6}};
        tables.push_back(bs_solve(partial, 6, unk));
    }
    { // ell = 1: minimal cycles are the theta sets and the 4-point quadrilaterals
        BettiTable partial;
        partial.ell = 1;
        partial.set(1, n - q - 1, cen.theta);
        partial.set(1, n - 4, cen.quads);
        std::vector<UnknownColumn> unk = {{n - q, 2}, {n - 3, 2}, {n - 2, 3},
                                          {n - 1, 4}, {n, 5}};
        tables.push_back(bs_solve(partial, 5, unk));
    }
    { // ell = 2: minimal cycles are full lines and triangles
        BettiTable partial;
        partial.ell = 2;
        partial.set(1, n - q, cen.lines);
        partial.set(1, n - 3, cen.triangles);
        std::vector<UnknownColumn> unk = {{n - 2, 2}, {n - 1, 3}, {n, 4}};
        tables.push_back(bs_solve(partial, 4, unk));
    }
    for (int l = 3; l <= 5; ++l) tables.push_back(uniform_betti(n - (6 - l), n, l));
    return tables;
}

inline PipelineResult run_pipeline(long q, int threads = 1) {
    factor_prime_power(q);
    PipelineResult res;
    res.q = q;
    res.k = (q == 2) ? 4 : 6;
    res.n = q * q;
    if (q <= 4) {
        res.tables = small_q_betti(q, InventoryMethod::SubsetScan, {});
    } else if (q == 5) {
        BruteForceOptions opt;
        opt.threads = threads;
        res.tables = small_q_betti(q, InventoryMethod::SubcodeSupports, opt);
    } else if (q <= 9) {
        res.tables = large_q_betti(q);
    } else {
        throw UnsupportedQ("pipeline supports q <= 9");
    }
    res.phi = phi_profile(res.tables, res.k, res.n);
    res.gwp = gwp_assemble(res.phi, q);
    res.spectra = gwp_invert(res.gwp);
    return res;
}

} // namespace hws
