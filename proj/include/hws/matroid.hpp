#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "codes.hpp"

namespace hws {

struct OutOfRangeElong : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct IncompleteInventory : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parity check matroid of a linear code, with elongation level baked in.
// Ground set = column indices of the generator matrix; base nullity
// n(sigma) = k - rank(G restricted to the complement) = dim C(sigma).
class Matroid {
public:
    explicit Matroid(std::shared_ptr<const LinearCode> code, int ell = 0)
        : code_(std::move(code)), ell_(ell) {
        if (code_->n() > 64) throw TooLarge("matroid ground set > 64");
        if (ell < 0 || ell > code_->k()) throw OutOfRangeElong("bad elongation level");
    }

    const LinearCode& code() const { return *code_; }
    std::shared_ptr<const LinearCode> code_ptr() const { return code_; }
    int ground_size() const { return code_->n(); }
    int ell() const { return ell_; }
    // nullity of the full ground set at this elongation
    int corank() const { return std::max(0, code_->k() - ell_); }

    int base_nullity(uint64_t sigma) const {
        std::vector<int> comp;
        for (int j = 0; j < code_->n(); ++j)
            if (!(sigma >> j & 1)) comp.push_back(j);
        return code_->k() - rank_of_columns(code_->generator(), comp);
    }

    int nullity(uint64_t sigma) const {
        return std::max(0, base_nullity(sigma) - ell_);
    }

    Matroid elongate(int dl) const { return Matroid(code_, ell_ + dl); }

private:
    std::shared_ptr<const LinearCode> code_;
    int ell_;
};

// Inclusion-minimal member of some N_i, tagged with its base nullity.
struct Cycle {
    uint64_t sigma;
    int nullity;     // base nullity (elongation 0)
    int cardinality;
};

enum class InventoryMethod { SubsetScan, SubcodeSupports };

// All cycles of the base matroid (every elongation's cycles are the subset
// with nullity >= ell+1).  Sorted by cardinality.
inline std::vector<Cycle> cycle_inventory(const Matroid& m, InventoryMethod method,
                                          const BruteForceOptions& opt = {}) {
    const LinearCode& c = m.code();
    int n = c.n(), k = c.k();
    std::vector<Cycle> cycles;
    if (method == InventoryMethod::SubsetScan) {
        if (n > 25) throw TooLarge("subset scan needs n <= 25");
        std::vector<int8_t> null_table(size_t(1) << n);
        std::vector<int> comp;
        comp.reserve(n);
        for (uint64_t s = 0; s < (uint64_t(1) << n); ++s) {
            comp.clear();
            for (int j = 0; j < n; ++j)
                if (!(s >> j & 1)) comp.push_back(j);
            null_table[s] = int8_t(k - rank_of_columns(c.generator(), comp));
        }
        for (uint64_t s = 1; s < (uint64_t(1) << n); ++s) {
            int v = null_table[s];
            if (v == 0) continue;
            bool minimal = true;
            for (int j = 0; j < n && minimal; ++j)
                if (s >> j & 1)
                    if (null_table[s & ~(uint64_t(1) << j)] == v) minimal = false;
            if (minimal) cycles.push_back({s, v, popcount64(s)});
        }
    } else {
        // supports of all r-dimensional subcodes, deduplicated, then
        // minimality-filtered per nullity class
        const auto& masks = c.support_masks();
        std::unordered_set<uint64_t> supports;
        for (int r = 1; r <= k; ++r) {
            if (gaussian_binomial(k, r, c.q()) > opt.budget_per_r)
                throw TooLarge("subcode support enumeration over budget");
            SubcodeIterator it(c.q(), k, r);
            for (int p = 0; p < it.num_patterns(); ++p)
                it.visit(p, 0, it.assignments(p), [&](const std::vector<uint64_t>& rows) {
                    uint64_t msk = 0;
                    for (uint64_t ri : rows) msk |= masks[ri];
                    supports.insert(msk);
                });
        }
        std::vector<Cycle> cand;
        for (uint64_t s : supports)
            cand.push_back({s, m.base_nullity(s), popcount64(s)});
        std::sort(cand.begin(), cand.end(),
                  [](const Cycle& a, const Cycle& b) { return a.cardinality < b.cardinality; });
        // per nullity class: keep sets containing no smaller kept set of the
        // same nullity
        std::map<int, std::vector<uint64_t>> kept;
        for (const auto& cy : cand) {
            bool minimal = true;
            for (uint64_t t : kept[cy.nullity])
                if ((t & cy.sigma) == t && t != cy.sigma) { minimal = false; break; }
            if (minimal) {
                kept[cy.nullity].push_back(cy.sigma);
                cycles.push_back(cy);
            }
        }
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const Cycle& a, const Cycle& b) { return a.cardinality < b.cardinality; });
    return cycles;
}

// Moebius values for every cycle of the given elongation:
// mu(sigma) = -1 - sum over cycles strictly inside sigma.
// Input inventory must be the full base inventory.
inline std::unordered_map<uint64_t, BigInt> mobius_all(const std::vector<Cycle>& inventory,
                                                       int ell) {
    std::vector<const Cycle*> cyc;
    for (const auto& c : inventory)
        if (c.nullity >= ell + 1) cyc.push_back(&c);
    // inventory is sorted by cardinality
    std::unordered_map<uint64_t, BigInt> mu;
    mu.reserve(cyc.size() * 2);
    for (size_t i = 0; i < cyc.size(); ++i) {
        BigInt v = -1;
        for (size_t j = 0; j < i; ++j) {
            if (cyc[j]->cardinality >= cyc[i]->cardinality) break;
            if ((cyc[j]->sigma & cyc[i]->sigma) == cyc[j]->sigma) v -= mu[cyc[j]->sigma];
        }
        mu[cyc[i]->sigma] = v;
    }
    return mu;
}

// mu of a single cycle from a complete inventory (errors if the inventory
// misses a contained cycle -- detected by recomputation mismatch downstream).
inline BigInt mobius(const Matroid& m, uint64_t sigma, const std::vector<Cycle>& inventory) {
    auto mu = mobius_all(inventory, m.ell());
    auto it = mu.find(sigma);
    if (it == mu.end()) throw IncompleteInventory("sigma is not in the cycle inventory");
    return it->second;
}

// Local Moebius value of one cycle computed from the restriction: the cycles
// inside sigma are the supports of subcodes of C(sigma).  Cheap whenever the
// nullity of sigma is small.
inline BigInt mobius_local(const Matroid& m, uint64_t sigma) {
    const LinearCode& c = m.code();
    const FiniteField& F = c.field();
    int n = c.n(), k = c.k();
    // basis of C(sigma): left kernel of the complement columns
    std::vector<int> comp;
    for (int j = 0; j < n; ++j)
        if (!(sigma >> j & 1)) comp.push_back(j);
    FFMatrix sub(c.field_ptr(), k, int(comp.size()));
    for (int i = 0; i < k; ++i)
        for (size_t j = 0; j < comp.size(); ++j) sub.set(i, int(j), c.generator().at(i, comp[j]));
    auto kernel = left_kernel(sub); // messages of codewords supported in sigma
    int nu = int(kernel.size());
    // supports of all subcodes of the restricted code
    std::unordered_set<uint64_t> supports;
    long q = c.q();
    for (int r = 1; r <= nu; ++r) {
        SubcodeIterator it(q, nu, r);
        for (int p = 0; p < it.num_patterns(); ++p)
            it.visit(p, 0, it.assignments(p), [&](const std::vector<uint64_t>& rows) {
                uint64_t msk = 0;
                for (uint64_t ri : rows) {
                    // combine kernel basis rows per packed coefficient vector
                    std::vector<long> msg(k, 0);
                    uint64_t t = ri;
                    for (int b = 0; b < nu; ++b) {
                        long d = long(t % q);
                        t /= q;
                        if (d)
                            for (int i = 0; i < k; ++i)
                                msg[i] = F.add(msg[i], F.mul(d, kernel[b][i]));
                    }
                    msk |= c.codeword_support(msg);
                }
                supports.insert(msk);
            });
    }
    std::vector<Cycle> cand;
    Matroid base(m.code_ptr(), 0);
    for (uint64_t s : supports) cand.push_back({s, base.base_nullity(s), popcount64(s)});
    std::sort(cand.begin(), cand.end(),
              [](const Cycle& a, const Cycle& b) { return a.cardinality < b.cardinality; });
    std::vector<Cycle> local;
    std::map<int, std::vector<uint64_t>> kept;
    for (const auto& cy : cand) {
        bool minimal = true;
        for (uint64_t t : kept[cy.nullity])
            if ((t & cy.sigma) == t && t != cy.sigma) { minimal = false; break; }
        if (minimal) {
            kept[cy.nullity].push_back(cy.sigma);
            local.push_back(cy);
        }
    }
    return mobius(m, sigma, local);
}

// Signed sum over independent subsets of sigma (elongated matroid); equals
// -chi~ of the independence complex, so |result| validates beta_{i,sigma}.
inline BigInt euler_characteristic(const Matroid& m, uint64_t sigma) {
    std::vector<int> elems;
    for (int j = 0; j < m.ground_size(); ++j)
        if (sigma >> j & 1) elems.push_back(j);
    int t = int(elems.size());
    if (t > 20) throw TooLarge("euler characteristic needs |sigma| <= 20");
    BigInt chi = 0;
    for (uint64_t s = 0; s < (uint64_t(1) << t); ++s) {
        uint64_t sub = 0;
        for (int j = 0; j < t; ++j)
            if (s >> j & 1) sub |= uint64_t(1) << elems[j];
        if (m.nullity(sub) == 0)
            chi += (popcount64(sub) % 2 == 1) ? BigInt(1) : BigInt(-1);
    }
    return chi;
}

// (l, j) -> phi with convention rows; built by the resolution layer.
struct PhiProfile {
    int k = 0;
    long n = 0;
    std::map<std::pair<int, long>, BigInt> phi; // (ell, j)
    BigInt at(int ell, long j) const {
        if (ell < 0) return 0;
        if (ell >= k) return j == 0 ? 1 : 0;
        auto it = phi.find({ell, j});
        return it == phi.end() ? BigInt(0) : it->second;
    }
};

// Elongation-ell graded Betti table.
struct BettiTable {
    int ell = 0;
    std::map<std::pair<int, long>, BigInt> b; // (i, j) -> beta, i >= 1
    BigInt at(int i, long j) const {
        if (i == 0) return j == 0 ? 1 : 0;
        auto it = b.find({i, j});
        return it == b.end() ? BigInt(0) : it->second;
    }
    void set(int i, long j, const BigInt& v) {
        if (v == 0) b.erase({i, j});
        else b[{i, j}] = v;
    }
    bool operator==(const BettiTable& o) const { return ell == o.ell && b == o.b; }
};

// Full N-graded table for one elongation from a complete base inventory.
inline BettiTable betti_table_from_inventory(const std::vector<Cycle>& inventory, int ell) {
    BettiTable t;
    t.ell = ell;
    auto mu = mobius_all(inventory, ell);
    for (const auto& c : inventory) {
        if (c.nullity < ell + 1) continue;
        int i = c.nullity - ell;
        BigInt v = mu[c.sigma];
        t.b[{i, long(c.cardinality)}] += abs(v);
    }
    return t;
}

inline PhiProfile phi_profile(const std::vector<BettiTable>& tables, int k, long n) {
    PhiProfile p;
    p.k = k;
    p.n = n;
    for (const auto& t : tables) {
        std::map<long, BigInt> col;
        col[0] = 1;
        for (auto& [ij, v] : t.b) {
            if (ij.first % 2 == 0) col[ij.second] += v;
            else col[ij.second] -= v;
        }
        for (auto& [j, v] : col)
            if (v != 0) p.phi[{t.ell, j}] = v;
    }
    return p;
}

} // namespace hws
