#pragma once

#include <memory>
#include <sstream>

#include "codes.hpp"
#include "matroid.hpp"

namespace hws {

// affine evaluation code of polynomials of total degree <= d in m variables
inline LinearCode build_rm_affine(long q, int d, int m) {
    if (d >= q) throw DegreeTooLarge("affine monomial basis requires d < q");
    auto F = make_field_q(q);
    long n = 1;
    for (int i = 0; i < m; ++i) n *= q;
    if (n > 64) throw TooLarge("affine ground set > 64");
    std::vector<std::vector<int>> monos;
    std::vector<int> cur(m, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == m) { monos.push_back(cur); return; }
        for (int t = left; t >= 0; --t) { cur[pos] = t; self(self, pos + 1, left - t); }
    };
    rec(rec, 0, d);
    FFMatrix g(F, int(monos.size()), int(n));
    for (long pt = 0; pt < n; ++pt) {
        std::vector<long> x(m);
        long t = pt;
        for (int i = 0; i < m; ++i) { x[i] = t % q; t /= q; }
        for (int i = 0; i < int(monos.size()); ++i) {
            long v = 1;
            for (int c = 0; c < m; ++c)
                for (int e = 0; e < monos[i][c]; ++e) v = F->mul(v, x[c]);
            g.set(i, int(pt), v);
        }
    }
    return LinearCode(std::move(g), "RM_" + std::to_string(q) + "(" + std::to_string(d) +
                                        "," + std::to_string(m) + ")");
}

struct CorrespondenceReport {
    long q = 0;
    int d = 0, m = 0;
    long n_affine = 0, n_proj = 0;
    // minimal_affine[i] / minimal_proj[i]: inclusion-minimal sets of nullity i,
    // as bit masks over the respective ground sets
    std::vector<std::vector<uint64_t>> minimal_affine, minimal_proj;
    bool direction_a = false; // every affine minimal set is m1 ∩ E2 for a
                              // projective minimal set m1 of the same nullity
    bool direction_b = false; // every projective minimal set meets E2 in an
                              // affine minimal set of nullity j >= i
    std::vector<int> witness_j; // per projective minimal set, flattened over i
    BigInt dual_rank_affine, dual_rank_proj;
    std::string counterexample;
    bool ok() const {
        return direction_a && direction_b && counterexample.empty() &&
               dual_rank_affine == dual_rank_proj;
    }
};

inline std::vector<std::vector<uint64_t>> minimal_nullity_sets(const Matroid& m) {
    long n = m.code().n();
    int k = m.code().k();
    if (n > 24) throw TooLarge("full subset scan needs n <= 24");
    std::vector<int> nul(size_t(1) << n);
    for (uint64_t s = 0; s < (uint64_t(1) << n); ++s) nul[s] = m.nullity(s);
    std::vector<std::vector<uint64_t>> out(k + 1);
    for (uint64_t s = 0; s < (uint64_t(1) << n); ++s) {
        int i = nul[s];
        if (i == 0) continue;
        bool minimal = true;
        for (long e = 0; e < n && minimal; ++e)
            if ((s >> e) & 1)
                if (nul[s & ~(1ULL << e)] == i) minimal = false;
        if (minimal) out[i].push_back(s);
    }
    return out;
}

inline CorrespondenceReport verify_correspondence(long q, int d, int m) {
    CorrespondenceReport rep;
    rep.q = q;
    rep.d = d;
    rep.m = m;
    auto affine = std::make_shared<LinearCode>(build_rm_affine(q, d, m));
    auto proj = std::make_shared<LinearCode>(build_prm(q, d, m));
    rep.n_affine = affine->n();
    rep.n_proj = proj->n();
    rep.dual_rank_affine = affine->k(); // rank of the dual matroid
    rep.dual_rank_proj = proj->k();
    Matroid ma(affine, 0), mp(proj, 0);
    rep.minimal_affine = minimal_nullity_sets(ma);
    rep.minimal_proj = minimal_nullity_sets(mp);
    uint64_t e2 = (rep.n_affine == 64) ? ~0ULL : (1ULL << rep.n_affine) - 1;

    auto is_minimal_of = [&](uint64_t s, int i) {
        const auto& lst = rep.minimal_affine[i];
        return std::find(lst.begin(), lst.end(), s) != lst.end();
    };

    rep.direction_a = true;
    for (int i = 1; i < (int)rep.minimal_affine.size() && rep.direction_a; ++i)
        for (uint64_t m2 : rep.minimal_affine[i]) {
            bool found = false;
            if (i < (int)rep.minimal_proj.size())
                for (uint64_t m1 : rep.minimal_proj[i])
                    if ((m1 & e2) == m2) { found = true; break; }
            if (!found) {
                rep.direction_a = false;
                std::ostringstream os;
                os << "affine minimal set 0x" << std::hex << m2 << std::dec
                   << " of nullity " << i << " has no projective lift";
                rep.counterexample = os.str();
                break;
            }
        }

    rep.direction_b = true;
    for (int i = 1; i < (int)rep.minimal_proj.size() && rep.direction_b; ++i)
        for (uint64_t m1 : rep.minimal_proj[i]) {
            int j = -1;
            for (int jj = i; jj < (int)rep.minimal_affine.size(); ++jj)
                if (is_minimal_of(m1 & e2, jj)) { j = jj; break; }
            if (j < 0) {
                rep.direction_b = false;
                std::ostringstream os;
                os << "projective minimal set 0x" << std::hex << m1 << std::dec
                   << " of nullity " << i << " does not restrict to a minimal set";
                rep.counterexample = os.str();
                break;
            }
            rep.witness_j.push_back(j);
        }
    return rep;
}

} // namespace hws
