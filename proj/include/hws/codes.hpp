#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "combinatorics.hpp"
#include "matrix.hpp"

namespace hws {

struct DegreeTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// (r, w) -> A_w^(r)
class SpectrumTable {
public:
    void add(int r, long w, const BigInt& c) {
        if (c == 0) return;
        a_[{r, w}] += c;
    }
    void set(int r, long w, const BigInt& c) {
        if (c == 0) a_.erase({r, w});
        else a_[{r, w}] = c;
    }
    BigInt at(int r, long w) const {
        auto it = a_.find({r, w});
        return it == a_.end() ? BigInt(0) : it->second;
    }
    BigInt row_sum(int r) const {
        BigInt s = 0;
        for (auto& [k, v] : a_)
            if (k.first == r) s += v;
        return s;
    }
    const std::map<std::pair<int, long>, BigInt>& cells() const { return a_; }
    bool operator==(const SpectrumTable& o) const { return a_ == o.a_; }

private:
    std::map<std::pair<int, long>, BigInt> a_;
};

class LinearCode {
public:
    LinearCode(FFMatrix gen, std::string label = "")
        : g_(std::move(gen)), label_(std::move(label)) {
        auto rr = rref(g_);
        if (rr.rank != g_.rows())
            throw std::invalid_argument("generator matrix is not full row rank");
    }

    const FFMatrix& generator() const { return g_; }
    const FiniteField& field() const { return g_.field(); }
    std::shared_ptr<const FiniteField> field_ptr() const { return g_.field_ptr(); }
    int k() const { return g_.rows(); }
    int n() const { return g_.cols(); }
    long q() const { return g_.field().q(); }
    const std::string& label() const { return label_; }

    // Support bitmask of the codeword with the given message vector.
    uint64_t codeword_support(const std::vector<long>& msg) const {
        const FiniteField& F = field();
        uint64_t m = 0;
        for (int j = 0; j < n(); ++j) {
            long s = 0;
            for (int i = 0; i < k(); ++i)
                if (msg[i] != 0) s = F.add(s, F.mul(msg[i], g_.at(i, j)));
            if (s != 0) m |= 1ull << j;
        }
        return m;
    }

    // Support masks for all q^k messages, indexed by the base-q packed message.
    // Computed incrementally: mask cache doubles as codeword cache is too big,
    // so we store codewords row by row in a Gray-free direct scheme.
    const std::vector<uint64_t>& support_masks() const {
        if (!masks_.empty()) return masks_;
        if (n() > 64) throw TooLarge("support masks need n <= 64");
        long Q = q();
        double total = 1;
        for (int i = 0; i < k(); ++i) total *= double(Q);
        if (total > double(1 << 24)) throw TooLarge("q^k > 2^24");
        size_t count = 1;
        for (int i = 0; i < k(); ++i) count *= size_t(Q);
        const FiniteField& F = field();
        // field-element delta when a packed digit steps d -> d+1 (or wraps)
        std::vector<long> step(Q);
        for (long d = 0; d + 1 < Q; ++d) step[d] = F.sub(d + 1, d);
        long wrap = F.sub(0, Q - 1);
        std::vector<long> word(n(), 0);
        masks_.assign(count, 0);
        std::vector<long> digits(k(), 0);
        for (size_t idx = 0;; ++idx) {
            uint64_t m = 0;
            for (int j = 0; j < n(); ++j)
                if (word[j] != 0) m |= 1ull << j;
            masks_[idx] = m;
            int i = 0;
            while (i < k() && digits[i] == Q - 1) {
                for (int j = 0; j < n(); ++j)
                    word[j] = F.add(word[j], F.mul(wrap, g_.at(i, j)));
                digits[i] = 0;
                ++i;
            }
            if (i == k()) break;
            for (int j = 0; j < n(); ++j)
                word[j] = F.add(word[j], F.mul(step[digits[i]], g_.at(i, j)));
            ++digits[i];
        }
        return masks_;
    }

private:
    FFMatrix g_;
    std::string label_;
    mutable std::vector<uint64_t> masks_;
};

// --- code builders --------------------------------------------------------

// RM_q(2,2): evaluations of (x^2, xy, xz, y^2, yz, z^2) at the z=1 points of
// the projective plane, i.e. all of A^2_q in lexicographic (x, y) order.
// For q = 2 the xz and yz rows are removed and the code is all of GF(2)^4.
inline LinearCode build_rm22(long q) {
    auto F = make_field_q(q);
    int n = int(q * q);
    FFMatrix g(F, 6, n);
    int col = 0;
    for (long x = 0; x < q; ++x)
        for (long y = 0; y < q; ++y, ++col) {
            g.set(0, col, F->mul(x, x));
            g.set(1, col, F->mul(x, y));
            g.set(2, col, x);
            g.set(3, col, F->mul(y, y));
            g.set(4, col, y);
            g.set(5, col, 1);
        }
    if (q == 2) {
        FFMatrix g2(F, 4, n);
        int keep[4] = {0, 1, 3, 5}; // drop the xz and yz rows
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < n; ++j) g2.set(i, j, g.at(keep[i], j));
        return LinearCode(std::move(g2), "RM_2(2,2)");
    }
    return LinearCode(std::move(g), "RM_" + std::to_string(q) + "(2,2)");
}

// RM_q(1,m): evaluations of (1, X_1, ..., X_m) at all points of GF(q)^m.
inline LinearCode build_rm1m(long q, int m) {
    auto F = make_field_q(q);
    double nd = 1;
    for (int i = 0; i < m; ++i) nd *= double(q);
    if (nd > double(1 << 16)) throw TooLarge("q^m > 2^16");
    long n = 1;
    for (int i = 0; i < m; ++i) n *= q;
    FFMatrix g(F, m + 1, int(n));
    for (long pt = 0; pt < n; ++pt) {
        long t = pt;
        g.set(0, int(pt), 1);
        for (int i = 0; i < m; ++i) { g.set(i + 1, int(pt), t % q); t /= q; }
    }
    return LinearCode(std::move(g),
                      "RM_" + std::to_string(q) + "(1," + std::to_string(m) + ")");
}

// Representatives of P^m_q: affine part (last coordinate 1) in lexicographic
// order first, then the hyperplane at infinity, recursively.
inline std::vector<std::vector<long>> projective_points(long q, int m) {
    std::vector<std::vector<long>> pts;
    for (int nz = m; nz >= 0; --nz) {
        // points with coordinate nz equal to 1 and all later coordinates 0
        long count = 1;
        for (int i = 0; i < nz; ++i) count *= q;
        for (long idx = 0; idx < count; ++idx) {
            std::vector<long> p(m + 1, 0);
            long t = idx;
            for (int i = 0; i < nz; ++i) { p[i] = t % q; t /= q; }
            p[nz] = 1;
            pts.push_back(std::move(p));
        }
    }
    return pts;
}

// PRM_q(d,m), d < q: degree-d monomial evaluations at the fixed projective
// representatives.
inline LinearCode build_prm(long q, int d, int m) {
    if (d >= q) throw DegreeTooLarge("PRM requires d < q");
    auto F = make_field_q(q);
    auto pts = projective_points(q, m);
    if (double(pts.size()) > double(1 << 16)) throw TooLarge("projective space too big");
    // monomial exponent vectors of total degree d in m+1 variables
    std::vector<std::vector<int>> monos;
    std::vector<int> cur(m + 1, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == m) { cur[pos] = left; monos.push_back(cur); return; }
        for (int t = left; t >= 0; --t) { cur[pos] = t; self(self, pos + 1, left - t); }
    };
    rec(rec, 0, d);
    FFMatrix g(F, int(monos.size()), int(pts.size()));
    for (int j = 0; j < int(pts.size()); ++j)
        for (int i = 0; i < int(monos.size()); ++i) {
            long v = 1;
            for (int t = 0; t <= m; ++t)
                for (int e = 0; e < monos[i][t]; ++e) v = F->mul(v, pts[j][t]);
            g.set(i, j, v);
        }
    return LinearCode(std::move(g), "PRM_" + std::to_string(q) + "(" +
                                        std::to_string(d) + "," + std::to_string(m) + ")");
}

// Canonical subfield embedding GF(q) -> GF(q^m): prime-field constants map
// identically; otherwise the base generator (the element encoding p) is sent
// to the least root of the base modulus in the extension.
inline LinearCode extend_code(const LinearCode& c, int m) {
    if (m == 1) return c;
    const FiniteField& F = c.field();
    auto E = make_field(F.p(), F.e() * m);
    std::vector<long> embed(F.q());
    if (F.e() == 1) {
        for (long a = 0; a < F.q(); ++a) embed[a] = a;
    } else {
        // least root of the base modulus in E
        long root = -1;
        for (long x = 0; x < E->q() && root < 0; ++x) {
            long acc = 0;
            for (long i = long(F.modulus().size()) - 1; i >= 0; --i)
                acc = E->add(E->mul(acc, x), F.modulus()[i] % F.p());
            if (acc == 0) root = x;
        }
        if (root < 0) throw std::logic_error("no embedding root found");
        for (long a = 0; a < F.q(); ++a) {
            long t = a, img = 0, xp = 1;
            for (long i = 0; i < F.e(); ++i) {
                img = E->add(img, E->mul(t % F.p(), xp));
                t /= F.p();
                xp = E->mul(xp, root);
            }
            embed[a] = img;
        }
    }
    FFMatrix g(E, c.k(), c.n());
    for (int i = 0; i < c.k(); ++i)
        for (int j = 0; j < c.n(); ++j) g.set(i, j, embed[c.generator().at(i, j)]);
    return LinearCode(std::move(g), c.label() + "&" + std::to_string(m));
}

inline std::map<long, BigInt> weight_distribution(const LinearCode& c) {
    const auto& masks = c.support_masks();
    std::map<long, BigInt> wd;
    for (uint64_t m : masks) wd[popcount64(m)] += 1;
    return wd;
}

// --- canonical subspace enumeration --------------------------------------

// Visits every r-dimensional subspace of GF(q)^k exactly once via canonical
// RREF bases; rows are reported as base-q packed message indices.
// Shardable: pattern index p and assignment range split the work.
class SubcodeIterator {
public:
    SubcodeIterator(long q, int k, int r) : q_(q), k_(k), r_(r) {
        std::vector<int> piv(r);
        for (int i = 0; i < r; ++i) piv[i] = i;
        while (true) {
            patterns_.push_back(piv);
            int i = r - 1;
            while (i >= 0 && piv[i] == k - r + i) --i;
            if (i < 0) break;
            ++piv[i];
            for (int j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
        }
    }

    int num_patterns() const { return int(patterns_.size()); }

    // free coordinate slots (row, col) for a pattern, and q^#free
    std::vector<std::pair<int, int>> free_slots(int p) const {
        const auto& piv = patterns_[p];
        std::vector<bool> is_piv(k_, false);
        for (int c : piv) is_piv[c] = true;
        std::vector<std::pair<int, int>> free;
        for (int i = 0; i < r_; ++i)
            for (int j = piv[i] + 1; j < k_; ++j)
                if (!is_piv[j]) free.emplace_back(i, j);
        return free;
    }

    uint64_t assignments(int p) const {
        uint64_t t = 1;
        for (size_t i = 0; i < free_slots(p).size(); ++i) t *= uint64_t(q_);
        return t;
    }

    // Visit assignments [lo, hi) of pattern p; fn receives r packed row
    // message indices.
    template <typename Fn>
    void visit(int p, uint64_t lo, uint64_t hi, Fn&& fn) const {
        const auto& piv = patterns_[p];
        auto free = free_slots(p);
        std::vector<uint64_t> qpow(k_);
        uint64_t f = 1;
        for (int i = 0; i < k_; ++i) { qpow[i] = f; f *= uint64_t(q_); }
        std::vector<uint64_t> rows(r_);
        std::vector<long> digits(free.size(), 0);
        // seed digits for assignment index lo
        uint64_t t = lo;
        for (size_t i = 0; i < free.size(); ++i) { digits[i] = long(t % q_); t /= q_; }
        for (int i = 0; i < r_; ++i) rows[i] = qpow[piv[i]];
        for (size_t i = 0; i < free.size(); ++i)
            rows[free[i].first] += uint64_t(digits[i]) * qpow[free[i].second];
        for (uint64_t idx = lo; idx < hi; ++idx) {
            fn(rows);
            if (idx + 1 == hi) break;
            size_t i = 0;
            while (digits[i] == q_ - 1) {
                rows[free[i].first] -= uint64_t(q_ - 1) * qpow[free[i].second];
                digits[i] = 0;
                ++i;
            }
            ++digits[i];
            rows[free[i].first] += qpow[free[i].second];
        }
    }

private:
    long q_;
    int k_, r_;
    std::vector<std::vector<int>> patterns_;
};

struct BruteForceOptions {
    BigInt budget_per_r = BigInt(100000000); // 10^8 subspaces per dimension
    int threads = 1;
};

// Exact A_w^(r) for 0 <= r <= r_max by exhaustive canonical enumeration.
// Dimensions whose subspace count exceeds the budget are skipped and reported
// in `skipped`.
inline SpectrumTable brute_force_spectra(const LinearCode& c, int r_max,
                                         const BruteForceOptions& opt = {},
                                         std::vector<int>* skipped = nullptr) {
    SpectrumTable out;
    out.set(0, 0, 1);
    const auto& masks = c.support_masks();
    for (int r = 1; r <= std::min(r_max, c.k()); ++r) {
        if (gaussian_binomial(c.k(), r, c.q()) > opt.budget_per_r) {
            if (skipped) skipped->push_back(r);
            continue;
        }
        SubcodeIterator it(c.q(), c.k(), r);
        int nthreads = std::max(1, opt.threads);
        std::vector<std::map<long, uint64_t>> partial(nthreads);
        std::vector<std::thread> pool;
        std::atomic<uint64_t> cursor{0};
        // work units: (pattern, chunk) pairs
        struct Unit { int p; uint64_t lo, hi; };
        std::vector<Unit> units;
        for (int p = 0; p < it.num_patterns(); ++p) {
            uint64_t total = it.assignments(p);
            uint64_t chunk = std::max<uint64_t>(1, total / (uint64_t(nthreads) * 8));
            for (uint64_t lo = 0; lo < total; lo += chunk)
                units.push_back({p, lo, std::min(total, lo + chunk)});
        }
        auto worker = [&](int tid) {
            auto& cnt = partial[tid];
            for (;;) {
                uint64_t u = cursor.fetch_add(1);
                if (u >= units.size()) break;
                const Unit& unit = units[u];
                it.visit(unit.p, unit.lo, unit.hi, [&](const std::vector<uint64_t>& rows) {
                    uint64_t m = 0;
                    for (uint64_t ri : rows) m |= masks[ri];
                    ++cnt[popcount64(m)];
                });
            }
        };
        if (nthreads == 1) worker(0);
        else {
            for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
            for (auto& th : pool) th.join();
        }
        for (auto& cnt : partial)
            for (auto& [w, n] : cnt) out.add(r, w, BigInt((unsigned long)n));
    }
    return out;
}

} // namespace hws
