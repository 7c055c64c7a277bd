#pragma once

#include <array>
#include <bitset>
#include <map>
#include <set>
#include <vector>

#include "codes.hpp"

namespace hws {

struct ZeroForm : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class ProjClass { DoubleLine, LinePair, Irreducible, ConjugatePair };

// affine categories a..j
enum class ConicCat : int { a, b, c, d, e, f, g, h, i, j };

inline char cat_letter(ConicCat c) { return char('a' + int(c)); }

// coefficients in the monomial order (x^2, xy, xz, y^2, yz, z^2),
// first nonzero scaled to 1
struct ConicRecord {
    std::array<long, 6> coeff;
    ProjClass cls;
    ConicCat cat;
    int proj_zeros;
    int affine_zeros;
    std::bitset<256> zero_set; // affine zero mask, point index x*q+y
};

inline long conic_eval(const FiniteField& F, const std::array<long, 6>& c, long x, long y,
                       long z) {
    long v = F.mul(c[0], F.mul(x, x));
    v = F.add(v, F.mul(c[1], F.mul(x, y)));
    v = F.add(v, F.mul(c[2], F.mul(x, z)));
    v = F.add(v, F.mul(c[3], F.mul(y, y)));
    v = F.add(v, F.mul(c[4], F.mul(y, z)));
    v = F.add(v, F.mul(c[5], F.mul(z, z)));
    return v;
}

// Classification is purely point-set based (point counts, collinearity,
// intersection with the line z = 0), valid in every characteristic.
inline ConicRecord classify_conic(const FiniteField& F, const std::array<long, 6>& c) {
    long q = F.q();
    bool nonzero = false;
    for (long v : c) nonzero = nonzero || v != 0;
    if (!nonzero) throw ZeroForm("zero quadratic form");
    ConicRecord rec;
    rec.coeff = c;
    // projective zeros: affine part (x, y, 1) then (1, t, 0) then (0, 1, 0)
    std::vector<std::array<long, 3>> zeros;
    rec.zero_set.reset();
    for (long x = 0; x < q; ++x)
        for (long y = 0; y < q; ++y)
            if (conic_eval(F, c, x, y, 1) == 0) {
                zeros.push_back({x, y, 1});
                rec.zero_set.set(size_t(x * q + y));
            }
    rec.affine_zeros = int(zeros.size());
    int at_infinity = 0;
    for (long t = 0; t < q; ++t)
        if (conic_eval(F, c, 1, t, 0) == 0) { zeros.push_back({1, t, 0}); ++at_infinity; }
    if (conic_eval(F, c, 0, 1, 0) == 0) { zeros.push_back({0, 1, 0}); ++at_infinity; }
    rec.proj_zeros = int(zeros.size());

    auto collinear = [&](const std::vector<std::array<long, 3>>& pts) {
        if (pts.size() <= 2) return true;
        // line through pts[0], pts[1] via cross product
        const auto& A = pts[0];
        const auto& B = pts[1];
        long l0 = F.sub(F.mul(A[1], B[2]), F.mul(A[2], B[1]));
        long l1 = F.sub(F.mul(A[2], B[0]), F.mul(A[0], B[2]));
        long l2 = F.sub(F.mul(A[0], B[1]), F.mul(A[1], B[0]));
        for (size_t i = 2; i < pts.size(); ++i) {
            long d = F.add(F.add(F.mul(l0, pts[i][0]), F.mul(l1, pts[i][1])),
                           F.mul(l2, pts[i][2]));
            if (d != 0) return false;
        }
        return true;
    };

    if (rec.proj_zeros == 1) {
        rec.cls = ProjClass::ConjugatePair;
        rec.cat = (rec.affine_zeros == 1) ? ConicCat::i : ConicCat::j;
    } else if (rec.proj_zeros == int(2 * q + 1)) {
        rec.cls = ProjClass::LinePair;
        if (at_infinity == int(q + 1)) rec.cat = ConicCat::c;            // F * z
        else if (at_infinity == 2) rec.cat = ConicCat::d;                // meet off L
        else rec.cat = ConicCat::e;                                      // parallel lines
    } else if (rec.proj_zeros == int(q + 1) && collinear(zeros)) {
        rec.cls = ProjClass::DoubleLine;
        rec.cat = (rec.affine_zeros == 0) ? ConicCat::a : ConicCat::b;   // a: z^2 only
    } else {
        rec.cls = ProjClass::Irreducible;
        if (at_infinity == 2) rec.cat = ConicCat::f;       // hyperbola
        else if (at_infinity == 1) rec.cat = ConicCat::g;  // parabola
        else rec.cat = ConicCat::h;                        // ellipse
    }
    return rec;
}

inline std::vector<ConicRecord> enumerate_conics(long q) {
    if (q > 16) throw TooLarge("conic census needs q <= 16");
    auto F = make_field_q(q);
    std::vector<ConicRecord> out;
    // one representative per projective class: first nonzero coefficient = 1
    std::array<long, 6> c{};
    for (int lead = 0; lead < 6; ++lead) {
        c.fill(0);
        c[lead] = 1;
        long tail = 5 - lead;
        long count = 1;
        for (long i = 0; i < tail; ++i) count *= q;
        for (long idx = 0; idx < count; ++idx) {
            long t = idx;
            for (int pos = lead + 1; pos < 6; ++pos) { c[pos] = t % q; t /= q; }
            out.push_back(classify_conic(*F, c));
        }
    }
    return out;
}

struct ConicCensus {
    long q;
    std::map<ConicCat, BigInt> counts;
    SpectrumTable first_spectrum; // row r = 1 from the census
};

inline ConicCensus census(long q) {
    ConicCensus cen;
    cen.q = q;
    auto all = enumerate_conics(q);
    for (const auto& rec : all) {
        cen.counts[rec.cat] += 1;
        cen.first_spectrum.add(1, q * q - rec.affine_zeros, 1);
    }
    cen.first_spectrum.set(0, 0, 1);
    return cen;
}

// Categories all of whose members have inclusion-maximal affine zero sets.
// A set is non-maximal iff strictly contained in another conic's zero set.
inline std::set<ConicCat> maximal_zero_sets(long q) {
    auto all = enumerate_conics(q);
    long n = q * q;
    // bucket zero sets by contained point, largest cardinality first
    std::vector<int> order(all.size());
    for (size_t i = 0; i < all.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return all[x].affine_zeros > all[y].affine_zeros;
    });
    std::vector<std::vector<int>> bucket(n);
    std::map<ConicCat, bool> cat_all_maximal;
    for (const auto& rec : all) cat_all_maximal[rec.cat] = true;
    for (int oi : order) {
        const auto& rec = all[oi];
        if (rec.affine_zeros == 0) {
            cat_all_maximal[rec.cat] = false; // empty set sits inside any nonempty one
            continue;
        }
        int first = -1;
        for (long p = 0; p < n; ++p)
            if (rec.zero_set.test(size_t(p))) { first = int(p); break; }
        bool maximal = true;
        for (int cand : bucket[first]) {
            if (all[cand].affine_zeros <= rec.affine_zeros) break; // sorted descending
            if ((rec.zero_set & all[cand].zero_set) == rec.zero_set) { maximal = false; break; }
        }
        if (!maximal) cat_all_maximal[rec.cat] = false;
        for (long p = 0; p < n; ++p)
            if (rec.zero_set.test(size_t(p))) bucket[p].push_back(oi);
    }
    std::set<ConicCat> out;
    for (auto& [cat, ok] : cat_all_maximal)
        if (ok) out.insert(cat);
    return out;
}

} // namespace hws
