#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bigint.hpp"
#include "finite_field.hpp"

namespace hws {

// Dense row-major matrix over a finite field; entries are canonical element
// encodings.
class FFMatrix {
public:
    FFMatrix() : F_(nullptr), rows_(0), cols_(0) {}
    FFMatrix(std::shared_ptr<const FiniteField> F, int rows, int cols)
        : F_(std::move(F)), rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FiniteField& field() const { return *F_; }
    std::shared_ptr<const FiniteField> field_ptr() const { return F_; }

    long at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
    void set(int r, int c, long v) { a_[size_t(r) * cols_ + c] = v; }

    bool operator==(const FFMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    std::shared_ptr<const FiniteField> F_;
    int rows_, cols_;
    std::vector<long> a_;
};

struct RrefResult {
    FFMatrix mat;
    int rank;
    std::vector<int> pivots;
};

inline RrefResult rref(const FFMatrix& m) {
    FFMatrix a = m;
    const FiniteField& F = a.field();
    int rows = a.rows(), cols = a.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) {
                long t = a.at(r, j);
                a.set(r, j, a.at(piv, j));
                a.set(piv, j, t);
            }
        long iv = F.inv(a.at(r, c));
        if (iv != 1)
            for (int j = 0; j < cols; ++j) a.set(r, j, F.mul(iv, a.at(r, j)));
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            long f = a.at(i, c);
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j)
                a.set(i, j, F.sub(a.at(i, j), F.mul(f, a.at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), r, std::move(pivots)};
}

inline int rank(const FFMatrix& m) { return rref(m).rank; }

// Rank of the submatrix formed by a column subset (hot path for nullity
// oracles: plain elimination on a scratch copy, no normalization).
inline int rank_of_columns(const FFMatrix& g, const std::vector<int>& cols) {
    const FiniteField& F = g.field();
    int rows = g.rows(), nc = int(cols.size());
    if (nc == 0 || rows == 0) return 0;
    std::vector<long> a(size_t(rows) * nc);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < nc; ++j) a[size_t(i) * nc + j] = g.at(i, cols[j]);
    int r = 0;
    for (int c = 0; c < nc && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[size_t(i) * nc + c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < nc; ++j)
                std::swap(a[size_t(r) * nc + j], a[size_t(piv) * nc + j]);
        long iv = F.inv(a[size_t(r) * nc + c]);
        for (int i = r + 1; i < rows; ++i) {
            long f = a[size_t(i) * nc + c];
            if (f == 0) continue;
            long fi = F.mul(f, iv);
            for (int j = c; j < nc; ++j)
                a[size_t(i) * nc + j] =
                    F.sub(a[size_t(i) * nc + j], F.mul(fi, a[size_t(r) * nc + j]));
        }
        ++r;
    }
    return r;
}

// Basis of the left kernel {x : x*M = 0}, returned as row vectors.
inline std::vector<std::vector<long>> left_kernel(const FFMatrix& m) {
    const FiniteField& F = m.field();
    // kernel of the transpose: solve M^T x = 0
    FFMatrix t(m.field_ptr(), m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t.set(j, i, m.at(i, j));
    auto rr = rref(t);
    std::vector<bool> is_pivot(m.rows(), false);
    for (int c : rr.pivots) is_pivot[c] = true;
    std::vector<std::vector<long>> basis;
    for (int c = 0; c < m.rows(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<long> v(m.rows(), 0);
        v[c] = 1;
        for (int r = 0; r < int(rr.pivots.size()); ++r)
            v[rr.pivots[r]] = F.neg(rr.mat.at(r, c));
        basis.push_back(std::move(v));
    }
    return basis;
}

struct Underdetermined : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Inconsistent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational solve of A x = b.  Requires a unique solution on the
// consistent part; overdetermined consistent systems are fine.
inline std::vector<BigRat> solve_exact(std::vector<std::vector<BigRat>> a,
                                       std::vector<BigRat> b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    size_t r = 0;
    std::vector<int> pivot_col;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = rows;
        for (size_t i = r; i < rows; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        BigRat iv = 1 / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= iv;
        b[r] *= iv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            BigRat f = a[i][c];
            if (f == 0) continue;
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(int(c));
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (b[i] != 0) throw Inconsistent("solve_exact: inconsistent system");
    if (r < cols) throw Underdetermined("solve_exact: rank-deficient system");
    std::vector<BigRat> x(cols);
    for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

} // namespace hws
