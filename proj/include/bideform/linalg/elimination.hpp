#pragma once

/**
 * @file elimination.hpp
 * @brief Exact Gauss-Jordan elimination: rank, kernel, determinant, inverse,
 * and an incremental row-space builder.
 *
 * Pivots are chosen over the whole remaining submatrix by minimal
 * ScalarTraits<F>::pivot_cost, which keeps rational heights small on the
 * larger Jacobians. The kernel basis is read off the reduced row echelon
 * form, so it does not depend on the order in which pivots were found once
 * the pivot columns are fixed.
 */

#include <cstddef>
#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bideform/exactfield/scalar.hpp"
#include "bideform/linalg/matrix.hpp"

namespace bideform {

template <class F>
struct RankKernel {
    std::size_t rank = 0;
    std::vector<std::vector<F>> kernel;     ///< each v satisfies m * v = 0
    std::vector<std::size_t> pivot_columns; ///< sorted
};

namespace detail {

template <class F>
struct Rref {
    Matrix<F> r;                             // reduced rows, pivot rows first
    std::vector<std::size_t> pivot_col;      // pivot column of row k
    std::size_t swaps = 0;                   // row transpositions performed
    F pivot_product = F(1);                  // product of pivots before scaling
};

template <class F>
Rref<F> rref(Matrix<F> m) {
    Rref<F> out;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<bool> used(cols, false);
    std::size_t k = 0;
    for (; k < rows; ++k) {
        // Cheapest nonzero pivot in the untouched submatrix.
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = rows, bj = cols;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                if (used[j] || ScalarTraits<F>::is_zero(m(i, j))) continue;
                double c = ScalarTraits<F>::pivot_cost(m(i, j));
                if (c < best) {
                    best = c;
                    bi = i;
                    bj = j;
                }
            }
        if (bi == rows) break;
        if (bi != k) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(k, j), m(bi, j));
            ++out.swaps;
        }
        used[bj] = true;
        out.pivot_col.push_back(bj);
        const F piv = m(k, bj);
        out.pivot_product = out.pivot_product * piv;
        const F inv = F(1) / piv;
        for (std::size_t j = 0; j < cols; ++j)
            if (!ScalarTraits<F>::is_zero(m(k, j))) m(k, j) = m(k, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == k || ScalarTraits<F>::is_zero(m(i, bj))) continue;
            const F f = m(i, bj);
            for (std::size_t j = 0; j < cols; ++j)
                if (!ScalarTraits<F>::is_zero(m(k, j))) m(i, j) -= f * m(k, j);
        }
    }
    out.r = std::move(m);
    return out;
}

}  // namespace detail

/// Rank and an exact kernel basis of m (as a map F^cols -> F^rows).
template <class F>
RankKernel<F> rank_and_kernel(const Matrix<F>& m) {
    RankKernel<F> out;
    const std::size_t cols = m.cols();
    if (m.rows() == 0 || cols == 0) {
        for (std::size_t f = 0; f < cols; ++f) {
            std::vector<F> v(cols, F(0));
            v[f] = F(1);
            out.kernel.push_back(std::move(v));
        }
        return out;
    }
    auto red = detail::rref(m);
    out.rank = red.pivot_col.size();
    std::vector<long> row_of(cols, -1);
    for (std::size_t k = 0; k < red.pivot_col.size(); ++k) row_of[red.pivot_col[k]] = static_cast<long>(k);
    for (std::size_t f = 0; f < cols; ++f) {
        if (row_of[f] >= 0) continue;
        std::vector<F> v(cols, F(0));
        v[f] = F(1);
        for (std::size_t k = 0; k < red.pivot_col.size(); ++k) v[red.pivot_col[k]] = -red.r(k, f);
        out.kernel.push_back(std::move(v));
    }
    out.pivot_columns = red.pivot_col;
    std::sort(out.pivot_columns.begin(), out.pivot_columns.end());
    return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return detail::rref(m).pivot_col.size();
}

/// Determinant by elimination (field scalars).
template <class F>
F determinant(const Matrix<F>& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: square matrix required");
    if (m.rows() == 0) return F(1);
    auto red = detail::rref(m);
    if (red.pivot_col.size() < m.rows()) return F(0);
    // Sign of the column permutation pivot_col.
    std::vector<std::size_t> perm = red.pivot_col;
    std::size_t transpositions = red.swaps;
    for (std::size_t i = 0; i < perm.size(); ++i)
        while (perm[i] != i) {
            std::swap(perm[i], perm[perm[i]]);
            ++transpositions;
        }
    return transpositions % 2 ? -red.pivot_product : red.pivot_product;
}

/// Inverse by Gauss-Jordan on [m | I].
template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: square matrix required");
    const std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    // Restrict pivots to the left block by elimination column by column.
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = n;
        double cost = std::numeric_limits<double>::infinity();
        for (std::size_t i = c; i < n; ++i) {
            if (ScalarTraits<F>::is_zero(aug(i, c))) continue;
            double pc = ScalarTraits<F>::pivot_cost(aug(i, c));
            if (pc < cost) {
                cost = pc;
                best = i;
            }
        }
        if (best == n) throw std::domain_error("inverse: singular matrix");
        if (best != c)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(c, j), aug(best, j));
        const F inv = F(1) / aug(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) = aug(c, j) * inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || ScalarTraits<F>::is_zero(aug(i, c))) continue;
            const F f = aug(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(c, j);
        }
    }
    Matrix<F> r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

/// Stacks vectors as the rows of a matrix.
template <class F>
Matrix<F> from_rows(const std::vector<std::vector<F>>& rows, std::size_t cols) {
    Matrix<F> m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged input");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

/// Row space built one vector at a time; insert() reports whether the
/// vector raised the rank.
template <class F>
class IncrementalSpan {
public:
    explicit IncrementalSpan(std::size_t dim) : dim_(dim) {}

    bool insert(std::vector<F> v) {
        if (v.size() != dim_) throw std::invalid_argument("IncrementalSpan: length mismatch");
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            const F& c = v[pivots_[k]];
            if (ScalarTraits<F>::is_zero(c)) continue;
            const F f = c;
            for (std::size_t j = 0; j < dim_; ++j)
                if (!ScalarTraits<F>::is_zero(basis_[k][j])) v[j] -= f * basis_[k][j];
        }
        std::size_t p = dim_;
        for (std::size_t j = 0; j < dim_; ++j)
            if (!ScalarTraits<F>::is_zero(v[j])) {
                p = j;
                break;
            }
        if (p == dim_) return false;
        const F inv = F(1) / v[p];
        for (auto& x : v) x = x * inv;
        // Keep the basis fully reduced at the new pivot.
        for (auto& b : basis_) {
            if (ScalarTraits<F>::is_zero(b[p])) continue;
            const F f = b[p];
            for (std::size_t j = 0; j < dim_; ++j) b[j] -= f * v[j];
        }
        basis_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    std::size_t rank() const { return basis_.size(); }
    std::size_t dim() const { return dim_; }

private:
    std::size_t dim_;
    std::vector<std::vector<F>> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace bideform
