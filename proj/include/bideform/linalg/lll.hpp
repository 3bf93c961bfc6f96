#pragma once

/**
 * @file lll.hpp
 * @brief LLL reduction of integer lattices with exact rational Gram-Schmidt
 * data (the mu/B formulation, no b* vectors stored).
 */

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bideform/exactfield/rational.hpp"

namespace bideform {

using IntVector = std::vector<Integer>;
using LatticeBasis = std::vector<IntVector>;

namespace detail {

inline Integer dot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline void check_basis_shape(const LatticeBasis& b) {
    for (const auto& v : b)
        if (v.size() != b.front().size()) throw std::invalid_argument("lll: vectors of unequal length");
}

}  // namespace detail

/// Gram-Schmidt data: mu[i][j] for j < i and squared norms B[i].
struct GramSchmidt {
    std::vector<std::vector<Rational>> mu;
    std::vector<Rational> B;
};

inline GramSchmidt gram_schmidt(const LatticeBasis& b) {
    const std::size_t n = b.size();
    GramSchmidt gs;
    gs.mu.assign(n, std::vector<Rational>(n, Rational(0)));
    gs.B.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Rational s(detail::dot(b[i], b[j]));
            for (std::size_t k = 0; k < j; ++k) s -= gs.mu[j][k] * gs.mu[i][k] * gs.B[k];
            gs.mu[i][j] = gs.B[j].is_zero() ? Rational(0) : s / gs.B[j];
        }
        Rational s(detail::dot(b[i], b[i]));
        for (std::size_t k = 0; k < i; ++k) s -= gs.mu[i][k] * gs.mu[i][k] * gs.B[k];
        gs.B[i] = s;
    }
    return gs;
}

/// True iff b is size reduced (|mu_ij| <= 1/2) and satisfies the Lovasz
/// condition B_k >= (delta - mu_{k,k-1}^2) B_{k-1}.
inline bool is_lll_reduced(const LatticeBasis& b, const Rational& delta) {
    GramSchmidt gs = gram_schmidt(b);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (gs.mu[i][j].abs() > Rational(1, 2)) return false;
    for (std::size_t k = 1; k < b.size(); ++k)
        if (gs.B[k] < (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.B[k - 1]) return false;
    return true;
}

/// LLL-reduces an independent family of integer vectors. Throws
/// std::domain_error if the vectors are linearly dependent.
inline LatticeBasis lll_reduce(LatticeBasis b, const Rational& delta = Rational(3, 4)) {
    if (!(delta > Rational(1, 4) && delta < Rational(1)))
        throw std::invalid_argument("lll_reduce: delta must lie in (1/4, 1)");
    const std::size_t n = b.size();
    if (n == 0) return b;
    detail::check_basis_shape(b);

    std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> B(n, Rational(0));

    auto dependent = [] { throw std::domain_error("lll_reduce: input vectors are linearly dependent"); };

    B[0] = Rational(detail::dot(b[0], b[0]));
    if (B[0].is_zero()) dependent();

    auto reduce = [&](std::size_t k, std::size_t l) {
        if (mu[k][l].abs() <= Rational(1, 2)) return;
        Integer q = mu[k][l].round();
        for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= q * b[l][c];
        Rational qr(q);
        mu[k][l] -= qr;
        for (std::size_t i = 0; i < l; ++i) mu[k][i] -= qr * mu[l][i];
    };

    auto swap = [&](std::size_t k, std::size_t kmax) {
        std::swap(b[k], b[k - 1]);
        for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
        const Rational m = mu[k][k - 1];
        const Rational bb = B[k] + m * m * B[k - 1];
        mu[k][k - 1] = m * B[k - 1] / bb;
        B[k] = B[k - 1] * B[k] / bb;
        B[k - 1] = bb;
        for (std::size_t i = k + 1; i <= kmax; ++i) {
            const Rational t = mu[i][k];
            mu[i][k] = mu[i][k - 1] - m * t;
            mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
        }
    };

    std::size_t k = 1, kmax = 0;
    while (k < n) {
        if (k > kmax) {
            kmax = k;
            for (std::size_t j = 0; j < k; ++j) {
                Rational s(detail::dot(b[k], b[j]));
                for (std::size_t i = 0; i < j; ++i) s -= mu[j][i] * mu[k][i] * B[i];
                mu[k][j] = s / B[j];
            }
            Rational s(detail::dot(b[k], b[k]));
            for (std::size_t i = 0; i < k; ++i) s -= mu[k][i] * mu[k][i] * B[i];
            B[k] = s;
            if (B[k].is_zero()) dependent();
        }
        reduce(k, k - 1);
        if (B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            swap(k, kmax);
            if (k > 1) --k;
        } else {
            for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
            ++k;
        }
    }
    return b;
}

}  // namespace bideform
