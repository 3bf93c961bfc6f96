#pragma once

/**
 * @file signature.hpp
 * @brief Sylvester inertia of a Hermitian (or real symmetric) matrix by exact
 * congruence diagonalization.
 */

#include <cstddef>
#include <utility>
#include <stdexcept>

#include "bideform/exactfield/scalar.hpp"
#include "bideform/linalg/matrix.hpp"

namespace bideform {

struct Inertia {
    std::size_t positives = 0;
    std::size_t negatives = 0;
    std::size_t zeros = 0;

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

template <class F>
bool is_hermitian(const Matrix<F>& h) {
    return h.is_square() && h == h.adjoint();
}

/// Inertia (n+, n-, n0) of h. Uses symmetric pivoting; when every remaining
/// diagonal entry vanishes, a row/column combination creates a nonzero one.
template <class F>
Inertia congruence_signature(Matrix<F> h) {
    if (!is_hermitian(h)) throw std::invalid_argument("congruence_signature: matrix is not Hermitian");
    using Tr = ScalarTraits<F>;
    const std::size_t n = h.rows();
    Inertia out;

    // Applies row_i += c*row_j and col_i += conj(c)*col_j.
    auto add_multiple = [&](std::size_t i, std::size_t j, const F& c) {
        for (std::size_t k = 0; k < n; ++k) h(i, k) += c * h(j, k);
        const F cc = Tr::conjugate(c);
        for (std::size_t k = 0; k < n; ++k) h(k, i) += cc * h(k, j);
    };
    auto swap_index = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t k = 0; k < n; ++k) std::swap(h(a, k), h(b, k));
        for (std::size_t k = 0; k < n; ++k) std::swap(h(k, a), h(k, b));
    };

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = n;
        for (std::size_t i = k; i < n; ++i)
            if (!Tr::is_zero(h(i, i))) {
                p = i;
                break;
            }
        if (p == n) {
            // All remaining diagonal entries vanish: look for h(i,j) != 0.
            std::size_t fi = n, fj = n;
            for (std::size_t i = k; i < n && fi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!Tr::is_zero(h(i, j))) {
                        fi = i;
                        fj = j;
                        break;
                    }
            if (fi == n) {
                out.zeros += n - k;
                return out;
            }
            // With c = h(i,j) the new diagonal entry is 2|h(i,j)|^2.
            add_multiple(fi, fj, Tr::conjugate(h(fj, fi)));
            p = fi;
        }
        swap_index(k, p);
        const F piv = h(k, k);
        int s = Tr::real_sign(piv);
        if (s > 0) ++out.positives;
        else ++out.negatives;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (Tr::is_zero(h(i, k))) continue;
            add_multiple(i, k, -(h(i, k) / piv));
        }
    }
    return out;
}

}  // namespace bideform
