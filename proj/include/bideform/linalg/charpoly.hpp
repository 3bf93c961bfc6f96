#pragma once

#include <stdexcept>

#include "bideform/exactfield/polynomial.hpp"
#include "bideform/linalg/matrix.hpp"

namespace bideform {

/// Monic characteristic polynomial det(xI - m) by Faddeev-LeVerrier.
/// Needs division by 1..n, so F must have characteristic zero.
template <class F>
Polynomial<F> characteristic_polynomial(const Matrix<F>& m) {
    if (!m.is_square()) throw std::invalid_argument("characteristic_polynomial: square matrix required");
    const std::size_t n = m.rows();
    std::vector<F> c(n + 1, F(0));
    c[n] = F(1);
    Matrix<F> mk(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
        F tr = (m * mk).trace();
        c[n - k] = -tr / F(static_cast<int>(k));
    }
    return Polynomial<F>(std::move(c));
}

}  // namespace bideform
