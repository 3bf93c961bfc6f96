#pragma once

/**
 * @file normal_form.hpp
 * @brief Conjugation normal form for numeric Bi(3)-type representations.
 *
 * Let r be a row vector with r T = r and r U A = r U (a common left fixed
 * vector of T and of A after moving by U). The conjugator with rows
 *     g = [ r U ; r A ; r A T^-1 ; r ]
 * makes the images of T and A take the shape
 *     T: rows (1,0,0,0), (*,*,*,*), (0,1,0,0), (0,0,0,1)
 *     A: rows (1,0,0,0), (0,0,0,1), (*,*,*,*), (0,1,0,0)
 * with a shared starred row. Rescaling r rescales g and leaves g rho g^-1
 * unchanged, so no further gauge fixing is needed.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bideform/bianchi/presentation.hpp"
#include "bideform/continuation/real.hpp"
#include "bideform/linalg/matrix.hpp"

namespace bideform {

struct NormalFormResult {
    bool success = false;
    Representation<Real> representation;
    Matrix<Real> conjugator;  ///< g with representation = g r g^-1
    Real pivot_gap = 0;       ///< |last pivot| / |first pivot| of the fixed-vector system
    std::string failure;
};

namespace detail {

/// Dense Gaussian elimination with partial pivoting.
inline Matrix<Real> real_inverse(const Matrix<Real>& m) {
    const std::size_t n = m.rows();
    Matrix<Real> a = m, inv = Matrix<Real>::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (abs(a(i, k)) > abs(a(p, k))) p = i;
        if (a(p, k) == 0) throw std::domain_error("real_inverse: singular matrix");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(k, j), a(p, j));
            std::swap(inv(k, j), inv(p, j));
        }
        const Real piv = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            const Real f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

}  // namespace detail

/// Normal form of r; needs generators named T, U and A. Fails when the
/// common fixed vector is not numerically unique (relative pivot gap at or
/// above tolerance on the last pivot, or a degenerate conjugator).
inline NormalFormResult normalize_conjugacy(const Representation<Real>& r, const Real& tolerance = Real("1e-25")) {
    NormalFormResult out;
    const auto& T = r.image("T");
    const auto& U = r.image("U");
    const auto& A = r.image("A");
    const std::size_t n = T.rows();
    if (n != 4) throw std::invalid_argument("normalize_conjugacy: 4x4 images required");
    const Matrix<Real> I = Matrix<Real>::identity(n);
    const Matrix<Real> left = T - I, right = U * (A - I);

    // s = [T - I | U (A - I)]^T, an 8 x 4 system s r^T = 0.
    Matrix<Real> s(2 * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            s(j, i) = left(i, j);
            s(n + j, i) = right(i, j);
        }
    // Full pivoting; the column order records which unknown each pivot eliminates.
    std::vector<std::size_t> col(n);
    for (std::size_t j = 0; j < n; ++j) col[j] = j;
    Real first = 0, last = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t bi = k, bj = k;
        for (std::size_t i = k; i < s.rows(); ++i)
            for (std::size_t j = k; j < n; ++j)
                if (abs(s(i, j)) > abs(s(bi, bj))) {
                    bi = i;
                    bj = j;
                }
        for (std::size_t j = 0; j < n; ++j) std::swap(s(k, j), s(bi, j));
        for (std::size_t i = 0; i < s.rows(); ++i) std::swap(s(i, k), s(i, bj));
        std::swap(col[k], col[bj]);
        const Real piv = abs(s(k, k));
        if (k == 0) first = piv;
        last = piv;
        if (k == n - 1) break;
        if (piv == 0 || piv < tolerance * first) {
            out.failure = "fixed vector is not unique";
            return out;
        }
        for (std::size_t i = k + 1; i < s.rows(); ++i) {
            const Real f = s(i, k) / s(k, k);
            for (std::size_t j = k; j < n; ++j) s(i, j) -= f * s(k, j);
        }
    }
    out.pivot_gap = last / first;
    if (out.pivot_gap >= tolerance) {
        out.failure = "no common fixed vector (last pivot gap " + format_real(out.pivot_gap, 6) + ")";
        return out;
    }
    // Back-substitute with the last permuted unknown set to 1.
    std::vector<Real> y(n, Real(0));
    y[n - 1] = 1;
    for (std::size_t k = n - 1; k-- > 0;) {
        Real acc = 0;
        for (std::size_t j = k + 1; j < n; ++j) acc += s(k, j) * y[j];
        y[k] = -acc / s(k, k);
    }
    Matrix<Real> rv(1, n);
    for (std::size_t j = 0; j < n; ++j) rv(0, col[j]) = y[j];

    const Matrix<Real> rA = rv * A;
    Matrix<Real> tinv;
    try {
        tinv = detail::real_inverse(T);
    } catch (const std::domain_error&) {
        out.failure = "image of T is singular";
        return out;
    }
    const Matrix<Real> rows[4] = {rv * U, rA, rA * tinv, rv};
    Matrix<Real> g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = rows[i](0, j);
    Matrix<Real> ginv;
    try {
        ginv = detail::real_inverse(g);
    } catch (const std::domain_error&) {
        out.failure = "conjugator is singular";
        return out;
    }
    out.representation.presentation = r.presentation;
    for (const auto& m : r.images) out.representation.images.push_back(g * m * ginv);
    out.conjugator = std::move(g);
    out.success = true;
    return out;
}

}  // namespace bideform
