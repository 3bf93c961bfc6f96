#pragma once

/**
 * @file invariant_form.hpp
 * @brief Spaces of symmetric bilinear or Hermitian forms preserved by a set
 * of matrices, as exact kernels.
 *
 * Two actions are supported. Columns: g^T H g = H (g^H H g = H for Hermitian
 * forms), i.e. H is the Gram matrix of an invariant form on column vectors.
 * Rows: g H g^T = H (g H g^H = H), the dual convention.
 */

#include <cstddef>
#include <functional>
#include <type_traits>
#include <stdexcept>
#include <vector>

#include "bideform/exactfield/quadratic.hpp"
#include "bideform/exactfield/rational.hpp"
#include "bideform/linalg/elimination.hpp"
#include "bideform/linalg/matrix.hpp"

namespace bideform {

enum class FormKind { Symmetric, Hermitian };
enum class FormAction { Columns, Rows };

namespace detail {

template <class F>
Matrix<F> form_defect(const Matrix<F>& g, const Matrix<F>& h, FormKind kind, FormAction action) {
    const Matrix<F> gt = kind == FormKind::Hermitian ? g.adjoint() : g.transpose();
    return action == FormAction::Columns ? gt * h * g - h : g * h * gt - h;
}

// Kernel of the linear map k -> (defect of basis[k] under every generator),
// with each defect entry split into coordinates by `flatten`.
template <class F, class C>
std::vector<Matrix<F>> invariant_kernel(const std::vector<Matrix<F>>& gens, const std::vector<Matrix<F>>& basis,
                                        FormKind kind, FormAction action,
                                        const std::function<void(const F&, std::vector<C>&)>& flatten) {
    std::vector<std::vector<C>> columns;
    for (const auto& h : basis) {
        std::vector<C> col;
        for (const auto& g : gens) {
            Matrix<F> e = form_defect(g, h, kind, action);
            for (const auto& x : e.data()) flatten(x, col);
        }
        columns.push_back(std::move(col));
    }
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    Matrix<C> sys(rows, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) sys(i, j) = columns[j][i];
    std::vector<Matrix<F>> out;
    if (rows == 0) return basis;
    for (const auto& v : rank_and_kernel(sys).kernel) {
        Matrix<F> h(basis.front().rows(), basis.front().cols());
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (!ScalarTraits<C>::is_zero(v[k])) h += F(v[k]) * basis[k];
        out.push_back(std::move(h));
    }
    return out;
}

inline long imag_field(const std::vector<Matrix<QuadImag>>& gens) {
    for (const auto& g : gens)
        for (const auto& x : g.data())
            if (x.d() != 0) return x.d();
    return 1;
}

}  // namespace detail

/// Basis of the symmetric forms H = H^T invariant under every generator.
template <class F>
std::vector<Matrix<F>> invariant_symmetric_forms(const std::vector<Matrix<F>>& gens,
                                                 FormAction action = FormAction::Columns) {
    if (gens.empty()) throw std::invalid_argument("invariant_form: no generators");
    const std::size_t n = gens.front().rows();
    std::vector<Matrix<F>> basis;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Matrix<F> e(n, n);
            e(i, j) = F(1);
            e(j, i) = F(1);
            basis.push_back(std::move(e));
        }
    return detail::invariant_kernel<F, F>(gens, basis, FormKind::Symmetric, action,
                                          [](const F& x, std::vector<F>& out) { out.push_back(x); });
}

/// Basis (over Q) of the Hermitian forms invariant under matrices over Q(i sqrt d).
inline std::vector<Matrix<QuadImag>> invariant_hermitian_forms(const std::vector<Matrix<QuadImag>>& gens,
                                                               FormAction action = FormAction::Columns) {
    if (gens.empty()) throw std::invalid_argument("invariant_form: no generators");
    const std::size_t n = gens.front().rows();
    const long d = detail::imag_field(gens);
    const QuadImag is = QuadImag::i_sqrt(d);
    std::vector<Matrix<QuadImag>> basis;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Matrix<QuadImag> re(n, n);
            re(i, j) = QuadImag(1);
            re(j, i) = QuadImag(1);
            basis.push_back(std::move(re));
            if (i == j) continue;
            Matrix<QuadImag> im(n, n);
            im(i, j) = is;
            im(j, i) = -is;
            basis.push_back(std::move(im));
        }
    return detail::invariant_kernel<QuadImag, Rational>(
        gens, basis, FormKind::Hermitian, action, [](const QuadImag& x, std::vector<Rational>& out) {
            out.push_back(x.a());
            out.push_back(x.b());
        });
}

/// invariant_form dispatcher: symmetric forms for any field, Hermitian forms
/// for Q(i sqrt d).
template <class F>
std::vector<Matrix<F>> invariant_form(const std::vector<Matrix<F>>& gens, FormKind kind,
                                      FormAction action = FormAction::Columns) {
    if (kind == FormKind::Symmetric) return invariant_symmetric_forms(gens, action);
    if constexpr (std::is_same_v<F, QuadImag>) {
        return invariant_hermitian_forms(gens, action);
    } else {
        // Over a real field Hermitian and symmetric coincide.
        return invariant_symmetric_forms(gens, action);
    }
}

}  // namespace bideform
