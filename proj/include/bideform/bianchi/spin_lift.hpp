#pragma once

/**
 * @file spin_lift.hpp
 * @brief SL(2, C) -> SO(3,1) through the action X -> m X m^H on 2x2 Hermitian
 * matrices, in the ordered basis
 *   s0 = [[1,0],[0,1]], s1 = [[1,0],[0,-1]], s2 = [[0,1],[1,0]], s3 = [[0,i],[-i,0]].
 *
 * In this basis the lifted catalog generators already coincide with the
 * published SO(3,1) matrices for d = 3 and d = 7, so no further alignment
 * conjugation is applied. The invariant quadratic form is diag(1,-1,-1,-1).
 */

#include <stdexcept>

#include "bideform/bianchi/catalog.hpp"
#include "bideform/exactfield/quadratic.hpp"
#include "bideform/linalg/matrix.hpp"

namespace bideform {

using SO31Matrix = Matrix<QuadReal>;

/// The form J preserved by every lifted matrix: g^T J g = J.
inline SO31Matrix lorentz_form() {
    return SO31Matrix::diagonal({QuadReal(1), QuadReal(-1), QuadReal(-1), QuadReal(-1)});
}

namespace detail {

inline long field_of(const SL2Matrix& m) {
    long d = 0;
    for (const auto& x : m.data())
        if (x.d() != 0) {
            if (d != 0 && d != x.d()) throw std::invalid_argument("spin_lift: entries from different fields");
            d = x.d();
        }
    return d;
}

}  // namespace detail

/// Lift of m (det 1) to a 4x4 matrix over Q(sqrt d). lift(-m) = lift(m).
inline SO31Matrix spin_lift(const SL2Matrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("spin_lift: 2x2 matrix required");
    const QuadImag det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (det != QuadImag(1)) throw std::domain_error("spin_lift: determinant is " + det.to_string() + ", not 1");
    long d = detail::field_of(m);
    if (d == 0) d = 1;  // rational input; any field tag works
    const QuadImag one(1), zero(0), is = QuadImag::i_sqrt(d);
    // s3 is replaced by sqrt(d) * s3 so that everything stays inside Q(i sqrt d).
    const SL2Matrix basis[4] = {
        SL2Matrix{{one, zero}, {zero, one}},
        SL2Matrix{{one, zero}, {zero, -one}},
        SL2Matrix{{zero, one}, {one, zero}},
        SL2Matrix{{zero, is}, {-is, zero}},
    };
    const SL2Matrix mh = m.adjoint();
    const Rational half(1, 2), inv_d(Integer(1), Integer(d));
    SO31Matrix out(4, 4);
    for (int j = 0; j < 4; ++j) {
        SL2Matrix x = m * basis[j] * mh;
        // x = c0 s0 + c1 s1 + c2 s2 + c3 s3 with x01 = c2 + i c3.
        Rational c0 = ((x(0, 0) + x(1, 1)).a()) * half;
        Rational c1 = ((x(0, 0) - x(1, 1)).a()) * half;
        Rational c2 = x(0, 1).a();
        Rational c3 = x(0, 1).b();  // coefficient of i sqrt d
        if (j < 3) {
            out(0, j) = QuadReal(c0);
            out(1, j) = QuadReal(c1);
            out(2, j) = QuadReal(c2);
            out(3, j) = QuadReal(d, Rational(0), c3);
        } else {
            // Divide the column by sqrt d.
            out(0, j) = QuadReal(d, Rational(0), c0 * inv_d);
            out(1, j) = QuadReal(d, Rational(0), c1 * inv_d);
            out(2, j) = QuadReal(d, Rational(0), c2 * inv_d);
            out(3, j) = QuadReal(c3);
        }
    }
    return out;
}

/// The holonomy of Bi(d): the spin lift of the catalog generators.
inline Representation<QuadReal> lifted_representation(int d) {
    auto sl2 = sl2_generators(d);
    Representation<QuadReal> r{sl2.presentation, {}};
    for (const auto& m : sl2.images) r.images.push_back(spin_lift(m));
    return r;
}

}  // namespace bideform
