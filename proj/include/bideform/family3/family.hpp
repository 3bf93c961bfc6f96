#pragma once

/**
 * @file family.hpp
 * @brief The one-parameter family rho_u : Bi(3) -> SL(4, Q(u)) and its
 * exact checks (relators, characteristic polynomial of rho_u(T), conjugacy
 * of rho_1 with the lifted holonomy).
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bideform/bianchi/catalog.hpp"
#include "bideform/bianchi/spin_lift.hpp"
#include "bideform/exactfield/polynomial.hpp"
#include "bideform/exactfield/rational_function.hpp"
#include "bideform/linalg/charpoly.hpp"
#include "bideform/linalg/elimination.hpp"
#include "bideform/linalg/matrix.hpp"

namespace bideform {

/// rho_u with images in the Bi(3) generator order (T, U, L, A). F is any
/// field containing Q: RationalFunction for the symbolic family, Rational or
/// QuadImag for specializations.
template <class F>
Representation<F> rho_u(const F& u) {
    using Tr = ScalarTraits<F>;
    const F one(1), two(2);
    if (Tr::is_zero(u)) throw std::domain_error("rho_u: denominator u vanishes at u = 0");
    if (Tr::is_zero(one + u)) throw std::domain_error("rho_u: denominator 1+u vanishes at u = -1");
    const F zero(0), u2 = u * u, u3 = u2 * u;
    const F inv_u = one / u, inv_1u = one / (one + u);
    const F t = inv_u + u;           // 1/u + u
    const F c = -(two - u + u2) / u2;  // -(2-u+u^2)/u^2

    Matrix<F> T{{one, zero, zero, zero}, {c, t, -one, t}, {zero, one, zero, zero}, {zero, zero, zero, one}};
    Matrix<F> U{{one + u, zero, zero, -u},
                {-two / (u + u2), inv_1u, inv_1u, -u * inv_1u},
                {-(two + u + u2) / (u2 + u3), -inv_1u, (one + u + u2) / (u + u2), one / (u + u2)},
                {one, zero, zero, zero}};
    Matrix<F> A{{one, zero, zero, zero}, {zero, zero, zero, one}, {c, t, -one, t}, {zero, one, zero, zero}};
    Matrix<F> L{{(u - one) * inv_1u, -u2 * inv_1u, u * inv_1u, -u2 * inv_1u},
                {-two / (u + u2), inv_1u, inv_1u, -u * inv_1u},
                {-(two + u + u2) / u2, inv_u, zero, inv_u},
                {-two / (u + u2), -u * inv_1u, inv_1u, inv_1u}};

    Representation<F> r{swan_presentation(3), {}};
    for (const auto& name : r.presentation.generator_names) {
        if (name == "T") r.images.push_back(T);
        else if (name == "U") r.images.push_back(U);
        else if (name == "L") r.images.push_back(L);
        else r.images.push_back(A);
    }
    return r;
}

/// The symbolic family over Q(u).
inline Representation<RationalFunction> rho_u_symbolic() { return rho_u(RationalFunction::variable()); }

struct FamilyVerdict {
    std::string label;
    bool pass = false;
};

/// Each Bi(3) relator checked as an identity of matrices over Q(u), plus
/// det = 1 for every generator.
inline std::vector<FamilyVerdict> verify_family(const Representation<RationalFunction>& r) {
    std::vector<FamilyVerdict> out;
    WordEvaluator<RationalFunction> ev(r.images);
    for (const auto& rel : r.presentation.relators) out.push_back({rel.label, ev(rel.lhs) == ev(rel.rhs)});
    return out;
}

inline std::vector<FamilyVerdict> verify_family() { return verify_family(rho_u_symbolic()); }

/// True iff every generator image has determinant exactly 1.
template <class F>
bool unimodular(const Representation<F>& r) {
    for (const auto& m : r.images)
        if (determinant_cofactor(m) != F(1)) return false;
    return true;
}

using RFPoly = Polynomial<RationalFunction>;

/// Characteristic polynomial of rho_u(T) over Q(u).
inline RFPoly charpoly_T() { return characteristic_polynomial(rho_u_symbolic().image("T")); }

/// (x-1)^2 (x-u) (x-1/u) over Q(u).
inline RFPoly expected_charpoly_T() {
    const RationalFunction u = RationalFunction::variable(), one(1);
    const RFPoly x = RFPoly::x();
    return (x - RFPoly(one)) * (x - RFPoly(one)) * (x - RFPoly(u)) * (x - RFPoly(one / u));
}

/// 1 - (2+t)x + (2+2t)x^2 - (2+t)x^3 + x^4 with t = u + 1/u.
inline RFPoly charpoly_t_form() {
    const RationalFunction u = RationalFunction::variable(), one(1), two(2);
    const RationalFunction t = u + one / u;
    return RFPoly(std::vector<RationalFunction>{one, -(two + t), two + two * t, -(two + t), one});
}

/// Same pattern with t a rational number.
inline QPoly charpoly_t_form(const Rational& t) {
    return QPoly(std::vector<Rational>{Rational(1), -(Rational(2) + t), Rational(2) + Rational(2) * t,
                                       -(Rational(2) + t), Rational(1)});
}

struct ConjugacyCertificate {
    Matrix<QuadReal> conjugator;  ///< X with X * hol(g) * X^-1 = rho_1(g)
    std::size_t solution_dim = 0;
    bool verified = false;
};

/// Exact conjugator between the lifted Bi(3) holonomy and rho_1, found as an
/// invertible solution of X hol(g) = rho_1(g) X for every generator.
inline ConjugacyCertificate certify_holonomy_conjugacy() {
    const auto hol = lifted_representation(3);
    const auto r1 = rho_u(Rational(1));
    const std::size_t n = 4;
    std::vector<Matrix<QuadReal>> R;
    for (const auto& m : r1.images) R.push_back(m.map<QuadReal>([](const Rational& x) { return QuadReal(x); }));

    Matrix<QuadReal> sys(n * n * R.size(), n * n);
    for (std::size_t g = 0; g < R.size(); ++g) {
        const auto& H = hol.images[g];
        const auto& P = R[g];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t row = n * n * g + n * i + j;
                // (X H - P X)_ij = sum_k X_ik H_kj - P_ik X_kj
                for (std::size_t k = 0; k < n; ++k) {
                    sys(row, n * i + k) += H(k, j);
                    sys(row, n * k + j) -= P(i, k);
                }
            }
    }
    ConjugacyCertificate cert;
    const auto ker = rank_and_kernel(sys).kernel;
    cert.solution_dim = ker.size();
    auto as_matrix = [&](const std::vector<QuadReal>& v) {
        Matrix<QuadReal> x(n, n);
        for (std::size_t k = 0; k < n * n; ++k) x(k / n, k % n) = v[k];
        return x;
    };
    // Try basis vectors, then their sum.
    std::vector<std::vector<QuadReal>> trials = ker;
    if (ker.size() > 1) {
        std::vector<QuadReal> sum(n * n, QuadReal(0));
        for (const auto& v : ker)
            for (std::size_t k = 0; k < n * n; ++k) sum[k] += v[k];
        trials.push_back(sum);
    }
    for (const auto& v : trials) {
        Matrix<QuadReal> x = as_matrix(v);
        if (determinant(x).is_zero()) continue;
        cert.conjugator = x;
        const Matrix<QuadReal> xi = inverse(x);
        cert.verified = true;
        for (std::size_t g = 0; g < R.size(); ++g) cert.verified = cert.verified && (x * hol.images[g] * xi == R[g]);
        return cert;
    }
    return cert;
}

}  // namespace bideform
