#pragma once

/**
 * @file hermitian.hpp
 * @brief The invariant Hermitian form H_u of rho_u on the unit circle and the
 * determinant wall of its signature.
 *
 * The form satisfies g H_u g^H = H_u for the four generator images (the row
 * action; see invariant_form.hpp).
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bideform/bianchi/invariant_form.hpp"
#include "bideform/exactfield/circle.hpp"
#include "bideform/exactfield/polynomial.hpp"
#include "bideform/exactfield/quadratic.hpp"
#include "bideform/family3/family.hpp"
#include "bideform/linalg/matrix.hpp"
#include "bideform/linalg/signature.hpp"

namespace bideform {

/// f(s,t) = -1 - s + 4s^2 + i(-1 + 4s)t.
inline QuadImag hermitian_f(const Rational& s, const Rational& t) {
    return QuadImag(1, Rational(-1) - s + Rational(4) * s * s, (Rational(-1) + Rational(4) * s) * t);
}

/// H_u at u = s + it with diagonal -2+4s, first row (., f, f, f) and -1
/// elsewhere off the diagonal.
inline Matrix<QuadImag> hermitian_form_matrix(const CirclePoint& p) {
    const QuadImag f = hermitian_f(p.s, p.t), fb = f.conj();
    const QuadImag dg(Rational(-2) + Rational(4) * p.s), m1(-1);
    return Matrix<QuadImag>{{dg, f, f, f}, {fb, dg, m1, m1}, {fb, m1, dg, m1}, {fb, m1, m1, dg}};
}

struct HermitianFormReport {
    CirclePoint point;
    Matrix<QuadImag> form;
    std::vector<std::pair<std::string, bool>> invariant;  ///< per generator, g H g^H = H
    Inertia signature;

    bool all_invariant() const {
        for (const auto& [name, ok] : invariant)
            if (!ok) return false;
        return true;
    }
};

/// Builds H_u at (s, t), checks invariance under rho_u exactly and reports
/// its inertia. Throws std::domain_error if (s, t) is off the circle or u = -1.
inline HermitianFormReport hermitian_form_at(const Rational& s, const Rational& t) {
    CirclePoint p(s, t);
    HermitianFormReport rep{p, hermitian_form_matrix(p), {}, {}};
    const auto r = rho_u(p.as_complex());
    for (std::size_t g = 0; g < r.images.size(); ++g) {
        const auto& m = r.images[g];
        rep.invariant.emplace_back(r.presentation.generator_names[g], m * rep.form * m.adjoint() == rep.form);
    }
    rep.signature = congruence_signature(rep.form);
    return rep;
}

/// True iff a = c * b for some nonzero scalar c.
inline bool same_line(const Matrix<QuadImag>& a, const Matrix<QuadImag>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    std::size_t k = 0;
    while (k < a.data().size() && b.data()[k].is_zero()) ++k;
    if (k == a.data().size() || a.data()[k].is_zero()) return false;
    const QuadImag c = a.data()[k] / b.data()[k];
    for (std::size_t i = 0; i < a.data().size(); ++i)
        if (a.data()[i] != c * b.data()[i]) return false;
    return true;
}

/// Element of Q[s][t, i] / (t^2 - (1 - s^2), i^2 + 1), stored on the basis
/// {1, t, i, i t} with coefficients in Q[s].
class WallScalar {
public:
    WallScalar() = default;
    WallScalar(int c) : c_{QPoly(Rational(c)), QPoly(), QPoly(), QPoly()} {}
    WallScalar(QPoly one, QPoly t, QPoly i, QPoly it) : c_{std::move(one), std::move(t), std::move(i), std::move(it)} {}

    static WallScalar s() { return WallScalar(QPoly::x(), {}, {}, {}); }
    static WallScalar t() { return WallScalar({}, QPoly(Rational(1)), {}, {}); }
    static WallScalar i() { return WallScalar({}, {}, QPoly(Rational(1)), {}); }

    const QPoly& part(int k) const { return c_[k]; }

    WallScalar operator-() const { return WallScalar(-c_[0], -c_[1], -c_[2], -c_[3]); }
    friend WallScalar operator+(const WallScalar& a, const WallScalar& b) {
        return WallScalar(a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]);
    }
    friend WallScalar operator-(const WallScalar& a, const WallScalar& b) { return a + (-b); }
    friend WallScalar operator*(const WallScalar& a, const WallScalar& b) {
        // t^2 = 1 - s^2, i^2 = -1.
        const QPoly t2 = QPoly(Rational(1)) - QPoly::x() * QPoly::x();
        const auto& x = a.c_;
        const auto& y = b.c_;
        QPoly one = x[0] * y[0] + t2 * x[1] * y[1] - x[2] * y[2] - t2 * x[3] * y[3];
        QPoly tt = x[0] * y[1] + x[1] * y[0] - x[2] * y[3] - x[3] * y[2];
        QPoly ii = x[0] * y[2] + x[2] * y[0] + t2 * (x[1] * y[3] + x[3] * y[1]);
        QPoly it = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
        return WallScalar(one, tt, ii, it);
    }
    WallScalar& operator+=(const WallScalar& o) { return *this = *this + o; }
    WallScalar& operator-=(const WallScalar& o) { return *this = *this - o; }

    friend bool operator==(const WallScalar&, const WallScalar&) = default;

private:
    QPoly c_[4];
};

struct WallReport {
    QPoly determinant;                  ///< det H_u as a polynomial in s
    std::vector<Rational> roots;        ///< rational roots in [-1, 1]
    std::size_t real_roots_in_interval = 0;  ///< distinct real roots in [-1, 1] (Sturm)
    std::vector<Rational> admissible_roots;  ///< roots with s > -1 (u = -1 is excluded)

    /// 1/4 is the only root on the admissible arc and no irrational roots exist.
    bool quarter_is_only_wall() const {
        return real_roots_in_interval == roots.size() && admissible_roots.size() == 1 &&
               admissible_roots.front() == Rational(1, 4);
    }
};

/// det H_u computed in Q[s][t,i]/(t^2-(1-s^2), i^2+1) and reduced to Q[s].
inline WallReport det_wall_analysis() {
    const WallScalar s = WallScalar::s(), t = WallScalar::t(), i = WallScalar::i();
    const WallScalar one(1), four(4);
    const WallScalar f = -one - s + four * s * s + i * (-one + four * s) * t;
    const WallScalar fb = -one - s + four * s * s - i * (-one + four * s) * t;
    const WallScalar dg = WallScalar(-2) + four * s, m1(-1);
    Matrix<WallScalar> h{{dg, f, f, f}, {fb, dg, m1, m1}, {fb, m1, dg, m1}, {fb, m1, m1, dg}};
    WallScalar det = determinant_cofactor(h);
    for (int k = 1; k < 4; ++k)
        if (!det.part(k).is_zero()) throw std::logic_error("det_wall_analysis: determinant is not a polynomial in s");
    WallReport rep;
    rep.determinant = det.part(0);
    const Rational lo(-1), hi(1);
    for (const auto& r : rational_roots(rep.determinant))
        if (r >= lo && r <= hi) rep.roots.push_back(r);
    rep.real_roots_in_interval = static_cast<std::size_t>(sturm_count(rep.determinant, lo, hi)) +
                                 (rep.determinant(lo).is_zero() ? 1 : 0);
    for (const auto& r : rep.roots)
        if (r > lo) rep.admissible_roots.push_back(r);
    return rep;
}

/// Recovered invariant Hermitian forms of rho_u at a circle point (row action).
inline std::vector<Matrix<QuadImag>> recovered_hermitian_forms(const CirclePoint& p) {
    return invariant_hermitian_forms(rho_u(p.as_complex()).images, FormAction::Rows);
}

}  // namespace bideform
