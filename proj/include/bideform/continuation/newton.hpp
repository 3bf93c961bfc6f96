#pragma once

/**
 * @file newton.hpp
 * @brief Perturbation and damped Gauss-Newton refinement of numeric
 * representations onto the representation variety, optionally with the
 * characteristic polynomial of one generator pinned.
 *
 * Unknowns are the matrix entries in the column order of relation_jacobian.
 * Each step solves the regularized least-squares problem
 *     min |J d + F|^2 + lambda |d|^2,   lambda = |F|,
 * by Householder QR, then halves the step until the residual decreases.
 */

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bideform/bianchi/presentation.hpp"
#include "bideform/continuation/real.hpp"
#include "bideform/exactfield/rational.hpp"
#include "bideform/linalg/charpoly.hpp"
#include "bideform/linalg/matrix.hpp"
#include "bideform/tangent/tangent.hpp"

namespace bideform {

struct NewtonSettings {
    unsigned precision_digits = 60;
    double residual_target = 1e-40;
    unsigned max_iterations = 100;
    double damping = 1.0;  ///< initial step scale in (0, 1]

    void validate() const {
        if (precision_digits < 20) throw std::invalid_argument("NewtonSettings: precision_digits must be at least 20");
        if (!(residual_target > 0)) throw std::invalid_argument("NewtonSettings: residual_target must be positive");
        if (residual_target < std::pow(10.0, -static_cast<double>(precision_digits) + 10))
            throw std::invalid_argument("NewtonSettings: residual_target below 10^(10 - precision_digits)");
        if (!(damping > 0 && damping <= 1)) throw std::invalid_argument("NewtonSettings: damping must lie in (0, 1]");
    }
};

/// The equation e_k(M) = target, where e_k is the k-th elementary symmetric
/// function of the eigenvalues of the image M of one generator.
struct CoefficientPin {
    std::string generator;
    unsigned k = 1;
    Rational target;

    std::string label() const { return "e" + std::to_string(k) + "(" + generator + ")=" + target.to_string(); }

    /// e_0..e_n of m.
    template <class F>
    static std::vector<F> elementary(const Matrix<F>& m) {
        const auto chi = characteristic_polynomial(m);
        const std::size_t n = m.rows();
        std::vector<F> e(n + 1);
        for (std::size_t j = 0; j <= n; ++j) {
            F c = chi.coeff(n - j);
            e[j] = (j % 2 == 0) ? c : -c;
        }
        return e;
    }

    template <class F>
    F residual(const Matrix<F>& m, const F& target_value) const {
        return elementary(m)[k] - target_value;
    }

    /// d e_k[X] = tr(P X) with P = sum_j (-1)^j e_{k-1-j} M^j.
    template <class F>
    Matrix<F> gradient(const Matrix<F>& m) const {
        const auto e = elementary(m);
        const std::size_t n = m.rows();
        Matrix<F> p(n, n), power = Matrix<F>::identity(n);
        for (unsigned j = 0; j < k; ++j) {
            const F c = (j % 2 == 0) ? e[k - 1 - j] : -e[k - 1 - j];
            p += c * power;
            power = power * m;
        }
        return p;
    }
};

/// e1 = 2+t, e2 = 2+2t, e3 = 2+t on the image of T, i.e. characteristic
/// polynomial 1 - (2+t)x + (2+2t)x^2 - (2+t)x^3 + x^4.
inline std::vector<CoefficientPin> charpoly_pin(const Rational& t, const std::string& generator = "T") {
    const Rational two(2);
    return {{generator, 1, two + t}, {generator, 2, two + two * t}, {generator, 3, two + t}};
}

/// Exact or numeric residuals of a pin set on a representation.
template <class F, class Conv>
std::vector<F> pin_residuals(const Representation<F>& r, const std::vector<CoefficientPin>& pins, Conv conv) {
    std::vector<F> out;
    for (const auto& p : pins) out.push_back(p.residual(r.image(p.generator), conv(p.target)));
    return out;
}

template <class F>
std::vector<F> pin_residuals(const Representation<F>& r, const std::vector<CoefficientPin>& pins) {
    return pin_residuals(r, pins, [](const Rational& q) { return F(q); });
}

inline std::vector<Real> pin_residuals(const Representation<Real>& r, const std::vector<CoefficientPin>& pins) {
    return pin_residuals(r, pins, [](const Rational& q) { return to_real(q); });
}

/// Entrywise uniform noise in [-magnitude, magnitude] from mt19937_64(seed).
/// The noise is built from the raw 64-bit stream, so it does not depend on
/// the standard library's distribution implementations.
inline Representation<Real> perturb(const Representation<Real>& r, double magnitude, std::uint64_t seed) {
    if (magnitude < 0) throw std::invalid_argument("perturb: magnitude must be non-negative");
    std::mt19937_64 rng(seed);
    Representation<Real> out = r;
    const Real mag(magnitude);
    for (auto& m : out.images)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
                m(i, j) += mag * (Real(2) * Real(unit) - Real(1));
            }
    return out;
}

namespace detail {

/// Minimizes |a x - b| for a of full column rank by Householder QR.
inline std::vector<Real> householder_least_squares(Matrix<Real> a, std::vector<Real> b) {
    const std::size_t m = a.rows(), n = a.cols();
    if (m < n) throw std::invalid_argument("householder_least_squares: more unknowns than equations");
    for (std::size_t k = 0; k < n; ++k) {
        Real norm = 0;
        for (std::size_t i = k; i < m; ++i) norm += a(i, k) * a(i, k);
        norm = sqrt(norm);
        if (norm == 0) throw std::domain_error("householder_least_squares: rank deficient");
        const Real alpha = a(k, k) > 0 ? Real(-norm) : norm;
        std::vector<Real> v(m - k);
        for (std::size_t i = k; i < m; ++i) v[i - k] = a(i, k);
        v[0] -= alpha;
        Real vv = 0;
        for (const auto& x : v) vv += x * x;
        if (vv == 0) continue;
        for (std::size_t j = k; j < n; ++j) {
            Real s = 0;
            for (std::size_t i = k; i < m; ++i) s += v[i - k] * a(i, j);
            s = Real(2) * s / vv;
            for (std::size_t i = k; i < m; ++i) a(i, j) -= s * v[i - k];
        }
        Real s = 0;
        for (std::size_t i = k; i < m; ++i) s += v[i - k] * b[i];
        s = Real(2) * s / vv;
        for (std::size_t i = k; i < m; ++i) b[i] -= s * v[i - k];
    }
    std::vector<Real> x(n);
    for (std::size_t k = n; k-- > 0;) {
        Real s = b[k];
        for (std::size_t j = k + 1; j < n; ++j) s -= a(k, j) * x[j];
        x[k] = s / a(k, k);
    }
    return x;
}

inline std::vector<Real> equation_vector(const Presentation& p, const std::vector<Matrix<Real>>& images,
                                         const std::vector<CoefficientPin>& pins) {
    const auto res = relation_residuals(p, images);
    std::vector<Real> f(res.det.begin(), res.det.end());
    for (const auto& m : res.relator) f.insert(f.end(), m.data().begin(), m.data().end());
    const auto pr = pin_residuals(Representation<Real>{p, images}, pins);
    f.insert(f.end(), pr.begin(), pr.end());
    return f;
}

inline Real euclidean_norm(const std::vector<Real>& v) {
    Real s = 0;
    for (const auto& x : v) s += x * x;
    return sqrt(s);
}

}  // namespace detail

struct NewtonResult {
    bool success = false;
    Representation<Real> representation;
    double residual = 0;               ///< Euclidean norm of all equations at the result
    unsigned iterations = 0;           ///< accepted updates
    std::vector<double> history;       ///< residual before each update, then the final one
    std::string failure;               ///< empty on success
};

/// Euclidean norm of [det - 1; lhs - rhs; pins] at r.
inline Real equation_residual(const Representation<Real>& r, const std::vector<CoefficientPin>& pins = {}) {
    return detail::euclidean_norm(detail::equation_vector(r.presentation, r.images, pins));
}

/// Damped, regularized Gauss-Newton onto {Eqs = 0, pins = 0}. The caller is
/// expected to hold a PrecisionScope matching settings.precision_digits.
inline NewtonResult newton_refine(const Presentation& p, const Representation<Real>& r0,
                                  const std::vector<CoefficientPin>& pins, const NewtonSettings& settings) {
    settings.validate();
    r0.check_shape();
    const std::size_t gens = r0.images.size(), n = r0.dimension(), nn = n * n, unknowns = nn * gens;
    std::vector<Matrix<Real>> x = r0.images;
    std::vector<Real> f = detail::equation_vector(p, x, pins);
    Real res = detail::euclidean_norm(f);
    const Real target(settings.residual_target);

    NewtonResult out;
    for (;;) {
        out.history.push_back(static_cast<double>(res));
        if (res <= target) {
            out.success = true;
            break;
        }
        if (out.iterations >= settings.max_iterations) {
            out.failure = "max_iterations reached";
            break;
        }
        Matrix<Real> jac = relation_jacobian(p, x);
        const std::size_t base = jac.rows();
        const Real mu = sqrt(res);
        Matrix<Real> sys(base + pins.size() + unknowns, unknowns);
        for (std::size_t i = 0; i < base; ++i)
            for (std::size_t j = 0; j < unknowns; ++j) sys(i, j) = jac(i, j);
        for (std::size_t q = 0; q < pins.size(); ++q) {
            const std::size_t g = p.index_of(pins[q].generator);
            const Matrix<Real> grad = pins[q].gradient(x[g]);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) sys(base + q, nn * g + n * a + b) = grad(b, a);
        }
        for (std::size_t j = 0; j < unknowns; ++j) sys(base + pins.size() + j, j) = mu;
        std::vector<Real> rhs(sys.rows(), Real(0));
        for (std::size_t i = 0; i < f.size(); ++i) rhs[i] = -f[i];
        const std::vector<Real> delta = detail::householder_least_squares(std::move(sys), std::move(rhs));

        Real step(settings.damping);
        bool accepted = false;
        for (int halvings = 0; halvings < 60; ++halvings, step /= 2) {
            std::vector<Matrix<Real>> trial = x;
            for (std::size_t g = 0; g < gens; ++g)
                for (std::size_t k = 0; k < nn; ++k) trial[g](k / n, k % n) += step * delta[nn * g + k];
            std::vector<Real> ft = detail::equation_vector(p, trial, pins);
            Real rt = detail::euclidean_norm(ft);
            if (rt < res) {
                x = std::move(trial);
                f = std::move(ft);
                res = rt;
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            out.failure = "no descent along the Gauss-Newton direction";
            break;
        }
        ++out.iterations;
    }
    out.representation = Representation<Real>{p, std::move(x)};
    out.residual = static_cast<double>(res);
    return out;
}

}  // namespace bideform
