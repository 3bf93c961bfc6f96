#pragma once

/**
 * @file real.hpp
 * @brief Variable-precision MPFR reals used by the numerical pipeline, with
 * conversions from the exact scalars and lossless decimal formatting.
 */

#include <cstddef>
#include <ios>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "bideform/exactfield/quadratic.hpp"
#include "bideform/exactfield/rational.hpp"
#include "bideform/exactfield/scalar.hpp"
#include "bideform/linalg/matrix.hpp"

namespace bideform {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

template <>
struct ScalarTraits<Real> {
    static bool is_zero(const Real& x) { return x == 0; }
    static Real conjugate(const Real& x) { return x; }
    /// Larger magnitude is a better pivot.
    static double pivot_cost(const Real& x) { return -static_cast<double>(abs(x)); }
    static int real_sign(const Real& x) { return x.sign(); }
    static bool is_real(const Real&) { return true; }
};

/// Sets the default MPFR precision (decimal digits) for new Reals while in scope.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits) : saved_(Real::default_precision()) { Real::default_precision(digits); }
    ~PrecisionScope() { Real::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

inline Real to_real(const Rational& q) {
    return Real(q.numerator().get_str()) / Real(q.denominator().get_str());
}

inline Real to_real(const QuadReal& x) {
    Real r = to_real(x.a());
    if (!x.b().is_zero()) r += to_real(x.b()) * sqrt(Real(x.d()));
    return r;
}

inline Real parse_real(const std::string& text) { return Real(text); }

/// Scientific notation with the given number of significant digits.
inline std::string format_real(const Real& x, std::size_t digits) {
    return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

/// Fixed notation with the given number of decimals.
inline std::string format_fixed(const Real& x, std::size_t decimals) {
    return x.str(static_cast<std::streamsize>(decimals), std::ios_base::fixed);
}

template <class F>
Matrix<Real> to_real(const Matrix<F>& m) {
    return m.template map<Real>([](const F& x) { return to_real(x); });
}

/// Largest absolute entry.
inline Real max_abs(const Matrix<Real>& m) {
    Real best = 0;
    for (const auto& x : m.data()) best = std::max(best, Real(abs(x)));
    return best;
}

}  // namespace bideform
