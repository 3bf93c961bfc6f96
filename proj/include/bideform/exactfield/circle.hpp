#pragma once

#include <stdexcept>

#include "bideform/exactfield/quadratic.hpp"
#include "bideform/exactfield/rational.hpp"

namespace bideform {

/// A rational point s + i t of the unit circle.
struct CirclePoint {
    Rational s;
    Rational t;

    CirclePoint(Rational s_, Rational t_) : s(std::move(s_)), t(std::move(t_)) {
        if (s * s + t * t != Rational(1)) throw std::domain_error("CirclePoint: s^2 + t^2 != 1");
    }

    /// u = s + i t as a Gaussian rational.
    QuadImag as_complex() const { return QuadImag(1, s, t); }
};

/// Rational parametrization q -> ((1-q^2)/(1+q^2), 2q/(1+q^2)).
inline CirclePoint circle_point(const Rational& q) {
    Rational den = Rational(1) + q * q;
    return CirclePoint((Rational(1) - q * q) / den, Rational(2) * q / den);
}

}  // namespace bideform
