#pragma once

/**
 * @file rational_function.hpp
 * @brief The function field Q(u): reduced quotients of rational polynomials.
 */

#include <ostream>
#include <stdexcept>
#include <string>

#include "bideform/exactfield/polynomial.hpp"
#include "bideform/exactfield/rational.hpp"
#include "bideform/exactfield/scalar.hpp"

namespace bideform {

/// num/den with gcd(num, den) = 1 and den monic. Zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(int c) : num_(Rational(c)), den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    RationalFunction(const QPoly& p) : num_(p), den_(Rational(1)) {}
    RationalFunction(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    /// The indeterminate u.
    static RationalFunction variable() { return RationalFunction(QPoly::x()); }

    const QPoly& numerator() const { return num_; }
    const QPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RationalFunction operator-() const { return raw(-num_, den_); }
    RationalFunction inverse() const {
        if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
        return RationalFunction(den_, num_);
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return {};
        // Cross-cancel before multiplying to keep degrees down.
        QPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        return raw_normalized((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return a * b.inverse();
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    /// Specializes u := x in any field S containing Q. Throws if the
    /// denominator vanishes at x.
    template <class S>
    S eval(const S& x) const {
        S d = den_.eval<S>(x);
        if (ScalarTraits<S>::is_zero(d))
            throw std::domain_error("RationalFunction: denominator " + den_.to_string("u") + " vanishes");
        return num_.eval<S>(x) / d;
    }

    std::string to_string(const std::string& var = "u") const {
        std::string n = num_.to_string(var);
        if (den_.degree() == 0) return n;
        return "(" + n + ")/(" + den_.to_string(var) + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

private:
    static RationalFunction raw(QPoly n, QPoly d) {
        RationalFunction r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }
    // Inputs already coprime; only the leading coefficient needs fixing.
    static RationalFunction raw_normalized(QPoly n, QPoly d) {
        Rational lead = d.leading();
        if (lead != Rational(1)) {
            Rational inv = lead.inverse();
            n = n.scaled(inv);
            d = d.scaled(inv);
        }
        return raw(std::move(n), std::move(d));
    }

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        if (num_.is_zero()) {
            den_ = QPoly(Rational(1));
            return;
        }
        QPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        *this = raw_normalized(std::move(num_), std::move(den_));
    }

    QPoly num_;
    QPoly den_;
};

/// ratfunc_normalize: reduced form with monic denominator.
inline RationalFunction ratfunc_normalize(const QPoly& num, const QPoly& den) { return RationalFunction(num, den); }

template <>
struct ScalarTraits<RationalFunction> {
    static bool is_zero(const RationalFunction& x) { return x.is_zero(); }
    static RationalFunction conjugate(const RationalFunction& x) { return x; }
    static double pivot_cost(const RationalFunction& x) {
        double c = x.numerator().degree() + x.denominator().degree();
        for (const auto& q : x.numerator().coeffs()) c += 0.01 * static_cast<double>(q.height_bits());
        return c;
    }
    static bool is_real(const RationalFunction&) { return false; }
};

}  // namespace bideform
