#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals over GMP.
 *
 * Rational is an immutable value: numerator and denominator are coprime and
 * the denominator is positive. All arithmetic is exact.
 */

#include <gmpxx.h>

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bideform/exactfield/scalar.hpp"

namespace bideform {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(Integer(std::to_string(v))) {}
    Rational(const Integer& v) : q_(v) {}

    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_.get_num() = num;
        q_.get_den() = den;
        q_.canonicalize();
    }

    static Rational from_mpq(const mpq_class& q) {
        Rational r;
        r.q_ = q;
        return r;
    }

    /// Parses "a", "a/b", or a decimal such as "-1.25" or "3e-4".
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return from_mpq(-q_); }
    Rational abs() const { return from_mpq(::abs(q_)); }
    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return from_mpq(1 / q_);
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// Floor of the value.
    Integer floor() const {
        Integer r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }

    /// Nearest integer, ties away from zero.
    Integer round() const {
        Rational shifted = *this + (sign() >= 0 ? Rational(1, 2) : Rational(-1, 2));
        if (sign() >= 0) return shifted.floor();
        Integer r;
        mpz_cdiv_q(r.get_mpz_t(), shifted.q_.get_num_mpz_t(), shifted.q_.get_den_mpz_t());
        return r;
    }

    double to_double() const { return q_.get_d(); }

    /// Sum of the bit lengths of numerator and denominator.
    std::size_t height_bits() const {
        return mpz_sizeinbase(q_.get_num_mpz_t(), 2) + mpz_sizeinbase(q_.get_den_mpz_t(), 2);
    }

    std::string to_string() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class q_{0};
};

inline Integer pow10(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

inline Rational Rational::parse(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    };
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s.empty()) return fail();

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Rational n = parse(s.substr(0, slash));
        Rational d = parse(s.substr(slash + 1));
        if (d.is_zero()) throw std::domain_error("Rational: zero denominator");
        return n / d;
    }

    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            if (seen_point) ++frac_digits;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (digits.empty()) return fail();
    long exponent = 0;
    if (pos < s.size()) {
        if (s[pos] != 'e' && s[pos] != 'E') return fail();
        std::string rest = s.substr(pos + 1);
        if (rest.empty()) return fail();
        std::size_t used = 0;
        try {
            exponent = std::stol(rest, &used);
        } catch (const std::exception&) {
            return fail();
        }
        if (used != rest.size()) return fail();
    }
    Integer mant(digits, 10);
    if (negative) mant = -mant;
    long shift = exponent - frac_digits;
    if (shift >= 0) return Rational(mant * pow10(static_cast<unsigned long>(shift)));
    return Rational(mant, pow10(static_cast<unsigned long>(-shift)));
}

/// normalize_rational: reduced, positive-denominator form of num/den.
inline Rational normalize_rational(const Integer& num, const Integer& den) { return Rational(num, den); }

template <>
struct ScalarTraits<Rational> {
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static Rational conjugate(const Rational& x) { return x; }
    static double pivot_cost(const Rational& x) { return static_cast<double>(x.height_bits()); }
    static int real_sign(const Rational& x) { return x.sign(); }
    static bool is_real(const Rational&) { return true; }
};

}  // namespace bideform

template <>
struct std::hash<bideform::Rational> {
    std::size_t operator()(const bideform::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.to_string());
    }
};
