#pragma once

/**
 * @file quadratic.hpp
 * @brief Quadratic number fields Q(sqrt d) and Q(i sqrt d) as 2-dimensional
 * Q-vector spaces, plus elements of the ring of integers Z[tau].
 *
 * An element carries its field tag d. Elements with b == 0 are plain
 * rationals and always carry the neutral tag 0, which combines with any
 * field; mixing two different nonzero tags is an error.
 */

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bideform/exactfield/rational.hpp"
#include "bideform/exactfield/scalar.hpp"

namespace bideform {

inline bool is_squarefree(long d) {
    if (d <= 0) return false;
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

namespace detail {

inline long check_field_tag(long d) {
    if (d != 0 && !is_squarefree(d))
        throw std::invalid_argument("quadratic field: d=" + std::to_string(d) + " is not a squarefree positive integer");
    return d;
}

inline long merge_field_tag(long d1, long d2) {
    if (d1 == 0) return d2;
    if (d2 == 0 || d1 == d2) return d1;
    throw std::invalid_argument("quadratic field: mismatched d (" + std::to_string(d1) + " vs " + std::to_string(d2) + ")");
}

inline std::string format_quadratic(const Rational& a, const Rational& b, const std::string& unit) {
    if (b.is_zero()) return a.to_string();
    std::string out;
    if (!a.is_zero()) out = a.to_string();
    std::string bs = b.to_string();
    if (!out.empty() && b.sign() > 0) out += "+";
    out += bs + "*" + unit;
    return out;
}

// Splits "a+b*unit" / "b*unit" / "a" into components.
inline void parse_quadratic(std::string_view text, const std::string& unit_prefix, Rational& a, Rational& b,
                            long& d, bool imaginary) {
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    a = Rational(0);
    b = Rational(0);
    d = 0;
    std::size_t star = s.find('*');
    if (star == std::string::npos) {
        a = Rational::parse(s);
        return;
    }
    std::string unit = s.substr(star + 1);
    if (imaginary && unit == "i") {
        d = 1;
    } else {
        if (unit.rfind(unit_prefix, 0) != 0)
            throw std::invalid_argument("quadratic: cannot parse '" + std::string(text) + "'");
        d = std::stol(unit.substr(unit_prefix.size()));
    }
    std::string head = s.substr(0, star);
    // The split point is the last sign that is not part of an exponent and not leading.
    std::size_t split = std::string::npos;
    for (std::size_t k = head.size(); k-- > 1;) {
        if ((head[k] == '+' || head[k] == '-') && head[k - 1] != 'e' && head[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        b = Rational::parse(head);
    } else {
        a = Rational::parse(head.substr(0, split));
        b = Rational::parse(head.substr(split));
    }
}

}  // namespace detail

/// a + b*sqrt(d) with d squarefree. For d = 1 the b part is folded into a.
class QuadReal {
public:
    QuadReal() = default;
    QuadReal(int v) : a_(v) {}
    QuadReal(const Rational& a) : a_(a) {}
    QuadReal(long d, Rational a, Rational b) : d_(detail::check_field_tag(d)), a_(std::move(a)), b_(std::move(b)) {
        if (d_ == 0 && !b_.is_zero()) throw std::invalid_argument("QuadReal: sqrt part needs a field tag");
        if (d_ == 1) {
            a_ += b_;
            b_ = Rational(0);
        }
        if (b_.is_zero()) d_ = 0;
    }

    static QuadReal sqrt_of(long d) { return QuadReal(d, Rational(0), Rational(1)); }
    static QuadReal parse(std::string_view text) {
        Rational a, b;
        long d = 0;
        detail::parse_quadratic(text, "sqrt", a, b, d, false);
        return QuadReal(d, a, b);
    }

    long d() const { return d_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadReal operator-() const { return make(d_, -a_, -b_); }
    QuadReal conjugate_root() const { return make(d_, a_, -b_); }
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    QuadReal inverse() const {
        if (is_zero()) throw std::domain_error("QuadReal: inverse of zero");
        Rational n = norm();
        return make(d_, a_ / n, -b_ / n);
    }

    friend QuadReal operator+(const QuadReal& x, const QuadReal& y) {
        return make(detail::merge_field_tag(x.d_, y.d_), x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QuadReal operator-(const QuadReal& x, const QuadReal& y) {
        return make(detail::merge_field_tag(x.d_, y.d_), x.a_ - y.a_, x.b_ - y.b_);
    }
    /// quad_mul: (a1+b1 r)(a2+b2 r) = (a1 a2 + d b1 b2) + (a1 b2 + a2 b1) r.
    friend QuadReal operator*(const QuadReal& x, const QuadReal& y) {
        long d = detail::merge_field_tag(x.d_, y.d_);
        if (x.b_.is_zero() && y.b_.is_zero()) return make(d, x.a_ * y.a_, Rational(0));
        return make(d, x.a_ * y.a_ + Rational(d) * x.b_ * y.b_, x.a_ * y.b_ + y.a_ * x.b_);
    }
    friend QuadReal operator/(const QuadReal& x, const QuadReal& y) {
        detail::merge_field_tag(x.d_, y.d_);
        if (y.b_.is_zero()) {
            if (y.a_.is_zero()) throw std::domain_error("QuadReal: division by zero");
            return make(x.d_, x.a_ / y.a_, x.b_ / y.a_);
        }
        return x * y.inverse();
    }
    QuadReal& operator+=(const QuadReal& o) { return *this = *this + o; }
    QuadReal& operator-=(const QuadReal& o) { return *this = *this - o; }
    QuadReal& operator*=(const QuadReal& o) { return *this = *this * o; }
    QuadReal& operator/=(const QuadReal& o) { return *this = *this / o; }

    friend bool operator==(const QuadReal& x, const QuadReal& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadReal& x, const QuadReal& y) { return !(x == y); }

    /// Exact sign of a + b sqrt(d).
    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0 || sa == sb) return sb;
        Rational lhs = a_ * a_, rhs = Rational(d_) * b_ * b_;
        return lhs > rhs ? sa : sb;
    }

    std::string to_string() const { return detail::format_quadratic(a_, b_, "sqrt" + std::to_string(d_)); }
    friend std::ostream& operator<<(std::ostream& os, const QuadReal& x) { return os << x.to_string(); }

private:
    // Elements with zero irrational part carry the neutral tag 0.
    static QuadReal make(long d, Rational a, Rational b) {
        QuadReal r;
        r.d_ = b.is_zero() ? 0 : d;
        r.a_ = std::move(a);
        r.b_ = std::move(b);
        return r;
    }

    long d_ = 0;
    Rational a_{0};
    Rational b_{0};
};

/// a + b*i*sqrt(d) with d squarefree; d = 1 gives the Gaussian rationals.
class QuadImag {
public:
    QuadImag() = default;
    QuadImag(int v) : a_(v) {}
    QuadImag(const Rational& a) : a_(a) {}
    QuadImag(long d, Rational a, Rational b) : d_(detail::check_field_tag(d)), a_(std::move(a)), b_(std::move(b)) {
        if (d_ == 0 && !b_.is_zero()) throw std::invalid_argument("QuadImag: imaginary part needs a field tag");
        if (b_.is_zero()) d_ = 0;
    }

    static QuadImag i_sqrt(long d) { return QuadImag(d, Rational(0), Rational(1)); }
    static QuadImag parse(std::string_view text) {
        Rational a, b;
        long d = 0;
        detail::parse_quadratic(text, "isqrt", a, b, d, true);
        return QuadImag(d, a, b);
    }

    long d() const { return d_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_real() const { return b_.is_zero(); }

    QuadImag operator-() const { return make(d_, -a_, -b_); }
    QuadImag conj() const { return make(d_, a_, -b_); }
    /// |x|^2 = a^2 + d b^2.
    Rational norm() const { return a_ * a_ + Rational(d_) * b_ * b_; }

    QuadImag inverse() const {
        if (is_zero()) throw std::domain_error("QuadImag: inverse of zero");
        Rational n = norm();
        return make(d_, a_ / n, -b_ / n);
    }

    friend QuadImag operator+(const QuadImag& x, const QuadImag& y) {
        return make(detail::merge_field_tag(x.d_, y.d_), x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QuadImag operator-(const QuadImag& x, const QuadImag& y) {
        return make(detail::merge_field_tag(x.d_, y.d_), x.a_ - y.a_, x.b_ - y.b_);
    }
    friend QuadImag operator*(const QuadImag& x, const QuadImag& y) {
        long d = detail::merge_field_tag(x.d_, y.d_);
        if (x.b_.is_zero() && y.b_.is_zero()) return make(d, x.a_ * y.a_, Rational(0));
        return make(d, x.a_ * y.a_ - Rational(d) * x.b_ * y.b_, x.a_ * y.b_ + y.a_ * x.b_);
    }
    friend QuadImag operator/(const QuadImag& x, const QuadImag& y) {
        detail::merge_field_tag(x.d_, y.d_);
        if (y.b_.is_zero()) {
            if (y.a_.is_zero()) throw std::domain_error("QuadImag: division by zero");
            return make(x.d_, x.a_ / y.a_, x.b_ / y.a_);
        }
        return x * y.inverse();
    }
    QuadImag& operator+=(const QuadImag& o) { return *this = *this + o; }
    QuadImag& operator-=(const QuadImag& o) { return *this = *this - o; }
    QuadImag& operator*=(const QuadImag& o) { return *this = *this * o; }
    QuadImag& operator/=(const QuadImag& o) { return *this = *this / o; }

    friend bool operator==(const QuadImag& x, const QuadImag& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadImag& x, const QuadImag& y) { return !(x == y); }

    std::string to_string() const {
        return detail::format_quadratic(a_, b_, d_ == 1 ? std::string("i") : "isqrt" + std::to_string(d_));
    }
    friend std::ostream& operator<<(std::ostream& os, const QuadImag& x) { return os << x.to_string(); }

private:
    static QuadImag make(long d, Rational a, Rational b) {
        QuadImag r;
        r.d_ = b.is_zero() ? 0 : d;
        r.a_ = std::move(a);
        r.b_ = std::move(b);
        return r;
    }

    long d_ = 0;
    Rational a_{0};
    Rational b_{0};
};

enum class TauConvention {
    Standard,    // i sqrt d for d = 1,2 mod 4; (1 + i sqrt d)/2 for d = 3 mod 4
    Bi3Catalog,  // (-1 + i sqrt 3)/2, used for the d = 3 generator matrices
};

/// Generator tau of O_d = Z[tau] as an element of Q(i sqrt d).
inline QuadImag tau(long d, TauConvention convention = TauConvention::Standard) {
    if (!is_squarefree(d)) throw std::invalid_argument("tau: d must be squarefree and positive");
    if (d == 3 && convention == TauConvention::Bi3Catalog) return QuadImag(3, Rational(-1, 2), Rational(1, 2));
    if (d % 4 == 3) return QuadImag(d, Rational(1, 2), Rational(1, 2));
    return QuadImag(d, Rational(0), Rational(1));
}

/// x + y*tau in O_d.
struct RingElementTau {
    long d;
    Integer x;
    Integer y;
    TauConvention convention = TauConvention::Standard;

    QuadImag to_quad_imag() const { return QuadImag(Rational(x)) + QuadImag(Rational(y)) * tau(d, convention); }
};

template <>
struct ScalarTraits<QuadReal> {
    static bool is_zero(const QuadReal& x) { return x.is_zero(); }
    static QuadReal conjugate(const QuadReal& x) { return x; }
    static double pivot_cost(const QuadReal& x) {
        return static_cast<double>(x.a().height_bits() + (x.b().is_zero() ? 0 : x.b().height_bits() + 2));
    }
    static int real_sign(const QuadReal& x) { return x.sign(); }
    static bool is_real(const QuadReal&) { return true; }
};

template <>
struct ScalarTraits<QuadImag> {
    static bool is_zero(const QuadImag& x) { return x.is_zero(); }
    static QuadImag conjugate(const QuadImag& x) { return x.conj(); }
    static double pivot_cost(const QuadImag& x) {
        return static_cast<double>(x.a().height_bits() + (x.b().is_zero() ? 0 : x.b().height_bits() + 2));
    }
    static int real_sign(const QuadImag& x) {
        if (!x.is_real()) throw std::domain_error("QuadImag: sign of a non-real element");
        return x.a().sign();
    }
    static bool is_real(const QuadImag& x) { return x.is_real(); }
};

}  // namespace bideform
