#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over an exact field.
 *
 * Coefficients are stored lowest degree first with no trailing zeros, so the
 * zero polynomial has an empty coefficient vector and degree -1.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bideform/exactfield/rational.hpp"
#include "bideform/exactfield/scalar.hpp"

namespace bideform {

template <class F>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const F& c) : c_{c} { trim(); }
    Polynomial(int c) : c_{F(c)} { trim(); }
    Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

    /// The monomial c * x^k.
    static Polynomial monomial(const F& c, std::size_t k) {
        std::vector<F> v(k + 1, F(0));
        v[k] = c;
        return Polynomial(std::move(v));
    }
    static Polynomial x() { return monomial(F(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(0); }
    F leading() const { return c_.empty() ? F(0) : c_.back(); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (ScalarTraits<F>::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const F& s) const {
        if (ScalarTraits<F>::is_zero(s)) return {};
        Polynomial r = *this;
        for (auto& c : r.c_) c *= s;
        return r;
    }

    /// Euclidean division: *this = q * b + r with deg r < deg b.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& b) const {
        if (b.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
        if (degree() < b.degree()) return {Polynomial(), *this};
        std::vector<F> rem = c_;
        std::vector<F> q(c_.size() - b.c_.size() + 1, F(0));
        const F lead_inv = F(1) / b.leading();
        for (std::size_t k = q.size(); k-- > 0;) {
            F coef = rem[k + b.c_.size() - 1] * lead_inv;
            q[k] = coef;
            if (ScalarTraits<F>::is_zero(coef)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= coef * b.c_[j];
        }
        rem.resize(b.c_.size() - 1);
        return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
    }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return a.divmod(b).first; }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return a.divmod(b).second; }

    Polynomial monic() const {
        if (is_zero()) return {};
        return scaled(F(1) / leading());
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<F> r(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * F(static_cast<int>(k));
        return Polynomial(std::move(r));
    }

    /// Horner evaluation at a point of any ring S that accepts F coefficients.
    template <class S>
    S eval(const S& x) const {
        S acc = S(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + S(c_[k]);
        return acc;
    }
    F operator()(const F& x) const { return eval<F>(x); }

    /// Composition p(q(x)).
    Polynomial compose(const Polynomial& q) const {
        Polynomial acc;
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * q + Polynomial(c_[k]);
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (ScalarTraits<F>::is_zero(c_[k])) continue;
            std::string cs = to_string_of(c_[k]);
            bool wrap = cs.find_first_of("+-", 1) != std::string::npos;
            if (wrap) cs = "(" + cs + ")";
            bool neg = !wrap && cs[0] == '-';
            if (!out.empty()) out += neg ? "-" : "+";
            else if (neg) out += "-";
            if (neg) cs = cs.substr(1);
            if (k == 0) {
                out += cs;
                continue;
            }
            if (cs != "1") out += cs + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

private:
    template <class G>
    static std::string to_string_of(const G& v) {
        return v.to_string();
    }

    void trim() {
        while (!c_.empty() && ScalarTraits<F>::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<F> c_;
};

/// Monic greatest common divisor (zero if both inputs are zero).
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        Polynomial<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class F>
Polynomial<F> pow(const Polynomial<F>& p, unsigned e) {
    Polynomial<F> r(F(1)), b = p;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

using QPoly = Polynomial<Rational>;

/// Number of distinct real roots of a squarefree-reduced p in the half-open
/// interval (lo, hi], by a Sturm sequence.
inline int sturm_count(const QPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    QPoly sq = p / gcd(p, p.derivative());
    std::vector<QPoly> seq{sq, sq.derivative()};
    while (!seq.back().is_zero()) {
        QPoly r = seq[seq.size() - 2] % seq.back();
        seq.push_back(-r);
    }
    seq.pop_back();
    auto variations = [&](const Rational& x) {
        int v = 0, last = 0;
        for (const auto& q : seq) {
            int s = q(x).sign();
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    };
    return variations(lo) - variations(hi);
}

/// All rational roots of p (with p having rational coefficients), without multiplicity.
inline std::vector<Rational> rational_roots(const QPoly& p) {
    std::vector<Rational> roots;
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    // Clear denominators to an integer polynomial.
    Integer lcm_den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<Integer> z;
    for (const auto& c : p.coeffs()) z.push_back((c * Rational(lcm_den)).numerator());
    std::size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    if (low > 0) roots.push_back(Rational(0));
    if (low + 1 >= z.size()) return roots;
    Integer a0 = abs(z[low]), an = abs(z.back());
    auto divisors = [](Integer n) {
        std::vector<Integer> out;
        for (Integer k = 1; k * k <= n; ++k) {
            if (n % k == 0) {
                out.push_back(k);
                if (k * k != n) out.push_back(n / k);
            }
        }
        return out;
    };
    for (const auto& num : divisors(a0)) {
        for (const auto& den : divisors(an)) {
            for (int sgn : {1, -1}) {
                Rational r(Integer(sgn * num), den);
                if (!p(r).is_zero()) continue;
                bool seen = false;
                for (const auto& q : roots) seen = seen || q == r;
                if (!seen) roots.push_back(r);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

template <>
struct ScalarTraits<QPoly> {
    static bool is_zero(const QPoly& p) { return p.is_zero(); }
};

}  // namespace bideform
