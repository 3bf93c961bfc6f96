#pragma once

/**
 * @file reconstruct.hpp
 * @brief Guessing an integer minimal polynomial for a decimal approximation
 * by LLL on the lattice spanned by rows (e_i, round(x^i / eps)).
 *
 * eps is the unit of the last digit supplied. The precision budget is
 * checked before any lattice work so that short inputs produce an explicit
 * InsufficientPrecision result instead of a spurious relation.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bideform/exactfield/polynomial.hpp"
#include "bideform/exactfield/rational.hpp"
#include "bideform/linalg/lll.hpp"

namespace bideform {

enum class GuessStatus { Found, NoGuess, InsufficientPrecision };

inline const char* to_string(GuessStatus s) {
    switch (s) {
        case GuessStatus::Found: return "found";
        case GuessStatus::NoGuess: return "no-guess";
        case GuessStatus::InsufficientPrecision: return "insufficient-precision";
    }
    return "?";
}

struct ReconstructOptions {
    unsigned max_degree = 2;
    Integer max_height = 1000;
    /// Extra digits per lattice dimension on top of log10(max_height).
    unsigned guard_digits = 2;
    /// When nonzero, overrides the rule above: required digits are
    /// digits_per_term * (max_degree + 1).
    unsigned digits_per_term = 0;
    Rational delta = Rational(3, 4);
};

struct AlgebraicGuess {
    GuessStatus status = GuessStatus::NoGuess;
    std::vector<Integer> minimal_polynomial;  ///< coefficients, constant term first
    double residual = 0.0;                    ///< |p(x)| at the supplied decimal
    Integer height = 0;
    bool reducible = false;
    std::size_t digits_available = 0;
    std::size_t digits_required = 0;

    int degree() const { return static_cast<int>(minimal_polynomial.size()) - 1; }

    /// The root of a degree-1 guess.
    Rational as_rational() const {
        if (status != GuessStatus::Found || degree() != 1) throw std::logic_error("AlgebraicGuess: not a rational guess");
        return Rational(-minimal_polynomial[0], minimal_polynomial[1]);
    }
};

namespace detail {

struct ParsedDecimal {
    Rational value;
    Rational eps;  // unit in the last supplied place
    std::size_t significant = 0;
};

inline ParsedDecimal parse_decimal(std::string_view text) {
    ParsedDecimal out;
    out.value = Rational::parse(text);
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s.find('/') != std::string::npos) throw std::invalid_argument("algebraic_reconstruct: expected a decimal");
    long frac = 0, exponent = 0;
    bool point = false, leading = true;
    std::size_t pos = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c == '.') {
            point = true;
        } else if (c >= '0' && c <= '9') {
            if (point) ++frac;
            if (c != '0') leading = false;
            if (!leading) ++out.significant;
        } else {
            exponent = std::stol(s.substr(pos + 1));
            break;
        }
    }
    long e = exponent - frac;
    out.eps = e >= 0 ? Rational(pow10(static_cast<unsigned long>(e)))
                     : Rational(Integer(1), pow10(static_cast<unsigned long>(-e)));
    return out;
}

inline std::size_t required_digits(const ReconstructOptions& o) {
    if (o.digits_per_term > 0) return static_cast<std::size_t>(o.digits_per_term) * (o.max_degree + 1);
    double lh = std::log10(std::max(2.0, o.max_height.get_d()));
    return static_cast<std::size_t>(std::ceil((o.max_degree + 1) * (lh + o.guard_digits)));
}

inline Rational eval_int_poly(const std::vector<Integer>& p, const Rational& x) {
    Rational acc(0);
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + Rational(p[k]);
    return acc;
}

// Normalizes to a primitive polynomial with positive leading coefficient.
inline std::vector<Integer> primitive_part(std::vector<Integer> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    Integer g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g != 0 && g != 1)
        for (auto& c : p) c /= g;
    if (!p.empty() && p.back() < 0)
        for (auto& c : p) c = -c;
    return p;
}

inline bool has_rational_root(const std::vector<Integer>& p) {
    std::vector<Rational> q;
    for (const auto& c : p) q.emplace_back(c);
    return !rational_roots(QPoly(q)).empty();
}

}  // namespace detail

/// Minimal-polynomial guess for the real number given as a decimal string.
inline AlgebraicGuess algebraic_reconstruct(std::string_view decimal, const ReconstructOptions& opt = {}) {
    if (opt.max_degree == 0) throw std::invalid_argument("algebraic_reconstruct: max_degree must be positive");
    auto in = detail::parse_decimal(decimal);
    AlgebraicGuess g;
    g.digits_available = in.significant;
    g.digits_required = detail::required_digits(opt);

    // A short exact decimal is its own answer.
    {
        Integer num = in.value.numerator(), den = in.value.denominator();
        if (abs(num) <= opt.max_height && den <= opt.max_height) {
            g.status = GuessStatus::Found;
            g.minimal_polynomial = {-num, den};
            g.height = std::max<Integer>(abs(num), den);
            return g;
        }
    }
    if (g.digits_available < g.digits_required) {
        g.status = GuessStatus::InsufficientPrecision;
        return g;
    }

    const Rational& x = in.value;
    const Rational scale = in.eps.inverse();
    const Rational xabs1 = std::max(x.abs(), Rational(1));
    std::vector<Rational> powers{Rational(1)};
    for (unsigned k = 1; k <= opt.max_degree; ++k) powers.push_back(powers.back() * x);

    for (unsigned n = 1; n <= opt.max_degree; ++n) {
        LatticeBasis basis;
        for (unsigned i = 0; i <= n; ++i) {
            IntVector row(n + 2, Integer(0));
            row[i] = 1;
            row[n + 1] = (powers[i] * scale).round();
            basis.push_back(std::move(row));
        }
        LatticeBasis red = lll_reduce(basis, opt.delta);
        std::optional<std::vector<Integer>> best;
        Integer best_height = 0;
        for (const auto& v : red) {
            std::vector<Integer> p(v.begin(), v.begin() + n + 1);
            p = detail::primitive_part(std::move(p));
            if (static_cast<unsigned>(p.size()) != n + 1) continue;
            Integer h = 0;
            for (const auto& c : p) h = std::max<Integer>(h, abs(c));
            if (h > opt.max_height) continue;
            // Noise floor: first-order error of p at x from the last digit.
            Rational slope(1);
            for (std::size_t i = 1; i < p.size(); ++i) {
                Rational term = Rational(abs(p[i])) * Rational(static_cast<long>(i));
                for (std::size_t e = 1; e < i; ++e) term *= xabs1;
                slope += term;
            }
            Rational value = detail::eval_int_poly(p, x).abs();
            if (value > Rational(2) * slope * in.eps) continue;
            if (!best || h < best_height) {
                best = p;
                best_height = h;
            }
        }
        if (best) {
            g.status = GuessStatus::Found;
            g.minimal_polynomial = *best;
            g.height = best_height;
            g.residual = detail::eval_int_poly(*best, x).abs().to_double();
            g.reducible = n >= 2 && detail::has_rational_root(*best);
            return g;
        }
    }
    g.status = GuessStatus::NoGuess;
    return g;
}

}  // namespace bideform
