#pragma once

/**
 * @file isometry.hpp
 * @brief Elliptic / parabolic / loxodromic classification from exact
 * eigen-data, the root-of-unity obstruction to discreteness, and the
 * eigenvalue test for non-conjugacy inside the family.
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bideform/exactfield/polynomial.hpp"
#include "bideform/exactfield/quadratic.hpp"
#include "bideform/family3/family.hpp"
#include "bideform/linalg/charpoly.hpp"
#include "bideform/linalg/elimination.hpp"
#include "bideform/linalg/matrix.hpp"

namespace bideform {

enum class IsometryClass { Elliptic, Parabolic, Loxodromic };

inline const char* to_string(IsometryClass c) {
    switch (c) {
        case IsometryClass::Elliptic: return "elliptic";
        case IsometryClass::Parabolic: return "parabolic";
        case IsometryClass::Loxodromic: return "loxodromic";
    }
    return "?";
}

/// A candidate eigenvalue and whether it has modulus one in the context of
/// the computation (decided by the caller for symbolic parameters).
template <class F>
struct EigenCandidate {
    F value;
    bool unit_modulus = false;
};

struct EigenDatum {
    std::string value;
    std::size_t algebraic_multiplicity = 0;
    std::size_t geometric_multiplicity = 0;
    bool unit_modulus = false;
};

struct IsometryVerdict {
    IsometryClass cls = IsometryClass::Elliptic;
    std::vector<EigenDatum> eigen_data;
    bool diagonalizable = false;
};

/// Classifies g from eigenvalue candidates. The characteristic polynomial
/// must split over the candidates; otherwise std::domain_error is thrown.
template <class F>
IsometryVerdict classify_isometry(const Matrix<F>& g, const std::vector<EigenCandidate<F>>& candidates) {
    if (!g.is_square()) throw std::invalid_argument("classify_isometry: square matrix required");
    const std::size_t n = g.rows();
    Polynomial<F> chi = characteristic_polynomial(g);
    IsometryVerdict out;
    std::size_t total_alg = 0, total_geo = 0;
    bool all_unit = true;
    std::vector<F> seen;
    for (const auto& c : candidates) {
        bool dup = false;
        for (const auto& v : seen) dup = dup || v == c.value;
        if (dup) continue;
        seen.push_back(c.value);
        const Polynomial<F> lin(std::vector<F>{-c.value, F(1)});
        std::size_t mult = 0;
        for (;;) {
            auto [q, r] = chi.divmod(lin);
            if (!r.is_zero()) break;
            chi = q;
            ++mult;
        }
        if (mult == 0) continue;
        Matrix<F> shifted = g;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= c.value;
        const std::size_t geo = n - rank(shifted);
        out.eigen_data.push_back({c.value.to_string(), mult, geo, c.unit_modulus});
        total_alg += mult;
        total_geo += geo;
        all_unit = all_unit && c.unit_modulus;
    }
    if (total_alg != n)
        throw std::domain_error("classify_isometry: characteristic polynomial does not split over the candidates");
    out.diagonalizable = total_geo == n;
    if (!all_unit) out.cls = IsometryClass::Loxodromic;
    else out.cls = out.diagonalizable ? IsometryClass::Elliptic : IsometryClass::Parabolic;
    return out;
}

/// Rational matrices: candidates are the rational roots of the characteristic polynomial.
inline IsometryVerdict classify_isometry(const Matrix<Rational>& g) {
    std::vector<EigenCandidate<Rational>> c;
    for (const auto& r : rational_roots(characteristic_polynomial(g))) c.push_back({r, r.abs() == Rational(1)});
    return classify_isometry(g, c);
}

/// Matrices over Q(i sqrt d) with supplied eigenvalues; moduli are computed.
inline IsometryVerdict classify_isometry(const Matrix<QuadImag>& g, const std::vector<QuadImag>& eigenvalues) {
    std::vector<EigenCandidate<QuadImag>> c;
    for (const auto& v : eigenvalues) c.push_back({v, v.norm() == Rational(1)});
    return classify_isometry(g, c);
}

/// rho_u(T) at a point u of Q(i sqrt d); eigenvalues 1, u, 1/u.
inline IsometryVerdict classify_family_T(const QuadImag& u) {
    return classify_isometry(rho_u(u).image("T"), std::vector<QuadImag>{QuadImag(1), u, u.inverse()});
}

/// rho_u(T) over Q(u) with |u| = 1 assumed (u, 1/u have unit modulus).
inline IsometryVerdict classify_family_T_on_circle() {
    const RationalFunction u = RationalFunction::variable();
    return classify_isometry(rho_u_symbolic().image("T"),
                             std::vector<EigenCandidate<RationalFunction>>{
                                 {RationalFunction(1), true}, {u, true}, {u.inverse(), true}});
}

enum class Discreteness { NotFaithful, NonDiscrete, Inconclusive };

inline const char* to_string(Discreteness v) {
    switch (v) {
        case Discreteness::NotFaithful: return "NotFaithful";
        case Discreteness::NonDiscrete: return "NonDiscrete";
        case Discreteness::Inconclusive: return "Inconclusive";
    }
    return "?";
}

struct DiscretenessReport {
    Discreteness verdict = Discreteness::Inconclusive;
    QPoly minimal_polynomial;
    std::optional<unsigned> order;  ///< n with u a primitive n-th root of unity
    bool torsion_verified = false;  ///< rho_u(T)^n == I checked exactly
};

/// Cyclotomic polynomials of degree <= 2 (the only ones a quadratic
/// irrationality can satisfy), keyed by n.
inline std::vector<std::pair<unsigned, QPoly>> low_degree_cyclotomics() {
    auto P = [](std::vector<int> c) {
        std::vector<Rational> q;
        for (int v : c) q.emplace_back(v);
        return QPoly(q);
    };
    return {{1, P({-1, 1})}, {2, P({1, 1})}, {3, P({1, 1, 1})}, {4, P({1, 0, 1})}, {6, P({1, -1, 1})}};
}

/// Elliptic rho_u(T) has finite order iff u is a root of unity; then rho_u is
/// not faithful. Otherwise the cyclic group it generates is not discrete.
inline DiscretenessReport discreteness_obstruction(const QuadImag& u) {
    if (u.norm() != Rational(1)) throw std::domain_error("discreteness_obstruction: |u| != 1");
    DiscretenessReport rep;
    if (u.is_real()) {
        rep.minimal_polynomial = QPoly(std::vector<Rational>{-u.a(), Rational(1)});
        return rep;  // u = +-1
    }
    // x^2 - 2a x + (a^2 + d b^2)
    rep.minimal_polynomial = QPoly(std::vector<Rational>{u.norm(), Rational(-2) * u.a(), Rational(1)});
    for (const auto& [n, phi] : low_degree_cyclotomics()) {
        if (phi != rep.minimal_polynomial) continue;
        rep.verdict = Discreteness::NotFaithful;
        rep.order = n;
        const auto T = rho_u(u).image("T");
        rep.torsion_verified = matrix_pow(T, n) == Matrix<QuadImag>::identity(4);
        return rep;
    }
    rep.verdict = Discreteness::NonDiscrete;
    return rep;
}

enum class ConjugacyVerdict { NotConjugate, EigenvalueEquivalent };

inline const char* to_string(ConjugacyVerdict v) {
    return v == ConjugacyVerdict::NotConjugate ? "NotConjugate" : "EigenvalueEquivalent";
}

/// Compares the eigenvalue multisets {1,1,u,1/u} and {1,1,u',1/u'} of rho(T).
template <class F>
ConjugacyVerdict nonconjugacy(const F& u, const F& v) {
    if (ScalarTraits<F>::is_zero(u) || ScalarTraits<F>::is_zero(v))
        throw std::domain_error("nonconjugacy: parameter 0 is excluded");
    const F one(1);
    return (u == v || u * v == one) ? ConjugacyVerdict::EigenvalueEquivalent : ConjugacyVerdict::NotConjugate;
}

}  // namespace bideform
