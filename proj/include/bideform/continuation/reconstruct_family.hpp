#pragma once

/**
 * @file reconstruct_family.hpp
 * @brief Exact reconstruction of a one-parameter family from normalized path
 * points, followed by a symbolic relator check over the function field.
 *
 * Each sampled entry is first recognized as a rational number (a degree-1
 * algebraic_reconstruct on its decimal expansion). Each entry is then fitted
 * by p(x)/q(x) with deg p, deg q <= max_degree, where x is u when every point
 * carries a rational branch value and t otherwise: the smallest (deg p, deg q)
 * for which p(x_k) - y_k q(x_k) = 0 has a one-dimensional solution space wins.
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bideform/bianchi/presentation.hpp"
#include "bideform/continuation/real.hpp"
#include "bideform/continuation/schedule.hpp"
#include "bideform/exactfield/polynomial.hpp"
#include "bideform/exactfield/rational.hpp"
#include "bideform/exactfield/rational_function.hpp"
#include "bideform/linalg/elimination.hpp"
#include "bideform/linalg/matrix.hpp"
#include "bideform/linalg/reconstruct.hpp"

namespace bideform {

struct ReconstructSettings {
    unsigned max_degree = 4;
    Integer max_height = Integer("1000000000");
    std::size_t decimals = 36;  ///< decimals of each sample handed to the recognizer
};

struct FamilyCandidate {
    std::string variable;  ///< "u" or "t"
    Presentation presentation;
    std::vector<Matrix<RationalFunction>> entries;  ///< one matrix per generator
    std::vector<Rational> samples;                  ///< parameter values used
    std::vector<std::string> failed_entries;        ///< "gen(i,j): reason"
    std::vector<std::pair<std::string, bool>> relator_checks;
    bool unimodular = false;
    bool verified = false;

    bool complete() const { return failed_entries.empty(); }

    /// The candidate's images at a parameter value.
    std::vector<Matrix<Rational>> specialize(const Rational& x) const {
        std::vector<Matrix<Rational>> out;
        for (const auto& m : entries) out.push_back(m.map<Rational>([&](const RationalFunction& f) { return f.eval(x); }));
        return out;
    }
};

/// Smallest-degree rational function through (x_k, y_k), or nothing when no
/// (deg p, deg q) <= max_degree fits all samples.
inline std::optional<RationalFunction> fit_rational_function(const std::vector<Rational>& xs,
                                                             const std::vector<Rational>& ys, unsigned max_degree) {
    if (xs.size() != ys.size()) throw std::invalid_argument("fit_rational_function: size mismatch");
    const std::size_t m = xs.size();
    for (unsigned total = 0; total <= 2 * max_degree; ++total)
        for (unsigned dq = 0; dq <= std::min(total, max_degree); ++dq) {
            const unsigned dp = total - dq;
            if (dp > max_degree) continue;
            const std::size_t unknowns = dp + dq + 2;
            if (m < unknowns) continue;  // need one more sample than free parameters
            Matrix<Rational> sys(m, unknowns);
            for (std::size_t k = 0; k < m; ++k) {
                Rational pw(1);
                for (unsigned i = 0; i <= std::max(dp, dq); ++i) {
                    if (i <= dp) sys(k, i) = pw;
                    if (i <= dq) sys(k, dp + 1 + i) = -ys[k] * pw;
                    pw *= xs[k];
                }
            }
            const auto rk = rank_and_kernel(sys);
            if (rk.kernel.size() != 1) continue;
            const auto& v = rk.kernel.front();
            QPoly p(std::vector<Rational>(v.begin(), v.begin() + dp + 1));
            QPoly q(std::vector<Rational>(v.begin() + dp + 1, v.end()));
            if (q.is_zero()) continue;
            bool ok = true;
            for (std::size_t k = 0; k < m && ok; ++k) ok = !q.eval(xs[k]).is_zero();
            if (!ok) continue;
            return RationalFunction(p, q);
        }
    return std::nullopt;
}

/// Exact relator and determinant check of a candidate over Q(x).
inline void verify_candidate(FamilyCandidate& c) {
    c.relator_checks.clear();
    if (!c.complete()) {
        c.verified = false;
        return;
    }
    WordEvaluator<RationalFunction> ev(c.entries);
    bool all = true;
    for (const auto& rel : c.presentation.relators) {
        const bool ok = ev(rel.lhs) == ev(rel.rhs);
        c.relator_checks.emplace_back(rel.label, ok);
        all = all && ok;
    }
    c.unimodular = true;
    for (const auto& m : c.entries) c.unimodular = c.unimodular && determinant_cofactor(m) == RationalFunction(1);
    c.verified = all && c.unimodular;
}

/// Needs at least 2 * max_degree + 1 points (std::domain_error otherwise).
inline FamilyCandidate reconstruct_family(const std::vector<PathPoint>& points, const ReconstructSettings& s = {}) {
    if (points.size() < 2 * static_cast<std::size_t>(s.max_degree) + 1)
        throw std::domain_error("reconstruct_family: " + std::to_string(points.size()) + " samples, need at least " +
                                std::to_string(2 * s.max_degree + 1));
    FamilyCandidate c;
    c.presentation = points.front().representation.presentation;
    bool by_u = true;
    for (const auto& p : points) by_u = by_u && p.u.has_value();
    c.variable = by_u ? "u" : "t";
    for (const auto& p : points) c.samples.push_back(by_u ? *p.u : p.t);

    ReconstructOptions ro;
    ro.max_degree = 1;
    ro.max_height = s.max_height;

    const std::size_t gens = c.presentation.arity(), n = points.front().representation.dimension();
    for (std::size_t g = 0; g < gens; ++g) {
        Matrix<RationalFunction> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::string where =
                    c.presentation.generator_names[g] + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                std::vector<Rational> ys;
                for (const auto& p : points) {
                    const auto guess = algebraic_reconstruct(format_fixed(p.representation.images[g](i, j), s.decimals), ro);
                    if (guess.status != GuessStatus::Found) {
                        c.failed_entries.push_back(where + ": sample at " + p.t.to_string() + " not recognized (" +
                                                   to_string(guess.status) + ")");
                        break;
                    }
                    ys.push_back(guess.as_rational());
                }
                if (ys.size() != points.size()) continue;
                const auto f = fit_rational_function(c.samples, ys, s.max_degree);
                if (!f) {
                    c.failed_entries.push_back(where + ": no rational function of degree <= " +
                                               std::to_string(s.max_degree) + " fits the samples");
                    continue;
                }
                m(i, j) = *f;
            }
        c.entries.push_back(std::move(m));
    }
    verify_candidate(c);
    return c;
}

/// Largest entrywise gap between the candidate at each sample and the numeric point.
inline Real max_sample_deviation(const FamilyCandidate& c, const std::vector<PathPoint>& points) {
    if (points.size() != c.samples.size()) throw std::invalid_argument("max_sample_deviation: size mismatch");
    Real worst = 0;
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto exact = c.specialize(c.samples[k]);
        for (std::size_t g = 0; g < exact.size(); ++g)
            worst = std::max(worst, max_abs(to_real(exact[g]) - points[k].representation.images[g]));
    }
    return worst;
}

}  // namespace bideform
