#pragma once

/**
 * @file schedule.hpp
 * @brief Warm-started continuation along a list of pinned parameter values
 * t = u + 1/u, starting from the lifted Bi(3) holonomy.
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bideform/bianchi/spin_lift.hpp"
#include "bideform/continuation/newton.hpp"
#include "bideform/continuation/normal_form.hpp"
#include "bideform/continuation/real.hpp"
#include "bideform/exactfield/polynomial.hpp"
#include "bideform/exactfield/rational.hpp"

namespace bideform {

struct PathPoint {
    Rational t;
    std::optional<Rational> u;  ///< root of x^2 - t x + 1 on the traced branch, when rational
    Representation<Real> representation;  ///< normalized
    double residual = 0;
    bool charpoly_check = false;
    unsigned iterations = 0;
    std::vector<double> history;
};

struct ScheduleResult {
    bool success = false;
    std::vector<PathPoint> points;
    std::optional<Rational> failed_t;
    std::string failure;
    std::vector<double> failed_history;
};

/// The Bi(3) holonomy cast to the current precision.
inline Representation<Real> holonomy_real(int d = 3) {
    const auto hol = lifted_representation(d);
    Representation<Real> r{hol.presentation, {}};
    for (const auto& m : hol.images) r.images.push_back(to_real(m));
    return r;
}

/// Rational u with u + 1/u = t, if any; returns the root >= 1 (or <= -1).
inline std::optional<Rational> rational_u_of_t(const Rational& t) {
    const auto roots = rational_roots(QPoly(std::vector<Rational>{Rational(1), -t, Rational(1)}));
    if (roots.empty()) return std::nullopt;
    Rational best = roots.front();
    for (const auto& r : roots)
        if (r.abs() > best.abs()) best = r;
    return best;
}

inline Rational t_of_u(const Rational& u) { return u + u.inverse(); }

/// t_k = u_k + 1/u_k with u_k evenly spaced in u over (u_from, u_to].
inline std::vector<Rational> t_schedule_from_u(const Rational& u_from, const Rational& u_to, unsigned steps) {
    if (steps == 0) throw std::invalid_argument("t_schedule: steps must be positive");
    std::vector<Rational> ts;
    for (unsigned k = 1; k <= steps; ++k)
        ts.push_back(t_of_u(u_from + (u_to - u_from) * Rational(static_cast<long>(k), static_cast<long>(steps))));
    return ts;
}

/// Same, with endpoints given as t values that must be u + 1/u for rational u.
inline std::vector<Rational> t_schedule(const Rational& t_from, const Rational& t_to, unsigned steps) {
    const auto a = rational_u_of_t(t_from), b = rational_u_of_t(t_to);
    if (!a || !b) throw std::domain_error("t_schedule: endpoints must be u + 1/u for rational u");
    return t_schedule_from_u(*a, *b, steps);
}

namespace detail {

/// Root of x^2 - t x + 1 nearest to tr(UA), the branch marker of the normal form.
inline std::optional<Rational> branch_u(const Rational& t, const Representation<Real>& normalized) {
    const auto roots = rational_roots(QPoly(std::vector<Rational>{Rational(1), -t, Rational(1)}));
    if (roots.empty()) return std::nullopt;
    const Real marker = (normalized.image("U") * normalized.image("A")).trace();
    Rational best = roots.front();
    for (const auto& r : roots)
        if (abs(to_real(r) - marker) < abs(to_real(best) - marker)) best = r;
    return best;
}

}  // namespace detail

/// Newton at each t in order, warm-started from the previous normalized
/// point. Stops at the first failure and keeps the points found so far.
/// The caller holds a PrecisionScope for settings.precision_digits.
inline ScheduleResult trace_schedule(const Representation<Real>& start, const std::vector<Rational>& t_list,
                                     const NewtonSettings& settings) {
    ScheduleResult out;
    Representation<Real> current = start;
    for (const auto& t : t_list) {
        const auto pins = charpoly_pin(t);
        NewtonResult nr = newton_refine(current.presentation, current, pins, settings);
        if (!nr.success) {
            out.failed_t = t;
            out.failure = "Newton failed at t = " + t.to_string() + ": " + nr.failure;
            out.failed_history = nr.history;
            return out;
        }
        NormalFormResult nf = normalize_conjugacy(nr.representation);
        if (!nf.success) {
            out.failed_t = t;
            out.failure = "normal form failed at t = " + t.to_string() + ": " + nf.failure;
            return out;
        }
        PathPoint pt;
        pt.t = t;
        pt.representation = std::move(nf.representation);
        pt.u = detail::branch_u(t, pt.representation);
        pt.residual = static_cast<double>(equation_residual(pt.representation, pins));
        pt.charpoly_check = true;
        for (const auto& r : pin_residuals(pt.representation, pins))
            pt.charpoly_check = pt.charpoly_check && abs(r) <= Real(settings.residual_target);
        pt.iterations = nr.iterations;
        pt.history = std::move(nr.history);
        current = pt.representation;
        out.points.push_back(std::move(pt));
    }
    out.success = true;
    return out;
}

}  // namespace bideform
