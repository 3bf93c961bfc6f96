#include <catch_amalgamated.hpp>

#include <random>
#include <stdexcept>
#include <vector>

#include "bideform/continuation/newton.hpp"
#include "bideform/continuation/normal_form.hpp"
#include "bideform/continuation/real.hpp"
#include "bideform/continuation/reconstruct_family.hpp"
#include "bideform/continuation/schedule.hpp"
#include "bideform/continuation/trace_check.hpp"
#include "bideform/family3/family.hpp"
#include "bideform/io/json.hpp"

using namespace bideform;

namespace {

Representation<Real> real_family(const Rational& u) {
    const auto r = rho_u(u);
    Representation<Real> out{r.presentation, {}};
    for (const auto& m : r.images) out.images.push_back(to_real(m));
    return out;
}

Real max_gap(const Representation<Real>& a, const Representation<Real>& b) {
    Real worst = 0;
    for (std::size_t g = 0; g < a.images.size(); ++g) worst = std::max(worst, max_abs(a.images[g] - b.images[g]));
    return worst;
}

// Normalized samples of the exact family, as the tracer would produce them.
std::vector<PathPoint> exact_samples(const std::vector<Rational>& us) {
    std::vector<PathPoint> pts;
    for (const auto& u : us) {
        PathPoint p;
        p.u = u;
        p.t = t_of_u(u);
        p.representation = real_family(u);
        pts.push_back(std::move(p));
    }
    return pts;
}

std::vector<Rational> u_grid(std::size_t n) {
    std::vector<Rational> us;
    for (std::size_t k = 1; k <= n; ++k) us.push_back(Rational(Integer(static_cast<long>(20 + k)), Integer(20)));
    return us;
}

}  // namespace

TEST_CASE("perturbation is deterministic and bounded", "[newton]") {
    PrecisionScope scope(60);
    const auto h = holonomy_real();
    CHECK(max_gap(perturb(h, 0.0, 7), h) == 0);
    const auto a = perturb(h, 1e-3, 7), b = perturb(h, 1e-3, 7), c = perturb(h, 1e-3, 8);
    CHECK(max_gap(a, b) == 0);
    CHECK(max_gap(a, c) > 0);
    CHECK(max_gap(a, h) <= Real("1e-3"));
    CHECK(max_gap(a, h) > Real("1e-4"));
    CHECK_THROWS_AS(perturb(h, -1.0, 7), std::invalid_argument);
}

TEST_CASE("newton settings are validated", "[newton]") {
    NewtonSettings s;
    CHECK_NOTHROW(s.validate());
    s.precision_digits = 10;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = {};
    s.residual_target = 1e-55;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = {};
    s.damping = 0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("characteristic polynomial pins hold exactly on the family", "[newton]") {
    const auto hol = lifted_representation(3);
    for (const auto& r : pin_residuals(hol, charpoly_pin(Rational(2)))) CHECK(r.is_zero());
    const auto r2 = rho_u(Rational(2));
    for (const auto& r : pin_residuals(r2, charpoly_pin(Rational(5, 2)))) CHECK(r.is_zero());
    bool any_nonzero = false;
    for (const auto& r : pin_residuals(r2, charpoly_pin(Rational(3)))) any_nonzero = any_nonzero || !r.is_zero();
    CHECK(any_nonzero);
    CHECK(charpoly_pin(Rational(3))[1].label() == "e2(T)=8");
}

TEST_CASE("pin gradients are derivatives of the elementary symmetric functions", "[newton][property]") {
    std::mt19937 rng(6);
    std::uniform_int_distribution<int> dist(-4, 4);
    const RationalFunction e = RationalFunction::variable();
    for (int trial = 0; trial < 10; ++trial) {
        Matrix<Rational> m(4, 4), x(4, 4);
        Matrix<RationalFunction> moved(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                m(i, j) = Rational(dist(rng));
                x(i, j) = Rational(dist(rng));
                moved(i, j) = RationalFunction(m(i, j)) + e * RationalFunction(x(i, j));
            }
        const auto el = CoefficientPin::elementary(moved);
        for (unsigned k = 1; k <= 4; ++k) {
            const CoefficientPin pin{"T", k, Rational(0)};
            const Matrix<Rational> p = pin.gradient(m);
            // tr(P X) with the gradient used transposed against X.
            Rational predicted(0);
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t b = 0; b < 4; ++b) predicted += p(b, a) * x(a, b);
            CHECK(el[k].numerator().coeff(1) == predicted);
            CHECK(el[k].denominator() == QPoly(Rational(1)));
        }
    }
}

TEST_CASE("least squares solve", "[newton]") {
    PrecisionScope scope(40);
    Matrix<Real> a(4, 2);
    a(0, 0) = 1; a(0, 1) = 0;
    a(1, 0) = 0; a(1, 1) = 1;
    a(2, 0) = 1; a(2, 1) = 1;
    a(3, 0) = 1; a(3, 1) = -1;
    // Consistent right-hand side for x = (3, -2).
    const std::vector<Real> b{3, -2, 1, 5};
    const auto x = detail::householder_least_squares(a, b);
    REQUIRE(x.size() == 2);
    CHECK(abs(x[0] - 3) < Real("1e-35"));
    CHECK(abs(x[1] + 2) < Real("1e-35"));
    CHECK_THROWS_AS(detail::householder_least_squares(Matrix<Real>(1, 2), std::vector<Real>{1}), std::invalid_argument);
}

TEST_CASE("newton refinement", "[newton]") {
    PrecisionScope scope(60);
    NewtonSettings s;
    const auto h = holonomy_real();

    const auto fixed = newton_refine(h.presentation, h, charpoly_pin(Rational(2)), s);
    CHECK(fixed.success);
    CHECK(fixed.iterations == 0);

    const auto noisy = perturb(h, 1e-3, 7);
    const auto free = newton_refine(h.presentation, noisy, {}, s);
    REQUIRE(free.success);
    CHECK(free.residual <= s.residual_target);
    CHECK(free.history.front() > free.history.back());
    // Without pins the solver lands on a nearby representation that is in
    // general not conjugate to the holonomy: tr(T) moves off 4.
    CHECK(abs(free.representation.image("T").trace() - 4) > Real("1e-12"));

    const Rational t(21, 10);
    const auto pinned = newton_refine(h.presentation, noisy, charpoly_pin(t), s);
    REQUIRE(pinned.success);
    for (const auto& r : pin_residuals(pinned.representation, charpoly_pin(t))) CHECK(abs(r) <= Real(s.residual_target));
    CHECK(equation_residual(pinned.representation, charpoly_pin(t)) <= Real(s.residual_target));

    NewtonSettings starved = s;
    starved.max_iterations = 1;
    const auto fail = newton_refine(h.presentation, perturb(h, 1e-1, 3), charpoly_pin(Rational(5)), starved);
    CHECK_FALSE(fail.success);
    CHECK(fail.failure == "max_iterations reached");
}

TEST_CASE("conjugacy normal form", "[normal_form]") {
    PrecisionScope scope(60);
    const Real tol("1e-45");

    // The family is already in normal form, and the holonomy normalizes to u = 1.
    for (const auto& u : {Rational(2), Rational(3, 4), Rational(-5, 3)}) {
        const auto r = real_family(u);
        const auto nf = normalize_conjugacy(r);
        REQUIRE(nf.success);
        CHECK(max_gap(nf.representation, r) < tol);
    }
    const auto hol = normalize_conjugacy(holonomy_real());
    REQUIRE(hol.success);
    CHECK(max_gap(hol.representation, real_family(Rational(1))) < tol);

    auto trivial = holonomy_real();
    for (auto& m : trivial.images) m = Matrix<Real>::identity(4);
    CHECK_FALSE(normalize_conjugacy(trivial).success);
}

TEST_CASE("normal form is idempotent and conjugation invariant", "[normal_form][property]") {
    PrecisionScope scope(60);
    const Real tol("1e-40");
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> dist(-3, 3);
    const auto base = perturb(holonomy_real(), 1e-3, 11);
    NewtonSettings s;
    const auto point = newton_refine(base.presentation, base, charpoly_pin(Rational(41, 20)), s);
    REQUIRE(point.success);
    const auto nf = normalize_conjugacy(point.representation);
    REQUIRE(nf.success);
    const auto again = normalize_conjugacy(nf.representation);
    REQUIRE(again.success);
    CHECK(max_gap(again.representation, nf.representation) < tol);

    for (int trial = 0; trial < 5; ++trial) {
        Matrix<Rational> g(4, 4);
        do {
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) g(i, j) = Rational(dist(rng));
        } while (determinant(g).is_zero());
        const Matrix<Real> gr = to_real(g), gi = to_real(inverse(g));
        auto moved = point.representation;
        for (auto& m : moved.images) m = gr * m * gi;
        const auto nm = normalize_conjugacy(moved);
        REQUIRE(nm.success);
        CHECK(max_gap(nm.representation, nf.representation) < tol);
    }
}

TEST_CASE("parameter schedules", "[schedule]") {
    CHECK(rational_u_of_t(Rational(5, 2)) == Rational(2));
    CHECK(rational_u_of_t(Rational(-10, 3)) == Rational(-3));
    CHECK_FALSE(rational_u_of_t(Rational(3)).has_value());
    const auto ts = t_schedule(Rational(2), Rational(5, 2), 4);
    REQUIRE(ts.size() == 4);
    CHECK(ts.front() == t_of_u(Rational(5, 4)));
    CHECK(ts.back() == Rational(5, 2));
    CHECK_THROWS_AS(t_schedule(Rational(2), Rational(3), 4), std::domain_error);
    CHECK_THROWS_AS(t_schedule_from_u(Rational(1), Rational(2), 0), std::invalid_argument);
}

TEST_CASE("fitting rational functions", "[reconstruct]") {
    // (u^2 + 1)/(u - 3)
    const RationalFunction u = RationalFunction::variable();
    const RationalFunction planted = (u * u + RationalFunction(1)) / (u - RationalFunction(3));
    std::vector<Rational> xs, ys;
    for (int k = 1; k <= 9; ++k) {
        xs.push_back(Rational(Integer(k), Integer(7)));
        ys.push_back(planted.eval(xs.back()));
    }
    const auto fit = fit_rational_function(xs, ys, 4);
    REQUIRE(fit.has_value());
    CHECK(*fit == planted);

    // Five samples cannot pin down a degree (2, 1) function plus a check.
    const std::vector<Rational> few_x(xs.begin(), xs.begin() + 4), few_y(ys.begin(), ys.begin() + 4);
    CHECK_FALSE(fit_rational_function(few_x, few_y, 4).has_value());
    // Degree bound too small.
    CHECK_FALSE(fit_rational_function(xs, ys, 1).has_value());
    CHECK_THROWS_AS(fit_rational_function(xs, few_y, 4), std::invalid_argument);
}

TEST_CASE("planted family is reconstructed exactly", "[reconstruct]") {
    PrecisionScope scope(60);
    const auto pts = exact_samples(u_grid(9));
    const auto cand = reconstruct_family(pts);
    REQUIRE(cand.complete());
    CHECK(cand.variable == "u");
    CHECK(cand.verified);
    CHECK(cand.unimodular);
    CHECK(cand.entries == rho_u_symbolic().images);
    CHECK(max_sample_deviation(cand, pts) < Real("1e-50"));

    const auto agree = trace_agreement(pts, &cand);
    CHECK(agree.candidate_checked);
    CHECK(agree.exact_gap == Rational(0));
    CHECK(agree.numeric_gap < Real("1e-50"));

    // Round trip through JSON re-verifies the candidate.
    const auto back = io::candidate_from_json(io::candidate_json(cand));
    CHECK(back.verified);
    CHECK(back.entries == cand.entries);

    const auto pj = io::path_point_json(pts[3], 60);
    const auto pp = io::path_point_from_json(pj, pts[3].representation.presentation);
    CHECK(pp.u == pts[3].u);
    CHECK(max_gap(pp.representation, pts[3].representation) < Real("1e-55"));
}

TEST_CASE("reconstruction reports bad input", "[reconstruct]") {
    PrecisionScope scope(60);
    CHECK_THROWS_AS(reconstruct_family(exact_samples(u_grid(8))), std::domain_error);

    auto pts = exact_samples(u_grid(9));
    pts[4].representation.images[0](1, 2) += Real("1e-3");
    const auto cand = reconstruct_family(pts);
    CHECK_FALSE(cand.complete());
    CHECK_FALSE(cand.verified);
    REQUIRE(cand.failed_entries.size() == 1);
    CHECK(cand.failed_entries.front().rfind("T(1,2)", 0) == 0);

    // Without rational branch values the fit falls back to t.
    auto by_t = exact_samples(u_grid(9));
    for (auto& p : by_t) p.u.reset();
    const auto ct = reconstruct_family(by_t);
    CHECK(ct.variable == "t");
    CHECK_THROWS_AS(trace_agreement(by_t), std::domain_error);
}

TEST_CASE("traced path lands on the explicit family", "[schedule][reconstruct]") {
    PrecisionScope scope(60);
    NewtonSettings s;
    const auto start = perturb(holonomy_real(), 1e-3, 7);
    const auto ts = t_schedule_from_u(Rational(1), Rational(29, 20), 9);
    const auto path = trace_schedule(start, ts, s);
    REQUIRE(path.success);
    REQUIRE(path.points.size() == 9);
    for (std::size_t k = 0; k < path.points.size(); ++k) {
        const auto& p = path.points[k];
        CHECK(p.charpoly_check);
        CHECK(p.residual <= s.residual_target);
        REQUIRE(p.u.has_value());
        CHECK(t_of_u(*p.u) == ts[k]);
    }
    const auto cand = reconstruct_family(path.points);
    REQUIRE(cand.verified);
    CHECK(cand.entries == rho_u_symbolic().images);
    CHECK(trace_agreement(path.points, &cand).exact_gap == Rational(0));
}

TEST_CASE("a coarse schedule fails and keeps the points found so far", "[schedule]") {
    PrecisionScope scope(60);
    NewtonSettings s;
    s.max_iterations = 20;
    const std::vector<Rational> ts{t_of_u(Rational(21, 20)), t_of_u(Rational(10))};
    const auto path = trace_schedule(holonomy_real(), ts, s);
    CHECK_FALSE(path.success);
    CHECK(path.points.size() == 1);
    REQUIRE(path.failed_t.has_value());
    CHECK(*path.failed_t == ts[1]);
    CHECK(path.failure.find("Newton failed at t = 101/10") == 0);
    CHECK(path.failed_history.size() == s.max_iterations + 1);
}
