#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "bideform/exactfield/circle.hpp"
#include "bideform/exactfield/polynomial.hpp"
#include "bideform/exactfield/quadratic.hpp"
#include "bideform/exactfield/rational.hpp"
#include "bideform/exactfield/rational_function.hpp"

using namespace bideform;

namespace {

Rational random_rational(std::mt19937& rng, int bound = 40) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

QPoly P(std::vector<int> c) {
    std::vector<Rational> q;
    for (int v : c) q.emplace_back(v);
    return QPoly(q);
}

}  // namespace

TEST_CASE("rational arithmetic and parsing", "[rational]") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(-4, 6).to_string() == "-2/3");
    CHECK(Rational::parse("10/-4") == Rational(-5, 2));
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse("-1.5e-2") == Rational(-3, 200));
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(5, 2).round() == 3);
    CHECK(Rational(-5, 2).round() == -3);
    CHECK_THROWS_AS(Rational(1).inverse() / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("rational text round trip and field axioms", "[rational][property]") {
    std::mt19937 rng(11);
    for (int k = 0; k < 200; ++k) {
        const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK(Rational::parse(a.to_string()) == a);
        CHECK((a + b) * c == a * c + b * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(a - a == Rational(0));
    }
}

TEST_CASE("quadratic fields", "[quadratic]") {
    const QuadReal s2 = QuadReal::sqrt_of(2);
    CHECK(s2 * s2 == QuadReal(2));
    CHECK((QuadReal(1) + s2).inverse() == QuadReal(2, Rational(-1), Rational(1)));
    CHECK(QuadReal(2, Rational(-1), Rational(1)).sign() == 1);
    CHECK(QuadReal(2, Rational(3, 2), Rational(-1)).sign() == 1);   // 1.5 - 1.414
    CHECK(QuadReal(2, Rational(7, 5), Rational(-1)).sign() == -1);  // 1.4 - 1.414

    const QuadImag i = QuadImag::i_sqrt(1);
    CHECK(i * i == QuadImag(-1));
    // (1 + 2i)(3 - i) = 5 + 5i
    CHECK(QuadImag(1, Rational(1), Rational(2)) * QuadImag(1, Rational(3), Rational(-1)) ==
          QuadImag(1, Rational(5), Rational(5)));
    CHECK(QuadImag(1, Rational(3), Rational(4)).norm() == Rational(25));

    CHECK(tau(3) == QuadImag(3, Rational(1, 2), Rational(1, 2)));
    CHECK(tau(3, TauConvention::Bi3Catalog) == QuadImag(3, Rational(-1, 2), Rational(1, 2)));
    CHECK(tau(5) == QuadImag::i_sqrt(5));
    CHECK(tau(19) * tau(19) - tau(19) + QuadImag(5) == QuadImag(0));  // tau^2 - tau + 5 = 0

    CHECK_THROWS(QuadImag::i_sqrt(4));
    CHECK_THROWS(QuadImag::i_sqrt(2) + QuadImag::i_sqrt(3));
}

TEST_CASE("quadratic norm is multiplicative and text round-trips", "[quadratic][property]") {
    std::mt19937 rng(5);
    for (long d : {1L, 2L, 3L, 7L, 19L}) {
        for (int k = 0; k < 30; ++k) {
            const QuadImag x(d, random_rational(rng), random_rational(rng));
            const QuadImag y(d, random_rational(rng), random_rational(rng));
            CHECK((x * y).norm() == x.norm() * y.norm());
            CHECK((x * y).conj() == x.conj() * y.conj());
            CHECK(QuadImag::parse(x.to_string()) == x);
            if (!x.is_zero()) CHECK(x * x.inverse() == QuadImag(1));

            if (d == 1) continue;
            const QuadReal p(d, random_rational(rng), random_rational(rng));
            const QuadReal q(d, random_rational(rng), random_rational(rng));
            CHECK((p * q).norm() == p.norm() * q.norm());
            CHECK(QuadReal::parse(p.to_string()) == p);
            const double approx = p.a().to_double() + p.b().to_double() * std::sqrt(static_cast<double>(d));
            if (std::abs(approx) > 1e-9) CHECK(p.sign() == (approx > 0 ? 1 : -1));
        }
    }
}

TEST_CASE("polynomial division, gcd and roots", "[polynomial]") {
    const QPoly a = P({-1, 0, 1});  // x^2 - 1
    const QPoly b = P({1, 1});      // x + 1
    CHECK(a / b == P({-1, 1}));
    CHECK((a % b).is_zero());
    CHECK(gcd(P({-1, 0, 1}), P({1, 2, 1})) == P({1, 1}));
    CHECK(P({1, 2, 3}).derivative() == P({2, 6}));
    CHECK(P({1, 1}).compose(P({0, 2})) == P({1, 2}));

    // 6x^3 - 11x^2 + 6x - 1 = (2x - 1)(3x - 1)(x - 1)
    const auto roots = rational_roots(P({-1, 6, -11, 6}));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Rational(1, 3));
    CHECK(roots[1] == Rational(1, 2));
    CHECK(roots[2] == Rational(1));
    CHECK(rational_roots(P({-2, 0, 1})).empty());

    // x^3 - 2x has roots 0, +-sqrt 2
    CHECK(sturm_count(P({0, -2, 0, 1}), Rational(-2), Rational(2)) == 3);
    CHECK(sturm_count(P({0, -2, 0, 1}), Rational(0), Rational(2)) == 1);
    CHECK(sturm_count(P({1, 0, 1}), Rational(-10), Rational(10)) == 0);
    // repeated roots are counted once
    CHECK(sturm_count(P({1, -2, 1}), Rational(0), Rational(2)) == 1);
}

TEST_CASE("polynomial ring identities", "[polynomial][property]") {
    std::mt19937 rng(3);
    auto random_poly = [&](int deg) {
        std::vector<Rational> c;
        for (int k = 0; k <= deg; ++k) c.push_back(random_rational(rng, 9));
        return QPoly(c);
    };
    for (int k = 0; k < 40; ++k) {
        const QPoly f = random_poly(4), g = random_poly(2);
        if (g.is_zero()) continue;
        const QPoly q = f / g, r = f % g;
        CHECK(q * g + r == f);
        CHECK(r.degree() < g.degree());
        const Rational x = random_rational(rng);
        CHECK((f * g)(x) == f(x) * g(x));
    }
}

TEST_CASE("rational functions", "[rational_function]") {
    const RationalFunction u = RationalFunction::variable();
    const RationalFunction f = (u * u - RationalFunction(1)) / (u - RationalFunction(1));
    CHECK(f == u + RationalFunction(1));
    CHECK(f.denominator().degree() == 0);
    CHECK(f.eval(Rational(3)) == Rational(4));
    CHECK((RationalFunction(1) / u + u).eval(Rational(2)) == Rational(5, 2));
    CHECK_THROWS(RationalFunction(0).inverse());
    CHECK_THROWS((RationalFunction(1) / u).eval(Rational(0)));
    CHECK((RationalFunction(1) / (u + RationalFunction(1))).to_string("u") == "(1)/(u+1)");
}

TEST_CASE("rational circle points", "[circle][property]") {
    std::mt19937 rng(17);
    for (int k = 0; k < 50; ++k) {
        const Rational q = random_rational(rng);
        const CirclePoint p = circle_point(q);
        CHECK(p.s * p.s + p.t * p.t == Rational(1));
        CHECK(p.as_complex().norm() == Rational(1));
    }
    CHECK(circle_point(Rational(1, 2)).s == Rational(3, 5));
    CHECK(circle_point(Rational(1, 2)).t == Rational(4, 5));
    CHECK_THROWS_AS(CirclePoint(Rational(1, 2), Rational(1, 2)), std::domain_error);
}
