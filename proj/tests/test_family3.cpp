#include <catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "bideform/bianchi/catalog.hpp"
#include "bideform/bianchi/spin_lift.hpp"
#include "bideform/exactfield/circle.hpp"
#include "bideform/family3/family.hpp"
#include "bideform/family3/hermitian.hpp"
#include "bideform/family3/isometry.hpp"
#include "bideform/linalg/charpoly.hpp"
#include "bideform/linalg/elimination.hpp"

using namespace bideform;

namespace {

QPoly P(std::vector<int> c) {
    std::vector<Rational> q;
    for (int v : c) q.emplace_back(v);
    return QPoly(q);
}

// Rational parameters with small height, avoiding the poles 0 and -1.
std::vector<Rational> sample_parameters() {
    std::vector<Rational> out;
    for (int p = -7; p <= 7; ++p)
        for (int q : {1, 2, 3, 5}) {
            const Rational u{Integer(p), Integer(q)};
            if (u.is_zero() || u == Rational(-1)) continue;
            out.push_back(u);
        }
    return out;
}

}  // namespace

TEST_CASE("the family satisfies every relator over Q(u)", "[family]") {
    const auto verdicts = verify_family();
    REQUIRE(verdicts.size() == 8);
    for (const auto& v : verdicts) {
        INFO(v.label);
        CHECK(v.pass);
    }
    CHECK(unimodular(rho_u_symbolic()));
}

TEST_CASE("specializations are representations", "[family][property]") {
    for (const auto& u : sample_parameters()) {
        INFO("u = " << u);
        const auto r = rho_u(u);
        for (const auto& v : validate_presentation(r.presentation, r)) CHECK(v.pass);
        CHECK(unimodular(r));
        const auto& T = r.image("T");
        CHECK(characteristic_polynomial(T) == charpoly_t_form(u + u.inverse()));
        Matrix<Rational> shifted = T - Matrix<Rational>::identity(4);
        CHECK(rank(shifted) == 2);
    }
    CHECK_THROWS_AS(rho_u(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(rho_u(Rational(-1)), std::domain_error);
}

TEST_CASE("characteristic polynomial of T", "[family]") {
    CHECK(charpoly_T() == expected_charpoly_T());
    CHECK(charpoly_T() == charpoly_t_form());
    CHECK(charpoly_t_form(Rational(2)) == P({1, -4, 6, -4, 1}));  // (x - 1)^4
}

TEST_CASE("u = 1 recovers the holonomy up to conjugacy", "[family]") {
    const auto cert = certify_holonomy_conjugacy();
    CHECK(cert.solution_dim == 1);
    REQUIRE(cert.verified);
    const auto hol = lifted_representation(3);
    const auto r1 = rho_u(Rational(1));
    const Matrix<QuadReal> xi = inverse(cert.conjugator);
    for (std::size_t g = 0; g < hol.images.size(); ++g) {
        const auto expected = r1.images[g].map<QuadReal>([](const Rational& x) { return QuadReal(x); });
        CHECK(cert.conjugator * hol.images[g] * xi == expected);
    }
}

TEST_CASE("invariant Hermitian forms on the unit circle", "[hermitian]") {
    const auto rep = hermitian_form_at(Rational(3, 5), Rational(4, 5));
    CHECK(rep.all_invariant());
    CHECK(rep.signature == Inertia{3, 1, 0});
    CHECK(same_line(recovered_hermitian_forms(rep.point).at(0), rep.form));

    const auto below = hermitian_form_at(Rational(-3, 5), Rational(4, 5));
    CHECK(below.all_invariant());
    CHECK(below.signature == Inertia{0, 4, 0});  // definite; H_u is negative definite there

    CHECK_THROWS_AS(hermitian_form_at(Rational(1, 2), Rational(1, 2)), std::domain_error);
}

TEST_CASE("Hermitian form type changes only across s = 1/4", "[hermitian][property]") {
    const QPoly det = P({2, -22, 72, -32, -128});
    CHECK(det == Rational(-2) * P({1, 1}) * pow(P({-1, 4}), 3));
    for (int p = -12; p <= 12; ++p)
        for (int q : {1, 2, 3, 7}) {
            const CirclePoint c = circle_point(Rational(Integer(p), Integer(q)));
            if (c.s == Rational(-1)) continue;
            INFO("s = " << c.s << ", t = " << c.t);
            const auto rep = hermitian_form_at(c.s, c.t);
            CHECK(rep.all_invariant());
            const auto forms = recovered_hermitian_forms(c);
            REQUIRE(forms.size() == 1);
            CHECK(same_line(forms.front(), rep.form));
            CHECK(determinant(rep.form) == QuadImag(det(c.s)));
            if (c.s > Rational(1, 4)) CHECK(rep.signature == Inertia{3, 1, 0});
            else CHECK(rep.signature == Inertia{0, 4, 0});
        }
}

TEST_CASE("determinant wall", "[hermitian]") {
    const auto wall = det_wall_analysis();
    CHECK(wall.determinant == P({2, -22, 72, -32, -128}));
    REQUIRE(wall.roots.size() == 2);
    CHECK(wall.roots[0] == Rational(-1));
    CHECK(wall.roots[1] == Rational(1, 4));
    CHECK(wall.real_roots_in_interval == 2);
    CHECK(wall.quarter_is_only_wall());
}

TEST_CASE("same_line", "[hermitian]") {
    const auto h = hermitian_form_matrix(circle_point(Rational(2)));
    Matrix<QuadImag> scaled = h;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) scaled(i, j) *= QuadImag(1, Rational(2), Rational(-3));
    CHECK(same_line(scaled, h));
    CHECK_FALSE(same_line(Matrix<QuadImag>(4, 4), h));
    scaled(3, 3) += QuadImag(1);
    CHECK_FALSE(same_line(scaled, h));
}

TEST_CASE("isometry type of rho_u(T)", "[isometry]") {
    const auto circle = classify_family_T_on_circle();
    CHECK(circle.cls == IsometryClass::Elliptic);
    CHECK(circle.diagonalizable);

    const auto at_point = classify_family_T(QuadImag(1, Rational(3, 5), Rational(4, 5)));
    CHECK(at_point.cls == IsometryClass::Elliptic);
    CHECK(at_point.eigen_data.size() == 3);

    const auto parabolic = classify_isometry(rho_u(Rational(1)).image("T"));
    CHECK(parabolic.cls == IsometryClass::Parabolic);
    CHECK_FALSE(parabolic.diagonalizable);
    REQUIRE(parabolic.eigen_data.size() == 1);
    CHECK(parabolic.eigen_data.front().algebraic_multiplicity == 4);
    CHECK(parabolic.eigen_data.front().geometric_multiplicity == 2);

    for (const auto& u : {Rational(2), Rational(1, 3), Rational(-5, 2)}) {
        const auto lox = classify_isometry(rho_u(u).image("T"));
        CHECK(lox.cls == IsometryClass::Loxodromic);
    }
    // Eigenvalues outside Q: the rational overload cannot split the polynomial.
    CHECK_THROWS_AS(classify_isometry(rho_u(QuadImag(1, Rational(3, 5), Rational(4, 5))).image("T"),
                                      std::vector<QuadImag>{QuadImag(1)}),
                    std::domain_error);
}

TEST_CASE("discreteness obstruction on the circle", "[isometry]") {
    const auto nd = discreteness_obstruction(QuadImag(1, Rational(3, 5), Rational(4, 5)));
    CHECK(nd.verdict == Discreteness::NonDiscrete);
    CHECK(nd.minimal_polynomial == QPoly({Rational(1), Rational(-6, 5), Rational(1)}));

    const auto i = discreteness_obstruction(QuadImag::i_sqrt(1));
    CHECK(i.verdict == Discreteness::NotFaithful);
    CHECK(i.order == 4u);
    CHECK(i.torsion_verified);

    const auto w = discreteness_obstruction(QuadImag(3, Rational(1, 2), Rational(1, 2)));
    CHECK(w.verdict == Discreteness::NotFaithful);
    CHECK(w.order == 6u);
    CHECK(w.torsion_verified);

    const auto w3 = discreteness_obstruction(QuadImag(3, Rational(-1, 2), Rational(1, 2)));
    CHECK(w3.verdict == Discreteness::NotFaithful);
    CHECK(w3.order == 3u);

    CHECK(discreteness_obstruction(QuadImag(1)).verdict == Discreteness::Inconclusive);
    CHECK_THROWS_AS(discreteness_obstruction(QuadImag(2)), std::domain_error);

    // Every other rational point of the circle gives a non-discrete image.
    for (int p = 2; p <= 20; ++p) {
        const CirclePoint c = circle_point(Rational(Integer(1), Integer(p)));
        CHECK(discreteness_obstruction(c.as_complex()).verdict == Discreteness::NonDiscrete);
    }
}

TEST_CASE("non-conjugacy across the family", "[isometry][property]") {
    const auto params = sample_parameters();
    for (const auto& u : params)
        for (const auto& v : params) {
            const auto verdict = nonconjugacy(u, v);
            const bool same_charpoly =
                characteristic_polynomial(rho_u(u).image("T")) == characteristic_polynomial(rho_u(v).image("T"));
            CHECK((verdict == ConjugacyVerdict::EigenvalueEquivalent) == same_charpoly);
        }
    CHECK(nonconjugacy(Rational(2), Rational(1, 2)) == ConjugacyVerdict::EigenvalueEquivalent);
    CHECK(nonconjugacy(Rational(2), Rational(3)) == ConjugacyVerdict::NotConjugate);
    CHECK_THROWS_AS(nonconjugacy(Rational(0), Rational(3)), std::domain_error);
}
