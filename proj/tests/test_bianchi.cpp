#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bideform/bianchi/catalog.hpp"
#include "bideform/bianchi/invariant_form.hpp"
#include "bideform/bianchi/presentation.hpp"
#include "bideform/bianchi/spin_lift.hpp"
#include "bideform/bianchi/word.hpp"
#include "bideform/linalg/elimination.hpp"

using namespace bideform;

namespace {

QuadReal R(long n, long d = 1) { return QuadReal(Rational(Integer(n), Integer(d))); }
QuadReal S3(long n, long d) { return QuadReal(3, Rational(0), Rational(Integer(n), Integer(d))); }

const std::map<int, std::size_t> kRelatorCount{{1, 8}, {2, 4}, {3, 8}, {5, 8}, {6, 8}, {7, 4}, {11, 4}, {15, 5}, {19, 7}};

}  // namespace

TEST_CASE("words parse, print and invert", "[word]") {
    const std::vector<std::string> names{"T", "U", "A"};
    const Word w = parse_word("TuA", names);
    REQUIRE(w.length() == 3);
    CHECK(w.letters()[1].gen == 1);
    CHECK(w.letters()[1].exp == -1);
    CHECK(w.to_string(names) == "TuA");
    CHECK(w.inverse().to_string(names) == "aUt");
    CHECK(parse_word("1", names).empty());
    CHECK((w * w.inverse()).length() == 6);
    CHECK(w.power(3).length() == 9);
    CHECK_THROWS_AS(parse_word("TX", names), std::invalid_argument);
}

TEST_CASE("catalog presentations", "[catalog]") {
    for (int d : kCatalog) {
        INFO("d = " << d);
        const Presentation p = swan_presentation(d);
        CHECK(p.d == d);
        CHECK(p.relators.size() == kRelatorCount.at(d));
        CHECK(p.generator_names.front() == "T");
        const auto verdicts = validate_presentation(p, sl2_generators(d));
        for (const auto& v : verdicts) CHECK(v.pass);
        for (const auto& [name, m] : sl2_generator_matrices(d)) CHECK(determinant_cofactor(m) == QuadImag(1));
    }
    CHECK_THROWS_AS(swan_presentation(4), std::domain_error);
    CHECK_THROWS_AS(require_catalog(10), std::domain_error);
    CHECK_FALSE(in_catalog(13));
}

TEST_CASE("spin lift of the unit translation", "[spin_lift]") {
    const auto T = sl2_generator_matrices(7).at("T");
    const SO31Matrix expected{{R(3, 2), R(-1, 2), R(1), R(0)},
                              {R(1, 2), R(1, 2), R(1), R(0)},
                              {R(1), R(-1), R(1), R(0)},
                              {R(0), R(0), R(0), R(1)}};
    CHECK(spin_lift(T) == expected);
    CHECK(spin_lift(-T) == expected);
    CHECK_THROWS_AS(spin_lift(SL2Matrix{{QuadImag(2), QuadImag(0)}, {QuadImag(0), QuadImag(1)}}), std::domain_error);
}

TEST_CASE("spin lift is a homomorphism into SO(3,1)", "[spin_lift][property]") {
    const SO31Matrix J = lorentz_form();
    for (int d : kCatalog) {
        INFO("d = " << d);
        const auto sl2 = sl2_generators(d);
        const auto hol = lifted_representation(d);
        for (const auto& g : hol.images) {
            CHECK(g.transpose() * J * g == J);
            CHECK(determinant(g) == QuadReal(1));
        }
        for (std::size_t a = 0; a < sl2.images.size(); ++a)
            for (std::size_t b = 0; b < sl2.images.size(); ++b)
                CHECK(spin_lift(sl2.images[a] * sl2.images[b]) == hol.images[a] * hol.images[b]);
        // PSL relators become honest identities upstairs.
        for (const auto& v : validate_presentation(hol.presentation, hol)) {
            CHECK(v.pass);
            CHECK_FALSE(v.sign_flip);
        }
    }
}

TEST_CASE("the lifted holonomy preserves exactly one symmetric form", "[invariant_form]") {
    for (int d : {1, 3, 7, 19}) {
        INFO("d = " << d);
        const auto forms = invariant_symmetric_forms(lifted_representation(d).images, FormAction::Columns);
        REQUIRE(forms.size() == 1);
        const auto& h = forms.front();
        const QuadReal scale = h(0, 0);
        REQUIRE_FALSE(scale.is_zero());
        Matrix<QuadReal> scaled = lorentz_form();
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) scaled(i, j) *= scale;
        CHECK(h == scaled);
    }
}

TEST_CASE("Hermitian invariants of SL(2, O_d) on C^2", "[invariant_form]") {
    // The standard action preserves only the symplectic pairing, which is not Hermitian.
    const auto gens = sl2_generators(3).images;
    CHECK(invariant_hermitian_forms(gens, FormAction::Columns).empty());
    // The upper triangular subgroup <T, U> fixes e1 and preserves e2 e2^H.
    const std::vector<SL2Matrix> borel{gens[0], gens[1]};
    const auto forms = invariant_hermitian_forms(borel, FormAction::Columns);
    REQUIRE(forms.size() == 1);
    CHECK(forms.front()(0, 0).is_zero());
    CHECK(forms.front()(0, 1).is_zero());
}

TEST_CASE("lift of the d = 3 generators with the other sixth root of unity", "[catalog]") {
    // Translation by (1 + i sqrt3)/2 and the transposed rotation lift. Both
    // are valid elements of SO(3,1), but together with the catalog T and A
    // they break the two relators that tie L to U and T.
    const SO31Matrix u_alt{{R(3, 2), R(-1, 2), R(1, 2), S3(1, 2)},
                           {R(1, 2), R(1, 2), R(1, 2), S3(1, 2)},
                           {R(1, 2), R(-1, 2), R(1), R(0)},
                           {S3(1, 2), S3(-1, 2), R(0), R(1)}};
    const SO31Matrix l_alt{{R(1), R(0), R(0), R(0)},
                           {R(0), R(1), R(0), R(0)},
                           {R(0), R(0), R(-1, 2), S3(1, 2)},
                           {R(0), R(0), S3(-1, 2), R(-1, 2)}};
    const SO31Matrix J = lorentz_form();
    CHECK(u_alt.transpose() * J * u_alt == J);
    CHECK(l_alt.transpose() * J * l_alt == J);

    auto alt = lifted_representation(3);
    alt.images[alt.presentation.index_of("U")] = u_alt;
    alt.images[alt.presentation.index_of("L")] = l_alt;
    std::size_t failures = 0;
    for (const auto& v : validate_presentation(alt.presentation, alt)) failures += v.pass ? 0 : 1;
    CHECK(failures >= 2);

    const auto catalog = lifted_representation(3);
    CHECK(catalog.image("U") != u_alt);
    for (const auto& v : validate_presentation(catalog.presentation, catalog)) CHECK(v.pass);
}

TEST_CASE("ad hoc presentations", "[presentation]") {
    Presentation p;
    p.generator_names = {"A", "B"};
    p.add_power("AB", 3);
    p.add_commutator("A", "B");
    p.add_equation("AA", "B");
    REQUIRE(p.relators.size() == 3);
    CHECK(p.relators[0].label == "(AB)^3");
    CHECK(p.relators[0].full().length() == 6);
    CHECK(p.relators[1].label == "[A,B]");
    CHECK(p.index_of("B") == 1);
    CHECK_THROWS_AS(p.index_of("C"), std::out_of_range);

    Representation<Rational> r{p, {Matrix<Rational>::identity(2)}};
    CHECK_THROWS_AS(r.check_shape(), std::invalid_argument);
}
