#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "bideform/bianchi/presentation.hpp"
#include "bideform/bianchi/spin_lift.hpp"
#include "bideform/exactfield/rational_function.hpp"
#include "bideform/family3/family.hpp"
#include "bideform/linalg/elimination.hpp"
#include "bideform/tangent/report.hpp"
#include "bideform/tangent/tangent.hpp"

using namespace bideform;

namespace {

struct Expected {
    std::size_t rows, cols, rank, kernel;
    long h1;
};

// Frozen reference table for the lifted holonomy of each catalog group.
const std::map<int, Expected> kTable{
    {3, {132, 64, 48, 16, 1}},  {1, {132, 64, 47, 17, 2}},  {2, {67, 48, 30, 18, 3}},
    {7, {67, 48, 30, 18, 3}},   {11, {67, 48, 29, 19, 4}},  {19, {116, 64, 44, 20, 5}},
    {5, {133, 80, 58, 22, 7}},  {15, {84, 64, 42, 22, 7}},  {6, {133, 80, 56, 24, 9}},
};

Matrix<Rational> elementary(std::size_t n, std::size_t i, std::size_t j, int c) {
    Matrix<Rational> e = Matrix<Rational>::identity(n);
    e(i, j) = Rational(c);
    return e;
}

Matrix<Rational> unit_basis(std::size_t n, std::size_t a, std::size_t b) {
    Matrix<Rational> e(n, n);
    e(a, b) = Rational(1);
    return e;
}

// Dimension of the solution space of the linearized relations, built by
// applying the linearization to every elementary tangent vector directly.
template <class Linearization>
std::size_t brute_force_kernel(std::size_t generators, std::size_t n, Linearization lin) {
    const std::size_t nn = n * n;
    std::vector<std::vector<Rational>> columns;
    for (std::size_t g = 0; g < generators; ++g)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) columns.push_back(lin(g, unit_basis(n, a, b)));
    Matrix<Rational> sys(columns.front().size(), generators * nn);
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t r = 0; r < columns[c].size(); ++r) sys(r, c) = columns[c][r];
    return generators * nn - rank(sys);
}

}  // namespace

TEST_CASE("tangent table for the catalog", "[tangent]") {
    const auto table = tangent_table();
    REQUIRE(table.size() == kTable.size());
    for (const auto& r : table) {
        INFO("d = " << r.d);
        const auto& e = kTable.at(r.d);
        CHECK(r.jacobian_rows == e.rows);
        CHECK(r.ambient_dim == e.cols);
        CHECK(r.jacobian_rank == e.rank);
        CHECK(r.kernel_dim == e.kernel);
        CHECK(r.cocycle_dim == r.kernel_dim);
        CHECK(r.b1_dim == 15);
        CHECK(r.h1_dim == e.h1);
        CHECK(r.irreducible);
    }
}

TEST_CASE("tangent table order and worker count do not change the results", "[tangent]") {
    const auto serial = tangent_table(1);
    const auto parallel = tangent_table(3);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t k = 0; k < serial.size(); ++k) {
        CHECK(serial[k].d == kTableOrder[k]);
        CHECK(parallel[k].d == serial[k].d);
        CHECK(parallel[k].h1_dim == serial[k].h1_dim);
    }
}

TEST_CASE("cyclic group of order two acting by a reflection pair", "[tangent][cocycle]") {
    Presentation p;
    p.generator_names = {"A"};
    p.add_power("A", 2);
    const Matrix<Rational> a = Matrix<Rational>::diagonal({Rational(1), Rational(1), Rational(-1), Rational(-1)});
    const std::vector<Matrix<Rational>> images{a};

    // Direct linearization of A^2 = I and det A = 1 at A = a: aX + Xa and tr(a^-1 X).
    const std::size_t oracle = brute_force_kernel(1, 4, [&](std::size_t, const Matrix<Rational>& x) {
        std::vector<Rational> out{(inverse(a) * x).trace()};
        const Matrix<Rational> anti = a * x + x * a;
        for (const auto& v : anti.data()) out.push_back(v);
        return out;
    });
    CHECK(oracle == 8);
    CHECK(cocycle_space_dim(p, images) == oracle);
    const auto rk = rank_and_kernel(jacobian(p, images));
    CHECK(16 - rk.rank == oracle);
}

TEST_CASE("free group on two generators", "[tangent][cocycle]") {
    Presentation p;
    p.generator_names = {"A", "B"};
    const Matrix<Rational> a = elementary(4, 0, 1, 2) * elementary(4, 2, 3, -1) * elementary(4, 3, 0, 1);
    const Matrix<Rational> b = elementary(4, 1, 0, 3) * elementary(4, 1, 2, 1) * elementary(4, 0, 3, -2);
    REQUIRE(determinant(a) == Rational(1));
    REQUIRE(determinant(b) == Rational(1));
    const std::vector<Matrix<Rational>> images{a, b};

    const std::size_t oracle = brute_force_kernel(2, 4, [&](std::size_t g, const Matrix<Rational>& x) {
        // Only the determinant conditions; place the tangent vector on generator g.
        std::vector<Rational> out(2, Rational(0));
        out[g] = (inverse(images[g]) * x).trace();
        return out;
    });
    CHECK(oracle == 30);
    CHECK(cocycle_space_dim(p, images) == oracle);
    CHECK(32 - rank(jacobian(p, images)) == oracle);
    CHECK(coboundary_dim(images) == 15);
}

TEST_CASE("relation jacobian is the derivative of the relation map", "[tangent][property]") {
    // Along rho_2 + e X over Q(e), the derivative at e = 0 of every residual
    // entry must equal J * vec(X).
    const auto base = rho_u(Rational(2));
    const Presentation& p = base.presentation;
    const std::size_t m = p.arity(), n = 4, nn = 16;
    const Matrix<Rational> jac = jacobian(base);
    const RationalFunction e = RationalFunction::variable();
    auto derivative_at_zero = [](const RationalFunction& f) {
        const QPoly& num = f.numerator();
        const QPoly& den = f.denominator();
        const Rational d0 = den.coeff(0);
        return (num.coeff(1) * d0 - num.coeff(0) * den.coeff(1)) / (d0 * d0);
    };

    std::mt19937 rng(31);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<Matrix<RationalFunction>> moved;
        std::vector<Rational> x;
        for (std::size_t g = 0; g < m; ++g) {
            Matrix<Rational> d(n, n);
            Matrix<RationalFunction> mv(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    d(i, j) = Rational(dist(rng));
                    mv(i, j) = RationalFunction(base.images[g](i, j)) + e * RationalFunction(d(i, j));
                    x.push_back(d(i, j));
                }
            moved.push_back(mv);
        }
        const auto res = relation_residuals(p, moved);
        std::vector<Rational> numeric;
        for (const auto& v : res.det) numeric.push_back(derivative_at_zero(v));
        for (const auto& r : res.relator)
            for (const auto& v : r.data()) numeric.push_back(derivative_at_zero(v));
        REQUIRE(numeric.size() == jac.rows());
        for (std::size_t row = 0; row < jac.rows(); ++row) {
            Rational acc(0);
            for (std::size_t c = 0; c < nn * m; ++c) acc += jac(row, c) * x[c];
            CHECK(acc == numeric[row]);
        }
    }
}

TEST_CASE("tangent computations reject bad input", "[tangent]") {
    auto r = rho_u(Rational(2));
    r.images[0](0, 0) += Rational(1);
    CHECK_THROWS_AS(jacobian(r), std::domain_error);
    CHECK_NOTHROW(relation_jacobian(r.presentation, r.images));
    CHECK_THROWS_AS(cocycle_space_dim(r.presentation, std::vector<Matrix<Rational>>{r.images[0]}), std::invalid_argument);
    CHECK_THROWS_AS(tangent_report(4), std::domain_error);
}

TEST_CASE("a reducible representation is detected", "[tangent]") {
    const Matrix<Rational> a = elementary(4, 0, 1, 1), b = elementary(4, 2, 3, 1);
    CHECK_FALSE(irreducibility_check(std::vector<Matrix<Rational>>{a, b}));
    CHECK(irreducibility_check(lifted_representation(3).images));
}
