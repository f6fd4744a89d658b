#include "hurwitz/pic.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hurwitz;
using namespace hurwitz::pic;

TEST_CASE("mumford reduction eliminates delta_1") {
    const M21Class c{BigRat(1), BigRat(2), BigRat(3), BigRat(4)};
    const M21Class r = mumford_reduce(c);
    CHECK(r.psi == BigRat(1));
    CHECK(r.lambda == BigRat(22));
    CHECK(r.delta0 == BigRat(1));
    CHECK(r.delta1 == BigRat(0));

    // idempotent
    const M21Class rr = mumford_reduce(r);
    CHECK(rr.lambda == r.lambda);
    CHECK(rr.delta0 == r.delta0);

    // the relation itself reduces to zero
    const M21Class rel{BigRat(0), BigRat(1), BigRat(-1, 10), BigRat(-1, 5)};
    CHECK(classes_equal(rel, M21Class{BigRat(0), BigRat(0), BigRat(0), BigRat(0)}));
}

TEST_CASE("classes_equal works modulo the relation") {
    const M21Class a{BigRat(2), BigRat(1), BigRat(0), BigRat(0)};
    const M21Class b{BigRat(2), BigRat(0), BigRat(1, 10), BigRat(1, 5)};
    CHECK(classes_equal(a, b));
    CHECK_FALSE(classes_equal(a, M21Class{BigRat(2), BigRat(1), BigRat(1), BigRat(0)}));
}

TEST_CASE("MgClass validates its delta length") {
    CHECK_NOTHROW(MgClass(4, BigRat(1), {BigRat(0), BigRat(0), BigRat(0)}));
    CHECK_THROWS_AS(MgClass(4, BigRat(1), {BigRat(0), BigRat(0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(MgClass(3, BigRat(1), {BigRat(0), BigRat(0), BigRat(0)}),
                    std::invalid_argument);
}

TEST_CASE("tail pullback drops high boundary classes") {
    const MgClass c(5, BigRat(7),
                    {BigRat(1), BigRat(2), BigRat(3)});
    const M21Class pulled = chi_pullback(c, 4);
    CHECK(pulled.psi == BigRat(-3));
    CHECK(pulled.lambda == BigRat(7));
    CHECK(pulled.delta0 == BigRat(1));
    CHECK(pulled.delta1 == BigRat(2));

    CHECK_THROWS_AS(chi_pullback(c, 5), std::invalid_argument);
}

TEST_CASE("d=3 pullback sends delta_1 to delta_1 - psi") {
    const MgClass c(3, BigRat(7), {BigRat(1), BigRat(2)});
    const M21Class pulled = chi_pullback(c, 3);
    CHECK(pulled.psi == BigRat(-2));
    CHECK(pulled.lambda == BigRat(7));
    CHECK(pulled.delta0 == BigRat(1));
    CHECK(pulled.delta1 == BigRat(2));

    CHECK_THROWS_AS(chi_pullback(MgClass(4, BigRat(0), {BigRat(0), BigRat(0), BigRat(0)}), 3),
                    std::invalid_argument);
}

TEST_CASE("Weierstrass class in reduced form") {
    const M21Class w = mumford_reduce(weierstrass_class());
    CHECK(w.psi == BigRat(3));
    CHECK(w.lambda == BigRat(-6));
    CHECK(w.delta0 == BigRat(1, 2));
}

TEST_CASE("3-torsion divisor reconstructed from the Diaz class") {
    const M21Class d1 = reconstruct_D1();
    CHECK(classes_equal(d1, d1_class()));
    CHECK(d1.psi == BigRat(80));
    CHECK(d1.lambda == BigRat(-120));
    CHECK(d1.delta0 == BigRat(10));
}

TEST_CASE("genus-2 decomposition right-hand side at small d") {
    // d = 3: 8 W + 8 D1 + D2 + 0 D3
    const M21Class rhs3 = genus2_rhs(3);
    CHECK(rhs3.psi == BigRat(8 * 3 + 8 * 80 + 160));
    // d = 4: 492 W + 48 D1 + 2 D2 + 1 D3
    const M21Class rhs4 = genus2_rhs(4);
    CHECK(rhs4.psi == BigRat(492 * 3 + 48 * 80 + 2 * 160 + 640));
    CHECK(rhs4.psi == BigRat(6276));
}

TEST_CASE("flag coefficients interpolate i(g-i)/(g-1)") {
    const auto b5 = flag_coefficients(5, BigRat(4));
    REQUIRE(b5.size() == 2);
    CHECK(b5[0] == BigRat(4));
    CHECK(b5[1] == BigRat(6));

    const auto b7 = flag_coefficients(7, BigRat(1));
    REQUIRE(b7.size() == 3);
    CHECK(b7[0] == BigRat(1));
    CHECK(b7[1] == BigRat(5, 3));
    CHECK(b7[2] == BigRat(2));

    CHECK_THROWS_AS(flag_coefficients(2, BigRat(1)), std::domain_error);
}
