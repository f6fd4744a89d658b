#include "hurwitz/abelian.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hurwitz;
using namespace hurwitz::abelian;

namespace {
const EECurveClass F1{BigRat(1), BigRat(0), BigRat(0)};
const EECurveClass F2{BigRat(0), BigRat(1), BigRat(0)};
const EECurveClass Delta{BigRat(0), BigRat(0), BigRat(1)};
}  // namespace

TEST_CASE("intersection form on E x E") {
    CHECK(ee_intersect(F1, F1) == BigRat(0));
    CHECK(ee_intersect(F2, F2) == BigRat(0));
    CHECK(ee_intersect(Delta, Delta) == BigRat(0));
    CHECK(ee_intersect(F1, F2) == BigRat(1));
    CHECK(ee_intersect(F1, Delta) == BigRat(1));
    CHECK(ee_intersect(F2, Delta) == BigRat(1));
}

TEST_CASE("class recovery from pairings") {
    // graph-type class pinned down by its pairings with Delta, F1, F2
    const EECurveClass sigma = ee_class_from_pairings(BigRat(15), BigRat(3), BigRat(8));
    CHECK(sigma == EECurveClass{BigRat(10), BigRat(5), BigRat(-2)});
    CHECK(ee_half_self_intersection(sigma) == BigRat(20));
    CHECK(ee_intersect(sigma, sigma) == BigRat(40));

    const EECurveClass u = ee_class_from_pairings(BigRat(8), BigRat(3), BigRat(3));
    const EECurveClass v = ee_class_from_pairings(BigRat(9), BigRat(4), BigRat(1));
    CHECK(u == EECurveClass{BigRat(4), BigRat(4), BigRat(-1)});
    CHECK(v == EECurveClass{BigRat(3), BigRat(6), BigRat(-2)});
    CHECK(ee_intersect(u, v) == BigRat(11));
}

TEST_CASE("pairings round-trip") {
    for (long f1 = -3; f1 <= 3; ++f1)
        for (long f2 = -3; f2 <= 3; ++f2)
            for (long dg = -3; dg <= 3; ++dg) {
                const EECurveClass c{BigRat(f1), BigRat(f2), BigRat(dg)};
                CHECK(ee_class_from_pairings(ee_intersect(c, Delta),
                                             ee_intersect(c, F1),
                                             ee_intersect(c, F2)) == c);
            }
}

TEST_CASE("graph of multiplication by n") {
    // graph of x -> nx pairs with F1, F2, Delta as 1, n^2, (n-1)^2
    for (long n = -4; n <= 4; ++n) {
        const EECurveClass gr = ee_class_from_pairings(
            BigRat((n - 1) * (n - 1)), BigRat(1), BigRat(n * n));
        CHECK(ee_half_self_intersection(gr) == BigRat(0));  // graphs are elliptic
        CHECK(ee_intersect(gr, gr) == BigRat(0));
    }
}

TEST_CASE("theta pullback degree matches its closed form") {
    for (long g = 2; g <= 5; ++g)
        for (long b = 1; b <= 5; ++b)
            for (long c = 1; c <= 5; ++c)
                CHECK(theta_pullback_degree(g, b, c) ==
                      BigInt(g) * (g - 1) * b * b * c * c);
    CHECK_THROWS_AS(theta_pullback_degree(1, 1, 1), std::domain_error);
    CHECK_THROWS_AS(theta_pullback_degree(2, 0, 1), std::domain_error);
}

TEST_CASE("excess-corrected genus-2 counts") {
    CHECK(excess_corrected_count(3, 3) == 160);
    CHECK(excess_corrected_count(2, 1) == 6);
    CHECK(excess_corrected_count(3, 2) == 70);
    CHECK_THROWS_AS(excess_corrected_count(1, 2), std::domain_error);
}

TEST_CASE("genus-3 pencil count") {
    CHECK(theta_pullback_degree(3, 2, 3) == 216);
    CHECK(enu3_count() == 210);
}
