#include "hurwitz/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hurwitz::oracle;

TEST_CASE("group law on a small curve") {
    // y^2 = x^3 + x + 6 over F_11, cyclic of order 13
    WeierstrassCurve c{11, 1, 6};
    REQUIRE(c.nonsingular());
    auto pts = enumerate_points(c);
    CHECK(pts.size() == 13);

    const ECPoint P = ECPoint::affine(2, 7);
    REQUIRE(on_curve(P, c));
    CHECK(point_order(P, c) == 13);
    CHECK(scalar_multiply(13, P, c).infinity);
    CHECK(group_law(P, negate(P, c), c).infinity);
    CHECK(scalar_multiply(6, P, c) ==
          group_law(scalar_multiply(2, P, c), scalar_multiply(4, P, c), c));
    CHECK(scalar_multiply(-3, P, c) == negate(scalar_multiply(3, P, c), c));
}

TEST_CASE("group law is associative and commutative") {
    WeierstrassCurve c{13, 2, 3};
    REQUIRE(c.nonsingular());
    auto pts = enumerate_points(c);
    for (const auto& P : pts)
        for (const auto& Q : pts) {
            CHECK(group_law(P, Q, c) == group_law(Q, P, c));
            for (const auto& R : pts)
                CHECK(group_law(group_law(P, Q, c), R, c) ==
                      group_law(P, group_law(Q, R, c), c));
        }
}

TEST_CASE("points off the curve are rejected") {
    WeierstrassCurve c{11, 1, 6};
    CHECK_THROWS_WITH(
        group_law(ECPoint::affine(1, 1), ECPoint::at_infinity(), c),
        Catch::Matchers::ContainsSubstring("invalid point"));
}

TEST_CASE("full torsion curves exist below 200") {
    for (long n : {2, 3, 4}) {
        auto tc = find_full_torsion_curve(n, 200);
        CHECK(tc.curve.p < 200);
        CHECK((tc.curve.p - 1) % n == 0);
        CHECK(tc.points.size() % (n * n) == 0);
        REQUIRE(tc.invariant_factors.size() == 2);
        CHECK(tc.invariant_factors[0] % n == 0);
        CHECK(tc.invariant_factors[1] % n == 0);
        CHECK(tc.invariant_factors[0] % tc.invariant_factors[1] == 0);
    }
}

TEST_CASE("nontrivial torsion point counts") {
    const ECPoint O = ECPoint::at_infinity();
    for (long skip = 0; skip < 3; ++skip) {
        auto t3 = find_full_torsion_curve(3, 200, skip);
        CHECK(count_torsion_solutions(t3, 3, O, {O}) == 8);

        auto t4 = find_full_torsion_curve(4, 200, skip);
        CHECK(count_torsion_solutions(t4, 4, O, {O}) == 15);

        auto t2 = find_full_torsion_curve(2, 200, skip);
        CHECK(count_torsion_solutions(t2, 2, O, {O}) == 3);
    }
}

TEST_CASE("division equations have n^2 solutions") {
    auto tc = find_full_torsion_curve(3, 200);
    for (std::size_t i = 0; i < 3 && i + 1 < tc.points.size(); ++i) {
        // base points inside 3E so the equations are solvable over F_p
        const ECPoint p = scalar_multiply(3, tc.points[i], tc.curve);
        const ECPoint q = scalar_multiply(3, tc.points[i + 1], tc.curve);
        CHECK(count_torsion_solutions(tc, 3, p, {}) == 9);
        CHECK(count_affine_combination(tc, p, q) == 9);
    }
}

TEST_CASE("unsolvable division is reported") {
    auto tc = find_full_torsion_curve(2, 200);
    // some point is not twice anything when the group has full 2-torsion
    bool found_nonsquare = false;
    for (const auto& P : tc.points) {
        bool hit = false;
        for (const auto& X : tc.points)
            if (scalar_multiply(2, X, tc.curve) == P) { hit = true; break; }
        if (!hit) {
            CHECK_THROWS_WITH(
                count_torsion_solutions(tc, 2, P, {}),
                Catch::Matchers::ContainsSubstring("no solutions over this field"));
            found_nonsquare = true;
            break;
        }
    }
    CHECK(found_nonsquare);
}
