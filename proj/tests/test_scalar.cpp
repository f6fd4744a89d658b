#include "hurwitz/scalar.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hurwitz;

TEST_CASE("inv_factorial basic values") {
    CHECK(inv_factorial(3) == BigRat(1, 6));
    CHECK(inv_factorial(0) == BigRat(1));
    CHECK(inv_factorial(-2) == BigRat(0));
    CHECK(inv_factorial(-1) == BigRat(0));
}

TEST_CASE("inv_factorial inverts the factorial") {
    for (long n = 0; n <= 30; ++n)
        CHECK(inv_factorial(n) * BigRat(factorial(n)) == BigRat(1));
    for (long n = -10; n < 0; ++n) CHECK(inv_factorial(n) == BigRat(0));
}

TEST_CASE("binomial values and out-of-range zeros") {
    CHECK(binomial(4, 3) == 4);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(6, 5) == 6);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-3, 1) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial Pascal identity") {
    for (long n = 2; n <= 60; ++n)
        for (long k = 1; k < n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("solve_linear three-cycle systems") {
    LinearSystem sys;
    sys.add_row({BigRat(1), BigRat(1), BigRat(0)}, BigRat(15), "x+y");
    sys.add_row({BigRat(0), BigRat(1), BigRat(1)}, BigRat(3), "y+z");
    sys.add_row({BigRat(1), BigRat(0), BigRat(1)}, BigRat(8), "x+z");
    auto x = solve_linear(sys);
    REQUIRE(x.size() == 3);
    CHECK(x[0] == BigRat(10));
    CHECK(x[1] == BigRat(5));
    CHECK(x[2] == BigRat(-2));

    LinearSystem sys2;
    sys2.add_row({BigRat(1), BigRat(1), BigRat(0)}, BigRat(8), "a+b");
    sys2.add_row({BigRat(0), BigRat(1), BigRat(1)}, BigRat(3), "b+c");
    sys2.add_row({BigRat(1), BigRat(0), BigRat(1)}, BigRat(3), "a+c");
    auto y = solve_linear(sys2);
    CHECK(y == std::vector<BigRat>{BigRat(4), BigRat(4), BigRat(-1)});
}

TEST_CASE("solve_linear trivial system") {
    LinearSystem sys;
    sys.add_row({BigRat(1)}, BigRat(1), "x");
    CHECK(solve_linear(sys) == std::vector<BigRat>{BigRat(1)});
}

TEST_CASE("solve_linear singular system reports rank deficiency") {
    LinearSystem sys;
    sys.add_row({BigRat(1), BigRat(1)}, BigRat(2), "r1");
    sys.add_row({BigRat(2), BigRat(2)}, BigRat(4), "r2");
    CHECK_THROWS_AS(solve_linear(sys), UnderdeterminedError);
    try {
        solve_linear(sys);
    } catch (const UnderdeterminedError& e) {
        CHECK(e.rank_deficiency == 1);
    }
}

TEST_CASE("solve_linear inconsistent system names the violated row") {
    LinearSystem sys;
    sys.add_row({BigRat(1), BigRat(1)}, BigRat(2), "sum");
    sys.add_row({BigRat(1), BigRat(-1)}, BigRat(0), "diff");
    sys.add_row({BigRat(2), BigRat(0)}, BigRat(5), "double");
    try {
        solve_linear(sys);
        FAIL("expected InconsistentError");
    } catch (const InconsistentError& e) {
        CHECK(e.row_label == "double");
    }
}

TEST_CASE("solve_linear residual is exactly zero") {
    // deterministic pseudo-random exact systems
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        LinearSystem sys;
        std::vector<BigRat> solution;
        for (std::size_t i = 0; i < n; ++i) {
            solution.emplace_back(static_cast<long>(rng() % 19) - 9,
                                  static_cast<long>(rng() % 6) + 1);
            solution.back().canonicalize();
        }
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<BigRat> row;
            BigRat rhs(0);
            for (std::size_t j = 0; j < n; ++j) {
                row.emplace_back(static_cast<long>(rng() % 11) - 5);
                rhs += row.back() * solution[j];
            }
            row[i] += BigRat(10);  // diagonal dominance keeps it nonsingular
            rhs += BigRat(10) * solution[i];
            sys.add_row(row, rhs, "row" + std::to_string(i));
        }
        auto x = solve_linear(sys);
        for (const auto& r : sys.rows) {
            BigRat acc(0);
            for (std::size_t j = 0; j < n; ++j) acc += r.coeffs[j] * x[j];
            CHECK(acc - r.rhs == BigRat(0));
        }
    }
}

TEST_CASE("LinearSystem rejects malformed rows") {
    LinearSystem sys;
    sys.add_row({BigRat(1), BigRat(2)}, BigRat(3), "ok");
    CHECK_THROWS_AS(sys.add_row({BigRat(1)}, BigRat(0), "short"),
                    std::invalid_argument);
    CHECK_THROWS_AS(sys.add_row({BigRat(0), BigRat(1)}, BigRat(0), "ok"),
                    std::invalid_argument);
}
