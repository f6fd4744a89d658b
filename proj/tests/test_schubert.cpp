#include "hurwitz/schubert.hpp"

#include "hurwitz/invariants.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace hurwitz;
using namespace hurwitz::schubert;

namespace {

SchubertElement single(long a, long b, long n) {
    SchubertElement e;
    e.n = n;
    e.add_term({a, b, n}, 1);
    return e;
}

BigInt point_coefficient(const SchubertElement& e) {
    auto it = e.terms.find({e.n - 1, e.n - 1, e.n});
    return it == e.terms.end() ? BigInt(0) : it->second;
}

// Pairing integral of sigma_(a,b) with sigma_(a',b') via the Giambelli
// expansion of the second factor into special-class monomials:
// sigma_(a,b) = sigma_(0,a) sigma_(0,b) - sigma_(0,a-1) sigma_(0,b+1).
BigInt pairing(long a, long b, long ap, long bp, long n) {
    const auto times_special = [n](SchubertElement e, long c) {
        if (c == 0) return e;
        if (c > n - 1) return SchubertElement{n, {}};
        return pieri_multiply(e, c);
    };
    BigInt result = point_coefficient(times_special(times_special(single(a, b, n), ap), bp));
    if (bp + 1 <= n - 1 && ap >= 1)
        result -= point_coefficient(
            times_special(times_special(single(a, b, n), ap - 1), bp + 1));
    return result;
}

}  // namespace

TEST_CASE("Pieri rule basic products in G(1,3)") {
    auto e = pieri_multiply(single(0, 1, 3), 1);
    REQUIRE(e.terms.size() == 2);
    CHECK(e.terms.at({0, 2, 3}) == 1);
    CHECK(e.terms.at({1, 1, 3}) == 1);

    auto f = pieri_multiply(single(1, 1, 3), 1);
    REQUIRE(f.terms.size() == 1);
    CHECK(f.terms.at({1, 2, 3}) == 1);

    auto g = pieri_multiply(single(2, 2, 3), 2);
    CHECK(g.terms.empty());
}

TEST_CASE("Pieri rule rejects invalid special classes") {
    CHECK_THROWS_AS(pieri_multiply(single(0, 0, 3), 0), std::invalid_argument);
    CHECK_THROWS_AS(pieri_multiply(single(0, 0, 3), 3), std::invalid_argument);
}

TEST_CASE("special product integrals") {
    CHECK(special_product_integral(4, {2, 2, 1, 1}) == 2);
    CHECK(special_product_integral(4, {1, 1, 1, 1, 1, 1}) == 5);
    CHECK(special_product_integral(5, {3, 1, 1, 1, 1, 1}) == 4);
}

TEST_CASE("degree mismatch is reported") {
    CHECK_THROWS_WITH(special_product_integral(4, {1, 1, 1}),
                      Catch::Matchers::ContainsSubstring("not top degree"));
}

TEST_CASE("duality pairing on G(1,n)") {
    for (long n = 2; n <= 12; ++n) {
        for (long a = 0; a <= n - 1; ++a)
            for (long b = a; b <= n - 1; ++b)
                for (long ap = 0; ap <= n - 1; ++ap)
                    for (long bp = ap; bp <= n - 1; ++bp) {
                        if (a + b + ap + bp != 2 * (n - 1)) continue;
                        // complement of (a,b) in the (n-1) x (n-1) box
                        const bool dual = (ap == n - 1 - b) && (bp == n - 1 - a);
                        CHECK(pairing(a, b, ap, bp, n) == BigInt(dual ? 1 : 0));
                    }
    }
}

TEST_CASE("two triple points reproduce F(d)") {
    for (long d = 3; d <= 15; ++d) {
        std::vector<long> cs{2, 2};
        cs.insert(cs.end(), static_cast<std::size_t>(2 * d - 6), 1);
        CHECK(special_product_integral(d, cs) == invariants::F_inv(d));
    }
}

TEST_CASE("all-cusps products give the Catalan degree of G(1,n)") {
    for (long n = 3; n <= 15; ++n) {
        std::vector<long> cs(static_cast<std::size_t>(2 * n - 2), 1);
        const BigInt expected =
            factorial(2 * n - 2) / (factorial(n) * factorial(n - 1));
        CHECK(special_product_integral(n, cs) == expected);
    }
}

TEST_CASE("four-fold point products") {
    for (long d = 4; d <= 15; ++d) {
        std::vector<long> cs{3};
        cs.insert(cs.end(), static_cast<std::size_t>(2 * d - 5), 1);
        CHECK(special_product_integral(d, cs) * BigInt(2 * d - 4) ==
              4 * binomial(2 * d - 4, d));
    }
}

TEST_CASE("special products commute") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const long n = 4 + rng() % 5;
        std::vector<long> cs;
        long total = 0;
        while (total < 2 * (n - 1)) {
            long c = 1 + rng() % std::min<long>(3, 2 * (n - 1) - total);
            cs.push_back(c);
            total += c;
        }
        const BigInt base = special_product_integral(n, cs);
        for (int shuffle = 0; shuffle < 5; ++shuffle) {
            std::shuffle(cs.begin(), cs.end(), rng);
            CHECK(special_product_integral(n, cs) == base);
        }
    }
}
