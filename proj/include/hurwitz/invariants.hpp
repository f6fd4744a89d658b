#pragma once

#include "hurwitz/abelian.hpp"
#include "hurwitz/scalar.hpp"
#include "hurwitz/schubert.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz::invariants {

// Closed-form enumerative invariants.  Every factorial reciprocal is routed
// through inv_factorial so the 1/n! = 0 convention for n < 0 applies
// uniformly; no per-formula special-casing.

/// a(d,g) = (2d-g-1) g! / (d! (g-d+1)!)
inline BigInt a_inv(long d, long g) {
    BigRat v = BigRat(2 * d - g - 1) * BigRat(factorial(g)) *
               inv_factorial(d) * inv_factorial(g - d + 1);
    return to_integer(v, "a_inv");
}

/// b(d,g) = (2d-g-1)(2d-g)(2d-g+1) g! / (d! (g-d)!)
inline BigInt b_inv(long d, long g) {
    BigRat v = BigRat((2 * d - g - 1)) * BigRat(2 * d - g) *
               BigRat(2 * d - g + 1) * BigRat(factorial(g)) *
               inv_factorial(d) * inv_factorial(g - d);
    return to_integer(v, "b_inv");
}

/// c(d,g,gamma) = (gamma^2 (2d-g) - gamma) C(g,d)
inline BigInt c_inv(long d, long g, long gamma) {
    return (BigInt(gamma) * gamma * (2 * d - g) - gamma) * binomial(g, d);
}

/// e(d,g) = 8 g! / ((d-3)! (g-d+2)!) - 8 g! / (d! (g-d-1)!)
inline BigInt e_inv(long d, long g) {
    BigRat v = BigRat(8) * BigRat(factorial(g)) *
               (inv_factorial(d - 3) * inv_factorial(g - d + 2) -
                inv_factorial(d) * inv_factorial(g - d - 1));
    return to_integer(v, "e_inv");
}

/// F(d) = (2d-6)! (1/(d-3)!^2 - 1/(d! (d-6)!))
inline BigInt F_inv(long d) {
    BigRat v = BigRat(factorial(2 * d - 6)) *
               (inv_factorial(d - 3) * inv_factorial(d - 3) -
                inv_factorial(d) * inv_factorial(d - 6));
    return to_integer(v, "F_inv");
}

/// N(d) = 48 (6d^2 - 28d + 35) (2d-4)! / (d! (d-3)!)
inline BigInt N_inv(long d) {
    BigRat v = BigRat(48) * BigRat(6 * d * d - 28 * d + 35) *
               BigRat(factorial(2 * d - 4)) * inv_factorial(d) *
               inv_factorial(d - 3);
    return to_integer(v, "N_inv");
}

/// N1(d) = 24 (12d^3 - 92d^2 + 240d - 215) (2d-4)! / (d! (d-2)!)
inline BigInt N1_inv(long d) {
    BigRat v = BigRat(24) * BigRat(12 * d * d * d - 92 * d * d + 240 * d - 215) *
               BigRat(factorial(2 * d - 4)) * inv_factorial(d) *
               inv_factorial(d - 2);
    return to_integer(v, "N1_inv");
}

/// N2(d) = 6 (40d^2 - 179d + 212) (2d-4)! / (d! (d-3)!)
inline BigInt N2_inv(long d) {
    BigRat v = BigRat(6) * BigRat(40 * d * d - 179 * d + 212) *
               BigRat(factorial(2 * d - 4)) * inv_factorial(d) *
               inv_factorial(d - 3);
    return to_integer(v, "N2_inv");
}

/// N3(d) = 84 (d-3) (2d^2 - 10d + 13) (2d-4)! / (d! (d-2)!)
inline BigInt N3_inv(long d) {
    BigRat v = BigRat(84) * BigRat(d - 3) * BigRat(2 * d * d - 10 * d + 13) *
               BigRat(factorial(2 * d - 4)) * inv_factorial(d) *
               inv_factorial(d - 2);
    return to_integer(v, "N3_inv");
}

/// r(a,b) = 2 (a^2 b^2 - 1), pairs with a.x = b.p + (a-b).q
inline BigInt r_inv(long a, long b) {
    if (a < b || b < 0) throw std::domain_error("r_inv: need a >= b >= 0");
    return BigInt(2) * (BigInt(a) * a * b * b - 1);
}

/// Brill-Noether number rho = g - (r+1)(g-d+r)
inline long rho(long g, long r, long d) { return g - (r + 1) * (g - d + r); }

/// Total ramification degree 2d + 2g - 2 of a degree-d cover of P^1 from a
/// genus-g curve.
inline long hurwitz_ramification_degree(long d, long g) {
    if (d < 1) throw std::domain_error("hurwitz_ramification_degree: d >= 1");
    return 2 * d + 2 * g - 2;
}

// ---------------------------------------------------------------------------
// Cross-identities.  Checkers return a structured report so a failure
// localizes which term drifted; the boolean is the overall verdict.

struct IdentityReport {
    std::string name;
    std::vector<std::pair<std::string, BigInt>> terms;
    BigInt lhs, rhs;
    bool ok = false;

    explicit operator bool() const { return ok; }
};

/// N(d) = 32(2d-4)!(1/(d-3)!^2 - 1/(d!(d-6)!)) + 16 C(2d-4,d-1) + 80 C(2d-4,d),
/// with the first term also recomputed as
/// 64 C(2d-4,2) . integral(sigma_(0,2)^2 sigma_(0,1)^(2d-6)).
inline IdentityReport identity_N_decomposition(long d) {
    IdentityReport rep;
    rep.name = "N_decomposition";
    BigInt term_a = to_integer(
        BigRat(32) * BigRat(factorial(2 * d - 4)) *
            (inv_factorial(d - 3) * inv_factorial(d - 3) -
             inv_factorial(d) * inv_factorial(d - 6)),
        "N_decomposition term (a)");
    std::vector<long> cs(2, 2);
    cs.insert(cs.end(), static_cast<std::size_t>(2 * d - 6), 1);
    BigInt term_a_schubert =
        64 * binomial(2 * d - 4, 2) * schubert::special_product_integral(d, cs);
    BigInt term_b1 = 16 * binomial(2 * d - 4, d - 1);
    BigInt term_b2 = 80 * binomial(2 * d - 4, d);
    rep.terms = {{"64 C(2d-4,2) s(0,2)^2 s(0,1)^(2d-6)", term_a_schubert},
                 {"case (a) closed form", term_a},
                 {"16 C(2d-4,d-1)", term_b1},
                 {"80 C(2d-4,d)", term_b2}};
    rep.lhs = N_inv(d);
    rep.rhs = term_a + term_b1 + term_b2;
    rep.ok = rep.lhs == rep.rhs && term_a == term_a_schubert;
    return rep;
}

/// N(d) = N1(d) + 20 a(d,2d-5) + 8 a(d-1,2d-5) + 8 e(d,2d-5)
inline IdentityReport identity_N_N1(long d) {
    IdentityReport rep;
    rep.name = "N_N1";
    BigInt n1 = N1_inv(d);
    BigInt t1 = 20 * a_inv(d, 2 * d - 5);
    BigInt t2 = 8 * a_inv(d - 1, 2 * d - 5);
    BigInt t3 = 8 * e_inv(d, 2 * d - 5);
    rep.terms = {{"N1(d)", n1},
                 {"20 a(d,2d-5)", t1},
                 {"8 a(d-1,2d-5)", t2},
                 {"8 e(d,2d-5)", t3}};
    rep.lhs = N_inv(d);
    rep.rhs = n1 + t1 + t2 + t3;
    rep.ok = rep.lhs == rep.rhs;
    return rep;
}

/// N2(d) = 4e(d,2d-5) + (6d-16) b(d-1,2d-5) + 38 a(d,2d-5)
///         + 11 a(d-1,2d-5) + 9(6d-15) a(d-1,2d-5) + N3(d), d >= 4
inline IdentityReport identity_N2_N3(long d) {
    if (d < 4)
        throw std::domain_error("identity_N2_N3: decomposition requires d >= 4");
    IdentityReport rep;
    rep.name = "N2_N3";
    BigInt t1 = 4 * e_inv(d, 2 * d - 5);
    BigInt t2 = (6 * d - 16) * b_inv(d - 1, 2 * d - 5);
    BigInt t3 = 38 * a_inv(d, 2 * d - 5);
    BigInt t4 = 11 * a_inv(d - 1, 2 * d - 5);
    BigInt t5 = 9 * (6 * d - 15) * a_inv(d - 1, 2 * d - 5);
    BigInt t6 = N3_inv(d);
    rep.terms = {{"4 e(d,2d-5)", t1},        {"(6d-16) b(d-1,2d-5)", t2},
                 {"38 a(d,2d-5)", t3},       {"11 a(d-1,2d-5)", t4},
                 {"9(6d-15) a(d-1,2d-5)", t5}, {"N3(d)", t6}};
    rep.lhs = N2_inv(d);
    rep.rhs = t1 + t2 + t3 + t4 + t5 + t6;
    rep.ok = rep.lhs == rep.rhs;
    return rep;
}

/// b(d-1,2d-5) = e(d-1,2d-5), d >= 4
inline IdentityReport identity_b_eq_e(long d) {
    IdentityReport rep;
    rep.name = "b_eq_e";
    rep.lhs = b_inv(d - 1, 2 * d - 5);
    rep.rhs = e_inv(d - 1, 2 * d - 5);
    rep.terms = {{"b(d-1,2d-5)", rep.lhs}, {"e(d-1,2d-5)", rep.rhs}};
    rep.ok = rep.lhs == rep.rhs;
    return rep;
}

/// 2c(d,2d-4,1) + 2c(d,2d-4,3) + 4c(d,2d-4,2) = 128 C(2d-4,d)
inline IdentityReport identity_c_combination(long d) {
    IdentityReport rep;
    rep.name = "c_combination";
    BigInt t1 = 2 * c_inv(d, 2 * d - 4, 1);
    BigInt t2 = 2 * c_inv(d, 2 * d - 4, 3);
    BigInt t3 = 4 * c_inv(d, 2 * d - 4, 2);
    rep.terms = {{"2 c(d,2d-4,1)", t1},
                 {"2 c(d,2d-4,3)", t2},
                 {"4 c(d,2d-4,2)", t3}};
    rep.lhs = t1 + t2 + t3;
    rep.rhs = 128 * binomial(2 * d - 4, d);
    rep.ok = rep.lhs == rep.rhs;
    return rep;
}

/// alpha = 3 (2d-4)! / (d! (d-3)!) equals a(d,2d-4)
inline IdentityReport alpha_is_a(long d) {
    IdentityReport rep;
    rep.name = "alpha_is_a";
    rep.lhs = to_integer(BigRat(3) * BigRat(factorial(2 * d - 4)) *
                             inv_factorial(d) * inv_factorial(d - 3),
                         "alpha");
    rep.rhs = a_inv(d, 2 * d - 4);
    rep.terms = {{"alpha", rep.lhs}, {"a(d,2d-4)", rep.rhs}};
    rep.ok = rep.lhs == rep.rhs;
    return rep;
}

struct D3PsiResult {
    BigInt case_i, case_ii, case_iii;  // 600, 640, 40
    BigInt n0;                         // 1280
    BigInt psi_coefficient;            // n0 / (2g-2) = 640
};

/// psi-coefficient of the degree-4 totally-ramified divisor via degeneration
/// to a pair of elliptic tails.  The factors 15, 8, 20, 40 are intersection
/// numbers of Sigma = 10F1 + 5F2 - 2Delta on E x E.
inline D3PsiResult d3_psi_via_degeneration() {
    using abelian::EECurveClass;
    const EECurveClass sigma =
        abelian::ee_class_from_pairings(BigRat(15), BigRat(3), BigRat(8));
    const EECurveClass diag{BigRat(0), BigRat(0), BigRat(1)};
    const EECurveClass f2{BigRat(0), BigRat(1), BigRat(0)};

    const BigInt sigma_dot_delta =
        to_integer(abelian::ee_intersect(sigma, diag), "Sigma.Delta");   // 15
    const BigInt sigma_dot_f2 =
        to_integer(abelian::ee_intersect(sigma, f2), "Sigma.F2");        // 8
    const BigInt half_square =
        to_integer(abelian::ee_half_self_intersection(sigma), "Sigma^2/2");
    const BigInt full_square =
        to_integer(abelian::ee_intersect(sigma, sigma), "Sigma^2");

    D3PsiResult res;
    res.case_i = 2 * sigma_dot_delta * half_square;  // 2 . 15 . 20
    res.case_ii = 2 * sigma_dot_f2 * full_square;    // 2 . 8 . 40
    res.case_iii = 2 * half_square;                  // 2 . 20
    res.n0 = res.case_i + res.case_ii + res.case_iii;
    res.psi_coefficient = res.n0 / 2;  // 2g - 2 = 2 for g = 2
    return res;
}

}  // namespace hurwitz::invariants
