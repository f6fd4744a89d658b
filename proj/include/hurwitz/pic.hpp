#pragma once

#include "hurwitz/invariants.hpp"
#include "hurwitz/scalar.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz::pic {

/// Divisor class on Mbar_g in the basis (lambda, delta_0..delta_[g/2]).
struct MgClass {
    long g = 2;
    BigRat lambda;
    std::vector<BigRat> delta;  // length [g/2] + 1

    MgClass(long g_, BigRat lambda_, std::vector<BigRat> delta_)
        : g(g_), lambda(std::move(lambda_)), delta(std::move(delta_)) {
        if (delta.size() != static_cast<std::size_t>(g / 2 + 1))
            throw std::invalid_argument("MgClass: delta vector length must be [g/2]+1");
    }
};

/// Divisor class on Mbar_{2,1} in (psi, lambda, delta_0, delta_1).  The
/// basis has one relation; equality is always tested in the reduced form
/// with delta_1 eliminated.
struct M21Class {
    BigRat psi, lambda, delta0, delta1;

    M21Class() = default;
    M21Class(BigRat p, BigRat l, BigRat d0, BigRat d1)
        : psi(std::move(p)), lambda(std::move(l)), delta0(std::move(d0)),
          delta1(std::move(d1)) {}

    M21Class operator+(const M21Class& o) const {
        return {psi + o.psi, lambda + o.lambda, delta0 + o.delta0,
                delta1 + o.delta1};
    }
    M21Class operator-(const M21Class& o) const {
        return {psi - o.psi, lambda - o.lambda, delta0 - o.delta0,
                delta1 - o.delta1};
    }
    friend M21Class operator*(const BigRat& s, const M21Class& c) {
        return {s * c.psi, s * c.lambda, s * c.delta0, s * c.delta1};
    }
};

/// Eliminate delta_1 through the genus-2 relation lambda = delta_0/10 +
/// delta_1/5, i.e. delta_1 = 5 lambda - delta_0/2.  Idempotent and linear.
inline M21Class mumford_reduce(const M21Class& c) {
    return {c.psi, c.lambda + 5 * c.delta1, c.delta0 - c.delta1 / 2, BigRat(0)};
}

inline bool classes_equal(const M21Class& a, const M21Class& b) {
    const M21Class ra = mumford_reduce(a), rb = mumford_reduce(b);
    return ra.psi == rb.psi && ra.lambda == rb.lambda && ra.delta0 == rb.delta0;
}

/// Pullback along the map attaching a fixed genus-(2d-5) tail at the marked
/// point.  For tail genus >= 3: psi <- -delta_2, lambda/delta_0/delta_1 kept,
/// delta_i -> 0 for i >= 3.  For d = 3 (g = 3) the tail and marked-component
/// roles coincide and delta_1 pulls back to delta_1 - psi.
inline M21Class chi_pullback(const MgClass& c, long d) {
    if (d == 3) {
        if (c.g != 3) throw std::invalid_argument("pullback undefined: need g=3 for d=3");
        return {-c.delta[1], c.lambda, c.delta[0], c.delta[1]};
    }
    if (c.g != 2 * d - 3 && c.g != 4)
        throw std::invalid_argument("pullback undefined: genus mismatch");
    if (c.g < 4) throw std::invalid_argument("pullback undefined");
    return {-c.delta[2], c.lambda, c.delta[0], c.delta[1]};
}

// Named classes on Mbar_{2,1}, stated in the reduced basis except for the
// Weierstrass class which is traditionally written with delta_1.
inline M21Class weierstrass_class() {
    return {BigRat(3), BigRat(-1), BigRat(0), BigRat(-1)};
}
inline M21Class d1_class() {
    return {BigRat(80), BigRat(-120), BigRat(10), BigRat(0)};
}
inline M21Class d2_class() {
    return {BigRat(160), BigRat(-200), BigRat(17), BigRat(0)};
}
inline M21Class d3_class() {
    return {BigRat(640), BigRat(-860), BigRat(72), BigRat(0)};
}

/// Diaz divisor of curves with an exceptional Weierstrass point, on Mbar_4.
inline MgClass diaz_class() {
    return MgClass(4, BigRat(264), {BigRat(-30), BigRat(-96), BigRat(-128)});
}

/// Recover the 3-torsion divisor from the Diaz class: pullback to Mbar_{2,1}
/// minus 16 copies of the Weierstrass class, reduced.
inline M21Class reconstruct_D1() {
    const M21Class pulled = chi_pullback(diaz_class(), 4);
    return mumford_reduce(pulled - BigRat(16) * weierstrass_class());
}

/// Right-hand side of the genus-2 pullback decomposition:
/// N1(d) W + e(d,2d-5) D1 + a(d-1,2d-5) D2 + a(d,2d-5) D3, reduced.
inline M21Class genus2_rhs(long d) {
    using namespace invariants;
    const M21Class rhs =
        BigRat(N1_inv(d)) * weierstrass_class() +
        BigRat(e_inv(d, 2 * d - 5)) * d1_class() +
        BigRat(a_inv(d - 1, 2 * d - 5)) * d2_class() +
        BigRat(a_inv(d, 2 * d - 5)) * d3_class();
    return mumford_reduce(rhs);
}

/// b_i = i(g-i)/(g-1) b_1 for 1 <= i <= [g/2].
inline std::vector<BigRat> flag_coefficients(long g, const BigRat& b1) {
    if (g < 3) throw std::domain_error("flag_coefficients: need g >= 3");
    std::vector<BigRat> out;
    for (long i = 1; i <= g / 2; ++i)
        out.push_back(BigRat(i * (g - i)) / BigRat(g - 1) * b1);
    return out;
}

}  // namespace hurwitz::pic
