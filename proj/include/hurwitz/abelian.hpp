#pragma once

#include "hurwitz/scalar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace hurwitz::abelian {

// ---------------------------------------------------------------------------
// Curve classes on E x E in the span of F1, F2 and the diagonal.

/// Class c = f1*F1 + f2*F2 + diag*Delta.  The intersection form is
/// F1.F2 = F1.Delta = F2.Delta = 1 and F1^2 = F2^2 = Delta^2 = 0
/// (the diagonal of an elliptic curve has trivial normal bundle).
struct EECurveClass {
    BigRat f1, f2, diag;

    bool operator==(const EECurveClass&) const = default;
};

inline BigRat ee_intersect(const EECurveClass& c1, const EECurveClass& c2) {
    return c1.f1 * (c2.f2 + c2.diag) + c1.f2 * (c2.f1 + c2.diag) +
           c1.diag * (c2.f1 + c2.f2);
}

/// Unique class whose pairings with Delta, F1, F2 are the given values.
inline EECurveClass ee_class_from_pairings(const BigRat& with_diag,
                                           const BigRat& with_f1,
                                           const BigRat& with_f2) {
    LinearSystem sys;
    // unknowns (f1, f2, diag); rows are pairings against Delta, F1, F2
    sys.add_row({BigRat(1), BigRat(1), BigRat(0)}, with_diag, "pair with Delta");
    sys.add_row({BigRat(0), BigRat(1), BigRat(1)}, with_f1, "pair with F1");
    sys.add_row({BigRat(1), BigRat(0), BigRat(1)}, with_f2, "pair with F2");
    auto x = solve_linear(sys);
    return {x[0], x[1], x[2]};
}

inline BigRat ee_half_self_intersection(const EECurveClass& c) {
    return ee_intersect(c, c) / 2;
}

// ---------------------------------------------------------------------------
// Theta pullback on C x C via exterior algebra on the symplectic lattice.
//
// H^1 of each genus-g factor carries a symplectic basis a_1..a_g, b_1..b_g
// with integral(a_i ^ b_j) = delta_ij and products of two a's or two b's
// vanishing.  Generators are odd, so everything anticommutes.

namespace detail {

// Generator id: factor * 2g + 2*index + kind, kind 0 = alpha, 1 = beta.
// Monomials are kept sorted; the sign of the sorting permutation is folded
// into the coefficient.
using Monomial = std::vector<int>;

struct ExtElement {
    std::map<Monomial, BigInt> terms;

    void add(const Monomial& m, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
};

// Wedge of two sorted monomials: zero on repeats, sign from the merge.
inline bool wedge_monomials(const Monomial& x, const Monomial& y, Monomial& out,
                            int& sign) {
    out.clear();
    sign = 1;
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) return false;
        if (x[i] < y[j]) {
            out.push_back(x[i++]);
        } else {
            // y[j] jumps over the remaining x entries
            if ((x.size() - i) % 2 == 1) sign = -sign;
            out.push_back(y[j++]);
        }
    }
    while (i < x.size()) out.push_back(x[i++]);
    while (j < y.size()) out.push_back(y[j++]);
    return true;
}

inline ExtElement wedge(const ExtElement& lhs, const ExtElement& rhs) {
    ExtElement out;
    Monomial m;
    int sign;
    for (const auto& [mx, cx] : lhs.terms)
        for (const auto& [my, cy] : rhs.terms)
            if (wedge_monomials(mx, my, m, sign)) out.add(m, sign * cx * cy);
    return out;
}

}  // namespace detail

/// Integral over C x C of (phi* theta)^2 / 2 for phi(x,y) = b*x - c*y,
/// expanded through the symplectic exterior algebra.  Equals g(g-1)b^2c^2.
inline BigInt theta_pullback_degree(long g, long b, long c) {
    if (g < 2 || b < 1 || c < 1)
        throw std::domain_error("theta_pullback_degree: need g >= 2, b,c >= 1");
    using namespace detail;
    const auto gen = [g](int factor, int index, int kind) {
        return static_cast<int>(factor * 2 * g + 2 * index + kind);
    };

    // phi* theta = sum_i (b a_i^(1) - c a_i^(2)) ^ (b b_i^(1) - c b_i^(2))
    ExtElement pulled;
    for (int i = 0; i < g; ++i) {
        ExtElement u, v;
        u.add({gen(0, i, 0)}, BigInt(b));
        u.add({gen(1, i, 0)}, BigInt(-c));
        v.add({gen(0, i, 1)}, BigInt(b));
        v.add({gen(1, i, 1)}, BigInt(-c));
        const ExtElement term = wedge(u, v);
        for (const auto& [m, coeff] : term.terms) pulled.add(m, coeff);
    }

    const ExtElement square = wedge(pulled, pulled);

    // Integrate: a degree-4 monomial survives iff each factor contributes
    // exactly a_i ^ b_i; the sorted representative [a_i^1 b_i^1 a_j^2 b_j^2]
    // is already in the orientation integrating to +1.
    BigInt total = 0;
    for (const auto& [m, coeff] : square.terms) {
        if (m.size() != 4) continue;
        const bool first_pair = m[0] < 2 * g && m[1] == m[0] + 1 && m[0] % 2 == 0;
        const bool second_pair =
            m[2] >= 2 * g && m[3] == m[2] + 1 && m[2] % 2 == 0;
        if (first_pair && second_pair) total += coeff;
    }
    if (total % 2 != 0)
        throw std::logic_error("theta pullback integral is not even");
    return total / 2;
}

/// Corrected count for the genus-2 map (x,y) -> a*x - b*y: the diagonal
/// contributes excess intersection 2, a cited constant.
inline BigInt excess_corrected_count(long g2_a, long g2_b) {
    if (g2_a < g2_b || g2_b < 1)
        throw std::domain_error("excess_corrected_count: need a >= b >= 1");
    return theta_pullback_degree(2, g2_a, g2_b) - 2;
}

/// 210 pencils on a general pointed genus-3 curve: theta pullback degree 216
/// minus the multiplicity 6 = g(g-1) of the diagonal point.
inline BigInt enu3_count() { return theta_pullback_degree(3, 2, 3) - 6; }

}  // namespace hurwitz::abelian
