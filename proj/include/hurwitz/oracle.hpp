#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz::oracle {

// Desk-scale elliptic curve arithmetic over small prime fields.  Primes stay
// below a few hundred and groups are handled by full point enumeration, so
// all counts are exact.

/// y^2 = x^3 + ax + b over F_p, nonsingular (4a^3 + 27b^2 != 0), p > 3.
struct WeierstrassCurve {
    std::int64_t p, a, b;

    std::int64_t mod(std::int64_t v) const {
        v %= p;
        return v < 0 ? v + p : v;
    }

    bool nonsingular() const {
        return mod(4 * mod(a * mod(a * a)) + 27 * mod(b * b)) != 0;
    }
};

/// Point at infinity or affine (x,y) on the curve.
struct ECPoint {
    bool infinity = true;
    std::int64_t x = 0, y = 0;

    static ECPoint at_infinity() { return {}; }
    static ECPoint affine(std::int64_t x, std::int64_t y) {
        return {false, x, y};
    }

    bool operator==(const ECPoint&) const = default;
};

inline bool on_curve(const ECPoint& P, const WeierstrassCurve& c) {
    if (P.infinity) return true;
    return c.mod(P.y * P.y) == c.mod(P.x * c.mod(P.x * P.x) + c.a * P.x + c.b);
}

namespace detail {

inline std::int64_t mod_inverse(std::int64_t v, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = ((v % p) + p) % p;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::logic_error("mod_inverse: not invertible");
    return ((t % p) + p) % p;
}

}  // namespace detail

/// Chord-tangent addition.
inline ECPoint group_law(const ECPoint& P, const ECPoint& Q,
                         const WeierstrassCurve& c) {
    if (!on_curve(P, c) || !on_curve(Q, c))
        throw std::invalid_argument("invalid point: not on curve");
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    const std::int64_t p = c.p;
    if (P.x == Q.x && c.mod(P.y + Q.y) == 0) return ECPoint::at_infinity();
    std::int64_t slope;
    if (P.x == Q.x && P.y == Q.y) {
        slope = c.mod(c.mod(3 * c.mod(P.x * P.x) + c.a) *
                      detail::mod_inverse(2 * P.y, p));
    } else {
        slope = c.mod(c.mod(Q.y - P.y) *
                      detail::mod_inverse(c.mod(Q.x - P.x), p));
    }
    const std::int64_t x3 = c.mod(slope * slope - P.x - Q.x);
    const std::int64_t y3 = c.mod(slope * c.mod(P.x - x3) - P.y);
    return ECPoint::affine(x3, y3);
}

inline ECPoint negate(const ECPoint& P, const WeierstrassCurve& c) {
    if (P.infinity) return P;
    return ECPoint::affine(P.x, c.mod(-P.y));
}

inline ECPoint scalar_multiply(long n, ECPoint P, const WeierstrassCurve& c) {
    if (n < 0) return scalar_multiply(-n, negate(P, c), c);
    ECPoint acc = ECPoint::at_infinity();
    while (n > 0) {
        if (n & 1) acc = group_law(acc, P, c);
        P = group_law(P, P, c);
        n >>= 1;
    }
    return acc;
}

inline std::vector<ECPoint> enumerate_points(const WeierstrassCurve& c) {
    std::vector<std::vector<std::int64_t>> roots(c.p);
    for (std::int64_t y = 0; y < c.p; ++y) roots[c.mod(y * y)].push_back(y);
    std::vector<ECPoint> pts{ECPoint::at_infinity()};
    for (std::int64_t x = 0; x < c.p; ++x) {
        const std::int64_t rhs = c.mod(x * c.mod(x * x) + c.a * x + c.b);
        for (std::int64_t y : roots[rhs]) pts.push_back(ECPoint::affine(x, y));
    }
    return pts;
}

inline long point_order(const ECPoint& P, const WeierstrassCurve& c) {
    long n = 1;
    ECPoint acc = P;
    while (!acc.infinity) {
        acc = group_law(acc, P, c);
        ++n;
    }
    return n;
}

struct TorsionCurve {
    WeierstrassCurve curve;
    std::vector<ECPoint> points;
    std::vector<long> invariant_factors;  // (n1, n2), n2 | n1, trivial parts dropped
};

namespace detail {

inline std::vector<long> group_structure(const WeierstrassCurve& c,
                                         const std::vector<ECPoint>& pts) {
    long exponent = 1;
    for (const auto& P : pts) exponent = std::lcm(exponent, point_order(P, c));
    const long order = static_cast<long>(pts.size());
    std::vector<long> factors{exponent};
    if (order / exponent > 1) factors.push_back(order / exponent);
    return factors;
}

inline long count_n_torsion(const WeierstrassCurve& c,
                            const std::vector<ECPoint>& pts, long n) {
    long count = 0;
    for (const auto& P : pts)
        if (scalar_multiply(n, P, c).infinity) ++count;
    return count;
}

}  // namespace detail

/// Smallest prime p <= p_max with p = 1 mod n carrying a curve whose rational
/// points contain (Z/n)^2, found by exhaustive search.  Full rational
/// n-torsion is what makes finite-field counting a sound stand-in for the
/// geometric counts.
inline TorsionCurve find_full_torsion_curve(long n, long p_max,
                                            long skip_curves = 0) {
    if (n < 2 || n > 4)
        throw std::invalid_argument("find_full_torsion_curve: n in {2,3,4}");
    long skipped = 0;
    for (std::int64_t p = 5; p <= p_max; ++p) {
        bool prime = true;
        for (std::int64_t q = 2; q * q <= p; ++q)
            if (p % q == 0) { prime = false; break; }
        if (!prime || (p - 1) % n != 0) continue;
        for (std::int64_t a = 0; a < p; ++a) {
            for (std::int64_t b = 0; b < p; ++b) {
                WeierstrassCurve c{p, a, b};
                if (!c.nonsingular()) continue;
                auto pts = enumerate_points(c);
                if (pts.size() % (n * n) != 0) continue;
                if (detail::count_n_torsion(c, pts, n) != n * n) continue;
                if (skipped++ < skip_curves) continue;
                auto structure = detail::group_structure(c, pts);
                return {c, std::move(pts), std::move(structure)};
            }
        }
    }
    throw std::runtime_error("search exhausted: no full " + std::to_string(n) +
                             "-torsion curve below " + std::to_string(p_max));
}

/// Number of points X with n.X = target, minus the listed exclusions.
/// On a full-n-torsion curve a solvable equation has exactly n^2 solutions.
inline long count_torsion_solutions(const TorsionCurve& tc, long n,
                                    const ECPoint& target,
                                    const std::vector<ECPoint>& exclusions) {
    long count = 0;
    for (const auto& X : tc.points) {
        if (scalar_multiply(n, X, tc.curve) != target) continue;
        if (std::find(exclusions.begin(), exclusions.end(), X) !=
            exclusions.end())
            continue;
        ++count;
    }
    bool any = false;
    for (const auto& X : tc.points)
        if (scalar_multiply(n, X, tc.curve) == target) { any = true; break; }
    if (!any)
        throw std::runtime_error(
            "no solutions over this field: target is not an n-th multiple");
    return count;
}

/// Number of X with 3X = P + 2Q; equals 9 on a full-3-torsion curve.
inline long count_affine_combination(const TorsionCurve& tc, const ECPoint& P,
                                     const ECPoint& Q) {
    const ECPoint target =
        group_law(P, scalar_multiply(2, Q, tc.curve), tc.curve);
    return count_torsion_solutions(tc, 3, target, {});
}

}  // namespace hurwitz::oracle
