#pragma once

#include "hurwitz/scalar.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz::ratmaps {

// ---------------------------------------------------------------------------
// Q(sqrt(-2)) as a fixed quadratic extension: u + v sqrt(-2).

struct QuadExtScalar {
    BigRat u, v;

    QuadExtScalar() : u(0), v(0) {}
    QuadExtScalar(BigRat u_, BigRat v_ = BigRat(0))
        : u(std::move(u_)), v(std::move(v_)) {}
    QuadExtScalar(long n) : u(n), v(0) {}

    bool is_zero() const { return u == 0 && v == 0; }
    bool is_rational() const { return v == 0; }
    QuadExtScalar conjugate() const { return {u, -v}; }
    BigRat norm() const { return u * u + 2 * v * v; }

    QuadExtScalar operator-() const { return {-u, -v}; }
    QuadExtScalar operator+(const QuadExtScalar& o) const {
        return {u + o.u, v + o.v};
    }
    QuadExtScalar operator-(const QuadExtScalar& o) const {
        return {u - o.u, v - o.v};
    }
    QuadExtScalar operator*(const QuadExtScalar& o) const {
        return {u * o.u - 2 * v * o.v, u * o.v + v * o.u};
    }
    QuadExtScalar operator/(const QuadExtScalar& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero in Q(sqrt(-2))");
        const BigRat n = o.norm();
        const QuadExtScalar t = *this * o.conjugate();
        return {t.u / n, t.v / n};
    }
    bool operator==(const QuadExtScalar&) const = default;
    bool operator<(const QuadExtScalar& o) const {
        if (u != o.u) return u < o.u;
        return v < o.v;
    }

    std::string str() const {
        return v == 0 ? BigRat(u).get_str()
                      : "(" + BigRat(u).get_str() + " + " +
                            BigRat(v).get_str() + " sqrt(-2))";
    }
};

// ---------------------------------------------------------------------------
// Exact square roots.

inline std::optional<BigRat> rational_sqrt(const BigRat& q) {
    if (q < 0) return std::nullopt;
    BigRat c(q);
    c.canonicalize();
    if (!mpz_perfect_square_p(c.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(c.get_den().get_mpz_t()))
        return std::nullopt;
    BigInt num_root, den_root;
    mpz_sqrt(num_root.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), c.get_den().get_mpz_t());
    return BigRat(num_root) / BigRat(den_root);
}

/// Square root of u + v sqrt(-2) inside Q(sqrt(-2)) when it exists.
/// For (s + t sqrt(-2))^2 = u + v sqrt(-2): s^2 - 2t^2 = u, 2st = v,
/// so s^2 = (u +- sqrt(u^2 + 2v^2)) / 2.
inline std::optional<QuadExtScalar> field_sqrt(const QuadExtScalar& w) {
    if (w.is_zero()) return QuadExtScalar(BigRat(0));
    if (w.v == 0) {
        if (auto s = rational_sqrt(w.u)) return QuadExtScalar(*s);
        if (auto t = rational_sqrt(-w.u / 2))
            return QuadExtScalar(BigRat(0), *t);
        return std::nullopt;
    }
    auto n = rational_sqrt(w.norm());
    if (!n) return std::nullopt;
    for (const BigRat& root : {*n, BigRat(-*n)}) {
        auto s = rational_sqrt((w.u + root) / 2);
        if (s && *s != 0) return QuadExtScalar(*s, w.v / (2 * *s));
    }
    return std::nullopt;
}

inline std::optional<BigRat> field_sqrt(const BigRat& q) {
    return rational_sqrt(q);
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over an exact field.

template <class F>
struct Poly {
    std::vector<F> c;  // ascending, no trailing zeros

    Poly() = default;
    Poly(std::initializer_list<F> coeffs) : c(coeffs) { normalize(); }
    explicit Poly(std::vector<F> coeffs) : c(std::move(coeffs)) { normalize(); }
    static Poly constant(F v) { return Poly({std::move(v)}); }
    static Poly x() { return Poly({F(0), F(1)}); }

    void normalize() {
        while (!c.empty() && c.back() == F(0)) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const F& leading() const { return c.back(); }

    F operator()(const F& x) const {
        F acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly operator+(const Poly& o) const {
        std::vector<F> r(std::max(c.size(), o.c.size()), F(0));
        for (std::size_t i = 0; i < c.size(); ++i) r[i] = r[i] + c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r[i] = r[i] + o.c[i];
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const {
        std::vector<F> r(std::max(c.size(), o.c.size()), F(0));
        for (std::size_t i = 0; i < c.size(); ++i) r[i] = r[i] + c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r[i] = r[i] - o.c[i];
        return Poly(std::move(r));
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<F> r(c.size() + o.c.size() - 1, F(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j)
                r[i + j] = r[i + j] + c[i] * o.c[j];
        return Poly(std::move(r));
    }
    Poly operator*(const F& s) const {
        std::vector<F> r = c;
        for (auto& x : r) x = x * s;
        return Poly(std::move(r));
    }
    bool operator==(const Poly&) const = default;

    std::pair<Poly, Poly> divmod(const Poly& den) const {
        if (den.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly rem = *this;
        std::vector<F> q(
            degree() >= den.degree()
                ? static_cast<std::size_t>(degree() - den.degree() + 1)
                : 0,
            F(0));
        while (!rem.is_zero() && rem.degree() >= den.degree()) {
            const long shift = rem.degree() - den.degree();
            const F factor = rem.leading() / den.leading();
            q[static_cast<std::size_t>(shift)] = factor;
            std::vector<F> sub(static_cast<std::size_t>(shift), F(0));
            sub.insert(sub.end(), den.c.begin(), den.c.end());
            Poly shifted(std::move(sub));
            rem = rem - shifted * factor;
        }
        return {Poly(std::move(q)), rem};
    }

    Poly derivative() const {
        if (c.size() <= 1) return {};
        std::vector<F> r(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * F(static_cast<long>(i));
        return Poly(std::move(r));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (F(1) / leading());
    }

    /// Coefficient reversal t -> 1/t, padded to degree m.
    Poly reversed(long m) const {
        std::vector<F> r(static_cast<std::size_t>(m) + 1, F(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            r[static_cast<std::size_t>(m) - i] = c[i];
        return Poly(std::move(r));
    }
};

template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Yun square-free decomposition in characteristic 0: returns the square-free
/// parts with their multiplicities, monic.
template <class F>
std::vector<std::pair<Poly<F>, long>> squarefree_decomposition(const Poly<F>& p) {
    std::vector<std::pair<Poly<F>, long>> out;
    if (p.degree() < 1) return out;
    Poly<F> a = p.monic();
    Poly<F> g = gcd(a, a.derivative());
    Poly<F> w = a.divmod(g).first;
    long mult = 1;
    while (w.degree() > 0) {
        Poly<F> y = gcd(w, g);
        Poly<F> part = w.divmod(y).first;
        if (part.degree() > 0) out.emplace_back(part.monic(), mult);
        w = std::move(y);
        g = g.divmod(w).first;
        ++mult;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Root extraction.

namespace detail {

inline std::vector<BigInt> small_divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> divs;
    for (BigInt i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            divs.push_back(i);
            divs.push_back(n / i);
        }
    }
    return divs;
}

/// Rational root theorem on an integer-scaled polynomial.
inline std::optional<BigRat> rational_root(const Poly<BigRat>& p) {
    BigInt scale = 1;
    for (const auto& q : p.c) scale = scale * BigRat(q).get_den() /
                                      gcd(scale, BigInt(BigRat(q).get_den()));
    std::vector<BigInt> ic;
    for (const auto& q : p.c)
        ic.push_back(BigInt(BigRat(q).get_num() * (scale / BigRat(q).get_den())));
    for (const BigInt& num : small_divisors(ic.front()))
        for (const BigInt& den : small_divisors(ic.back()))
            for (int sign : {1, -1}) {
                BigRat cand = BigRat(sign * num) / BigRat(den);
                cand.canonicalize();
                if (p(cand) == 0) return cand;
            }
    return std::nullopt;
}

inline std::optional<BigRat> find_root(const Poly<BigRat>& p) {
    return rational_root(p);
}

inline std::optional<QuadExtScalar> find_root(const Poly<QuadExtScalar>& p) {
    bool rational = true;
    for (const auto& x : p.c) rational &= x.is_rational();
    if (!rational) return std::nullopt;
    Poly<BigRat> q;
    std::vector<BigRat> coeffs;
    for (const auto& x : p.c) coeffs.push_back(x.u);
    if (auto r = rational_root(Poly<BigRat>(std::move(coeffs))))
        return QuadExtScalar(*r);
    return std::nullopt;
}

}  // namespace detail

/// All roots of p lying in the coefficient field, with multiplicities.
/// Throws if a factor of positive degree resists (its roots lie in a proper
/// extension).
template <class F>
std::map<F, long> roots_with_multiplicity(const Poly<F>& p) {
    std::map<F, long> out;
    for (auto& [part, mult] : squarefree_decomposition(p)) {
        Poly<F> rem = part;
        while (rem.degree() >= 1) {
            if (!rem.c.empty() && rem.c.front() == F(0)) {
                out[F(0)] += mult;
                rem.c.erase(rem.c.begin());
                rem.normalize();
                continue;
            }
            if (rem.degree() == 1) {
                out[-rem.c[0] / rem.c[1]] += mult;
                break;
            }
            if (rem.degree() == 2) {
                const F a = rem.c[2], b = rem.c[1], cc = rem.c[0];
                auto disc = field_sqrt(b * b - F(4) * a * cc);
                if (!disc)
                    throw std::runtime_error(
                        "roots outside coefficient field (irreducible quadratic)");
                out[(-b + *disc) / (F(2) * a)] += mult;
                out[(-b - *disc) / (F(2) * a)] += mult;
                break;
            }
            auto r = detail::find_root(rem);
            if (!r)
                throw std::runtime_error("roots outside coefficient field");
            out[*r] += mult;
            auto [q, rr] = rem.divmod(Poly<F>({-*r, F(1)}));
            rem = std::move(q);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rational functions on the projective line.

/// Point of P^1 over F: either finite or the point at infinity.
template <class F>
struct ProjPoint {
    bool infinity = false;
    F value = F(0);

    static ProjPoint at_infinity() { return {true, F(0)}; }
    static ProjPoint finite(F v) { return {false, std::move(v)}; }

    bool operator==(const ProjPoint&) const = default;
    bool operator<(const ProjPoint& o) const {
        if (infinity != o.infinity) return !infinity;  // finite points first
        return value < o.value;
    }
};

/// num/den coprime with den monic; degree of the map is
/// max(deg num, deg den).
template <class F>
struct RatFn {
    Poly<F> num, den;

    RatFn(Poly<F> n, Poly<F> d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::domain_error("RatFn: zero denominator");
        const Poly<F> g = gcd(num, den);
        if (g.degree() > 0) {
            num = num.divmod(g).first;
            den = den.divmod(g).first;
        }
        const F lead = den.leading();
        num = num * (F(1) / lead);
        den = den * (F(1) / lead);
    }

    long degree() const { return std::max(num.degree(), den.degree()); }

    /// f(1/t) as a rational function.
    RatFn inverted_argument() const {
        const long m = degree();
        Poly<F> n = num.reversed(m), d = den.reversed(m);
        // strip the common power of t
        while (!n.is_zero() && !d.is_zero() && n.c.front() == F(0) &&
               d.c.front() == F(0)) {
            n.c.erase(n.c.begin());
            d.c.erase(d.c.begin());
        }
        return RatFn(std::move(n), std::move(d));
    }

    RatFn operator*(const RatFn& o) const {
        return RatFn(num * o.num, den * o.den);
    }
};

/// Numerator of df/dt: num' den - num den'.  Vanishes to order e-1 at a
/// point of ramification index e, poles included.
template <class F>
Poly<F> wronskian(const RatFn<F>& f) {
    return f.num.derivative() * f.den - f.num * f.den.derivative();
}

/// Ramification divisor of a nonconstant map: finite points carry the root
/// multiplicity of the wronskian, infinity carries its index minus one
/// computed in the coordinate 1/t.  Total mass is 2 deg(f) - 2.
template <class F>
std::map<ProjPoint<F>, long> ramification_divisor(const RatFn<F>& f) {
    if (f.degree() < 1) throw std::domain_error("degenerate: constant map");
    std::map<ProjPoint<F>, long> out;
    for (auto& [root, mult] : roots_with_multiplicity(wronskian(f)))
        out[ProjPoint<F>::finite(root)] = mult;

    const RatFn<F> g = f.inverted_argument();
    const Poly<F> w = wronskian(g);
    long at_zero = 0;
    while (at_zero < static_cast<long>(w.c.size()) &&
           w.c[static_cast<std::size_t>(at_zero)] == F(0))
        ++at_zero;
    if (!w.is_zero() && at_zero > 0)
        out[ProjPoint<F>::at_infinity()] = at_zero;
    return out;
}

/// The constant c with f(t) f(1/t) = c as a rational-function identity, if
/// one exists.
template <class F>
std::optional<F> check_inversion_symmetry(const RatFn<F>& f) {
    const RatFn<F> prod = f * f.inverted_argument();
    if (prod.num.degree() == 0 && prod.den.degree() == 0)
        return prod.num.c[0] / prod.den.c[0];
    return std::nullopt;
}

/// Multiplicity of `point` in the fiber of f over `target`.
template <class F>
long fiber_multiplicity(const RatFn<F>& f, const ProjPoint<F>& target,
                        const ProjPoint<F>& point) {
    Poly<F> p = target.infinity ? f.den : f.num - f.den * target.value;
    if (point.infinity) {
        const long drop = f.degree() - p.degree();
        return drop > 0 ? drop : 0;
    }
    long mult = 0;
    const Poly<F> lin({-point.value, F(1)});
    while (!p.is_zero()) {
        auto [q, r] = p.divmod(lin);
        if (!r.is_zero()) break;
        ++mult;
        p = std::move(q);
    }
    return mult;
}

template <class F>
struct FiberExpectation {
    ProjPoint<F> target;
    ProjPoint<F> point;
    long min_multiplicity;
};

/// True iff every listed fiber contains the listed point with at least the
/// listed multiplicity.
template <class F>
bool verify_four_one_profile(const RatFn<F>& f,
                             const std::vector<FiberExpectation<F>>& expected) {
    for (const auto& e : expected)
        if (fiber_multiplicity(f, e.target, e.point) < e.min_multiplicity)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// The two explicit tail covers.

/// f(t) = 2t^3(t-2)/(2t-1), the degree-4 cover triply ramified over 0, 1
/// and infinity.
inline RatFn<BigRat> triple_cover() {
    return RatFn<BigRat>(Poly<BigRat>({BigRat(0), BigRat(0), BigRat(0),
                                       BigRat(-4), BigRat(2)}),
                         Poly<BigRat>({BigRat(-1), BigRat(2)}));
}

struct TailCoverResult {
    Poly<QuadExtScalar> quartic;          // 256x^4 - 256x^3 + 27
    QuadExtScalar degenerate_root;        // 3/4, double, excluded
    std::pair<QuadExtScalar, QuadExtScalar> roots;  // (-1 +- sqrt(-2))/4
};

/// Parameters r' of f(t) = t^4/(t - r') for which the fiber over f(1)
/// contains the residual simple ramification point 4r'/3.  Clearing
/// denominators in f(4r'/3) = f(1) gives 256x^4 - 256x^3 + 27 = 0; the
/// double root 3/4 degenerates and the residual quadratic 16x^2 + 8x + 3
/// carries the two genuine parameters.
inline TailCoverResult tail_cover_parameters() {
    using Q = QuadExtScalar;
    TailCoverResult res;
    res.quartic =
        Poly<Q>({Q(27), Q(0), Q(0), Q(BigRat(-256)), Q(BigRat(256))});

    auto parts = squarefree_decomposition(res.quartic);
    Poly<Q> simple, doubled;
    for (auto& [part, mult] : parts) {
        if (mult == 1) simple = part;
        if (mult == 2) doubled = part;
    }
    if (doubled.degree() != 1 || simple.degree() != 2)
        throw std::runtime_error(
            "derivation inconsistency: unexpected quartic factorization");
    res.degenerate_root = -doubled.c[0] / doubled.c[1];

    auto roots = roots_with_multiplicity(simple);
    auto it = roots.begin();
    res.roots.first = it->first;
    res.roots.second = std::next(it)->first;

    for (const Q& r : {res.roots.first, res.roots.second}) {
        const Q check = Q(BigRat(256)) * r * r * r * (Q(1) - r);
        if (check != Q(27))
            throw std::runtime_error(
                "derivation inconsistency: 256 r'^3 (1 - r') != 27");
    }
    return res;
}

/// Mobius substitution t -> (a t + b)/(c t + d).
template <class F>
RatFn<F> compose_mobius(const RatFn<F>& f, const F& a, const F& b, const F& c,
                        const F& d) {
    if (a * d - b * c == F(0))
        throw std::domain_error("compose_mobius: singular transformation");
    const long m = f.degree();
    const Poly<F> top({b, a}), bottom({d, c});
    const auto substitute = [&](const Poly<F>& p) {
        Poly<F> out;
        for (long i = 0; i <= m; ++i) {
            if (i >= static_cast<long>(p.c.size())) continue;
            Poly<F> basis = Poly<F>::constant(p.c[static_cast<std::size_t>(i)]);
            for (long j = 0; j < i; ++j) basis = basis * top;
            for (long j = i; j < m; ++j) basis = basis * bottom;
            out = out + basis;
        }
        return out;
    };
    return RatFn<F>(substitute(f.num), substitute(f.den));
}

}  // namespace hurwitz::ratmaps
