#pragma once

#include "hurwitz/scalar.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <vector>

namespace hurwitz::schubert {

/// Two-row Schubert index sigma_{(a,b)} on the Grassmannian G(1,n) of lines
/// in P^n.  Codimension is a+b; (0,0) is the fundamental class and
/// (n-1,n-1) the point class.
struct SchubertIndex {
    long a = 0;
    long b = 0;
    long n = 0;

    bool valid() const { return 0 <= a && a <= b && b <= n - 1; }
    long codim() const { return a + b; }
    auto operator<=>(const SchubertIndex&) const = default;
};

/// Linear combination of two-row Schubert classes in a fixed G(1,n).
/// Zero coefficients are never stored.
struct SchubertElement {
    long n = 0;
    std::map<SchubertIndex, BigInt> terms;

    static SchubertElement fundamental(long n) {
        SchubertElement e;
        e.n = n;
        e.terms[{0, 0, n}] = 1;
        return e;
    }

    void add_term(const SchubertIndex& idx, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms.try_emplace(idx, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
};

/// Pieri rule for special classes on G(1,n):
///   sigma_{(0,c)} . sigma_{(a,b)} = sum over a'+b' = a+b+c with
///   a <= a' <= b <= b' <= n-1.  Terms exceeding the box are dropped.
inline SchubertElement pieri_multiply(const SchubertElement& e, long c) {
    if (c < 1 || c > e.n - 1)
        throw std::invalid_argument("invalid special class sigma_(0," +
                                    std::to_string(c) + ") on G(1," +
                                    std::to_string(e.n) + ")");
    SchubertElement out;
    out.n = e.n;
    for (const auto& [idx, coeff] : e.terms) {
        for (long ap = idx.a; ap <= idx.b; ++ap) {
            const long bp = idx.a + idx.b + c - ap;
            if (bp < idx.b || bp < ap || bp > e.n - 1) continue;
            out.add_term({ap, bp, e.n}, coeff);
        }
    }
    return out;
}

/// Coefficient of the point class in prod_i sigma_{(0,cs[i])}, evaluated in
/// H^top(G(1,n)).  Requires sum(cs) = 2(n-1).
inline BigInt special_product_integral(long n, const std::vector<long>& cs) {
    long total = 0;
    for (long c : cs) total += c;
    if (total != 2 * (n - 1))
        throw std::invalid_argument("not top degree: sum of codimensions is " +
                                    std::to_string(total) + ", expected " +
                                    std::to_string(2 * (n - 1)));
    SchubertElement e = SchubertElement::fundamental(n);
    for (long c : cs) e = pieri_multiply(e, c);
    const SchubertIndex point{n - 1, n - 1, n};
    auto it = e.terms.find(point);
    return it == e.terms.end() ? BigInt(0) : it->second;
}

}  // namespace hurwitz::schubert
