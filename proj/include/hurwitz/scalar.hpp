#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

using BigInt = mpz_class;
using BigRat = mpq_class;  // always canonical: lowest terms, positive denominator

inline BigInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// 1/n! with the convention 1/n! = 0 for n < 0.
inline BigRat inv_factorial(long n) {
    if (n < 0) return BigRat(0);
    BigRat r(1);
    r /= BigRat(factorial(n));
    return r;
}

/// C(n,k); 0 whenever k < 0, k > n or n < 0.
inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

/// Exact rational value is known to be integral; convert and check.
inline BigInt to_integer(const BigRat& q, const std::string& what) {
    BigRat c(q);
    c.canonicalize();
    if (c.get_den() != 1)
        throw std::logic_error(what + ": expected integer, got " + c.get_str());
    return c.get_num();
}

struct LinearRow {
    std::vector<BigRat> coeffs;
    BigRat rhs;
    std::string label;
};

struct LinearSystem {
    std::vector<LinearRow> rows;

    void add_row(std::vector<BigRat> coeffs, BigRat rhs, std::string label) {
        if (!rows.empty() && coeffs.size() != rows.front().coeffs.size())
            throw std::invalid_argument("row width mismatch in \"" + label + "\"");
        for (const auto& r : rows)
            if (r.label == label)
                throw std::invalid_argument("duplicate row label \"" + label + "\"");
        rows.push_back({std::move(coeffs), std::move(rhs), std::move(label)});
    }

    std::size_t width() const {
        return rows.empty() ? 0 : rows.front().coeffs.size();
    }
};

struct UnderdeterminedError : std::runtime_error {
    int rank_deficiency;
    explicit UnderdeterminedError(int deficiency)
        : std::runtime_error("underdetermined: rank deficiency " +
                             std::to_string(deficiency)),
          rank_deficiency(deficiency) {}
};

struct InconsistentError : std::runtime_error {
    std::string row_label;
    explicit InconsistentError(std::string label)
        : std::runtime_error("inconsistent: row \"" + label + "\" violated"),
          row_label(std::move(label)) {}
};

/// Exact Gaussian elimination, first-nonzero pivoting. Requires a unique
/// solution; substituting the result back reproduces every rhs exactly.
inline std::vector<BigRat> solve_linear(const LinearSystem& system) {
    const std::size_t n = system.width();
    std::vector<std::vector<BigRat>> m;     // augmented matrix
    std::vector<std::string> labels;
    for (const auto& row : system.rows) {
        std::vector<BigRat> r = row.coeffs;
        r.push_back(row.rhs);
        m.push_back(std::move(r));
        labels.push_back(row.label);
    }

    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        std::swap(labels[piv], labels[rank]);
        const BigRat p = m[rank][col];
        for (std::size_t j = col; j <= n; ++j) m[rank][j] /= p;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col] == 0) continue;
            const BigRat f = m[i][col];
            for (std::size_t j = col; j <= n; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }

    for (std::size_t i = rank; i < m.size(); ++i)
        if (m[i][n] != 0) throw InconsistentError(labels[i]);
    if (rank < n) throw UnderdeterminedError(static_cast<int>(n - rank));

    // After full reduction the leading columns are in echelon order.
    std::vector<BigRat> x(n);
    for (std::size_t i = 0; i < rank; ++i) {
        std::size_t lead = 0;
        while (lead < n && m[i][lead] == 0) ++lead;
        x[lead] = m[i][n];
    }
    return x;
}

}  // namespace hurwitz
