#pragma once

// Test-only oracle: a naive dense Gaussian elimination over its own fraction
// type.  Deliberately independent of the library's tridiagonal solver so the
// two can check each other.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <vector>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

struct Frac {
    BigInt num;
    BigInt den;

    Frac(BigInt n = 0, BigInt d = 1) : num(std::move(n)), den(std::move(d)) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return Frac(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return Frac(a.num * b.num, a.den * b.den);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        return Frac(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num == b.num && a.den == b.den;
    }
    bool zero() const { return num == 0; }
};

// Solves M x = rhs by dense elimination with row swaps.
inline std::vector<Frac> solve_dense(std::vector<std::vector<Frac>> m, std::vector<Frac> rhs) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].zero()) ++pivot;
        if (pivot == n) std::abort();  // singular: oracle misuse
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].zero()) continue;
            Frac f = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[row][k] = m[row][k] - f * m[col][k];
            rhs[row] = rhs[row] - f * rhs[col];
        }
    }
    std::vector<Frac> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

// Chain intersection matrix: diagonal -b_j, unit off-diagonals.
inline std::vector<std::vector<Frac>> chain_matrix(const std::vector<long>& b) {
    const std::size_t n = b.size();
    std::vector<std::vector<Frac>> m(n, std::vector<Frac>(n, Frac(0)));
    for (std::size_t j = 0; j < n; ++j) {
        m[j][j] = Frac(-b[j]);
        if (j + 1 < n) {
            m[j][j + 1] = Frac(1);
            m[j + 1][j] = Frac(1);
        }
    }
    return m;
}

// Discrepancies: M a = (b_j - 2) + transversal boundary markers.
inline std::vector<Frac> chain_discrepancies(const std::vector<long>& b,
                                             const std::vector<int>& boundary_hits) {
    std::vector<Frac> rhs(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) rhs[j] = Frac(b[j] - 2 + boundary_hits[j]);
    return solve_dense(chain_matrix(b), rhs);
}

// Total-transform coefficients of a curve meeting position j0 (1-based).
inline std::vector<Frac> chain_pullback(const std::vector<long>& b, std::size_t j0) {
    std::vector<Frac> rhs(b.size(), Frac(0));
    rhs[j0 - 1] = Frac(-1);
    return solve_dense(chain_matrix(b), rhs);
}

}  // namespace oracle
