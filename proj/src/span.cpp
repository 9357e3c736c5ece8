#include "gambier/span.hpp"

#include <cstddef>

namespace gambier {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

BigInt lcm_big(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd(a, b) * b;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error("fraction-free elimination: inexact division");
    return q;
}

}  // namespace

ExactSolution solve_linear_exact(const std::vector<std::vector<Rat>>& A,
                                 const std::vector<Rat>& b) {
    const std::size_t m = A.size();
    const std::size_t n = m ? A[0].size() : 0;
    if (b.size() != m) throw std::invalid_argument("solve_linear_exact: size mismatch");

    // Scale each augmented row to integers.
    std::vector<std::vector<BigInt>> M(m, std::vector<BigInt>(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        BigInt L = 1;
        for (std::size_t j = 0; j < n; ++j) L = lcm_big(L, denominator(A[i][j]));
        L = lcm_big(L, denominator(b[i]));
        if (L == 0) L = 1;
        for (std::size_t j = 0; j < n; ++j)
            M[i][j] = numerator(A[i][j]) * (L / denominator(A[i][j]));
        M[i][n] = numerator(b[i]) * (L / denominator(b[i]));
    }

    // Fraction-free (Bareiss) forward elimination with row pivoting.
    BigInt prev = 1;
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && M[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(M[p], M[r]);
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j <= n; ++j)
                M[i][j] = exact_div(M[r][c] * M[i][j] - M[i][c] * M[r][j], prev);
            M[i][c] = 0;
        }
        prev = M[r][c];
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }

    ExactSolution sol;
    sol.rank = static_cast<int>(r);
    for (std::size_t i = r; i < m; ++i)
        if (M[i][n] != 0) {
            sol.consistent = false;
            return sol;
        }

    sol.consistent = true;
    sol.x.assign(n, Rat(0));
    for (int i = sol.rank - 1; i >= 0; --i) {
        int c = pivot_col[i];
        Rat acc((M[i][n]));
        for (std::size_t j = c + 1; j < n; ++j)
            if (M[i][j] != 0) acc -= Rat(M[i][j]) * sol.x[j];
        sol.x[c] = acc / Rat(M[i][c]);
    }
    return sol;
}

}  // namespace gambier
