#pragma once

/**
 * @file resultant.hpp
 * @brief Resultants via the Sylvester matrix and Bareiss elimination.
 *
 * Sign convention: the determinant of the Sylvester matrix whose first
 * deg_var(Q) rows hold the coefficients of P (highest power first) and whose
 * remaining deg_var(P) rows hold those of Q. When one input has degree 0 in
 * var the result is that input raised to the other's degree.
 */

#include <string>
#include <utility>
#include <vector>

#include "../poly.hpp"
#include "divide.hpp"

namespace s1e {

/// Fraction-free determinant; every intermediate division is exact.
inline MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> M, const VarSetPtr& vs) {
    const std::size_t n = M.size();
    if (n == 0) return MultiPoly::constant(vs, GaussianRational(1));
    bool negate = false;
    MultiPoly prev = MultiPoly::constant(vs, GaussianRational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && M[r][k].is_zero()) ++r;
            if (r == n) return MultiPoly(vs);
            std::swap(M[k], M[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                M[i][j] = exact_divide(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
            M[i][k] = MultiPoly(vs);
        }
        prev = M[k][k];
    }
    MultiPoly det = M[n - 1][n - 1];
    det.bind(vs);
    return negate ? -det : det;
}

inline MultiPoly resultant(const MultiPoly& P, const MultiPoly& Q, std::size_t var) {
    if (P.is_zero() || Q.is_zero()) throw std::domain_error("resultant of a zero polynomial");
    VarSetPtr vs = P.varset() ? P.varset() : Q.varset();
    auto pc = coefficients_in(P, var), qc = coefficients_in(Q, var);
    const std::size_t m = pc.size() - 1, n = qc.size() - 1;
    if (m == 0) return pow(P, n);
    if (n == 0) return pow(Q, m);
    std::vector<std::vector<MultiPoly>> S(m + n, std::vector<MultiPoly>(m + n, MultiPoly(vs)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j) S[r][r + j] = pc[m - j];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j) S[n + r][r + j] = qc[n - j];
    return bareiss_determinant(std::move(S), vs);
}

inline MultiPoly resultant(const MultiPoly& P, const MultiPoly& Q, const std::string& var) {
    const VarSetPtr& vs = P.varset() ? P.varset() : Q.varset();
    if (!vs) throw UnknownVariable(var);
    return resultant(P, Q, vs->index_of(var));
}

}  // namespace s1e
