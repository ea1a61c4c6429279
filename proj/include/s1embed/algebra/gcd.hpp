#pragma once

/**
 * @file gcd.hpp
 * @brief Multivariate gcd over Q(i) by primitive polynomial remainder sequences.
 *
 * The first variable occurring in either input is the main variable; the
 * content (gcd of coefficients in the main variable) is handled recursively
 * over the remaining variables.
 */

#include <optional>
#include <vector>

#include "../poly.hpp"
#include "divide.hpp"

namespace s1e {

/// Scales p so that its graded-lex leading coefficient is 1.
inline MultiPoly normalize_leading(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p * p.leading_coeff().inverse();
}

namespace detail {

inline std::optional<std::size_t> main_variable(const MultiPoly& a, const MultiPoly& b) {
    std::size_t arity = a.varset() ? a.varset()->arity() : (b.varset() ? b.varset()->arity() : 0);
    for (std::size_t v = 0; v < arity; ++v)
        if (degree_in(a, v) > 0 || degree_in(b, v) > 0) return v;
    return std::nullopt;
}

inline MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

inline MultiPoly content_in(const MultiPoly& p, std::size_t var) {
    MultiPoly c(p.varset());
    for (const auto& coeff : coefficients_in(p, var)) {
        if (coeff.is_zero()) continue;
        c = gcd_rec(c, coeff);
        if (c.is_constant()) break;
    }
    return c;
}

// lc(b)^k * a reduced by b in `var`, without the final exact scaling.
inline MultiPoly sparse_prem(MultiPoly a, const MultiPoly& b, std::size_t var) {
    long db = degree_in(b, var);
    auto bc = coefficients_in(b, var);
    const MultiPoly& lb = bc.back();
    while (!a.is_zero() && degree_in(a, var) >= db) {
        long da = degree_in(a, var);
        MultiPoly la = coefficients_in(a, var).back();
        Monomial shift{};
        shift[var] = static_cast<std::uint32_t>(da - db);
        a = a * lb - la * b * MultiPoly::monomial(a.varset(), shift);
    }
    return a;
}

inline MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
    VarSetPtr vs = a.varset() ? a.varset() : b.varset();
    if (a.is_zero()) return normalize_leading(b);
    if (b.is_zero()) return normalize_leading(a);
    auto var = main_variable(a, b);
    if (!var) return MultiPoly::constant(vs, GaussianRational(1));
    std::size_t x = *var;
    if (degree_in(a, x) == 0) return gcd_rec(a, content_in(b, x));
    if (degree_in(b, x) == 0) return gcd_rec(content_in(a, x), b);

    MultiPoly ca = content_in(a, x), cb = content_in(b, x);
    MultiPoly c = gcd_rec(ca, cb);
    MultiPoly p = exact_divide(a, ca), q = exact_divide(b, cb);
    if (degree_in(p, x) < degree_in(q, x)) std::swap(p, q);
    while (true) {
        MultiPoly r = sparse_prem(p, q, x);
        if (r.is_zero()) break;
        if (degree_in(r, x) == 0) return normalize_leading(c);
        p = std::move(q);
        q = exact_divide(r, content_in(r, x));
    }
    return normalize_leading(c * q);
}

}  // namespace detail

/// gcd in Q(i)[vars], scaled to leading coefficient 1.
inline MultiPoly mv_gcd(const MultiPoly& P, const MultiPoly& Q) {
    if (P.is_zero() && Q.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    MultiPoly a = P, b = Q;
    a.bind(b.varset());
    b.bind(a.varset());
    if (a.varset() && b.varset() && !same_varset(a.varset(), b.varset()))
        throw VarSetMismatch("gcd of polynomials over different variable sets");
    return detail::gcd_rec(a, b);
}

}  // namespace s1e
