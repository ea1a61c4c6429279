#pragma once

/**
 * @file qfactor.hpp
 * @brief Univariate factorization over Q and Q(i) for squarefree inputs.
 *
 * Over Q the polynomial is cleared of denominators and handed to the
 * Zassenhaus routine. Over Q(i) we use Trager's norm method: shift x by s*i
 * until the norm g(x+si) * conj(g)(x-si) in Q[x] is squarefree, factor the
 * norm over Q, and read off the factors of g as gcds.
 */

#include <gmpxx.h>

#include <vector>

#include "../exactnum.hpp"
#include "../upoly.hpp"
#include "zfactor.hpp"

namespace s1e {

using QPoly = UPoly<Rational>;
using GPoly = UPoly<GaussianRational>;

namespace detail {

inline zx::ZPoly to_integer_poly(const QPoly& f) {
    mpz_class den = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
    zx::ZPoly r;
    for (const auto& c : f.coeffs()) r.push_back(c.numerator() * (den / c.denominator()));
    return zx::primitive_part(r);
}

inline QPoly from_integer_poly(const zx::ZPoly& f) {
    std::vector<Rational> c;
    for (const auto& x : f) c.emplace_back(x);
    return monic(QPoly(std::move(c)));
}

inline GPoly to_gaussian(const QPoly& f) {
    std::vector<GaussianRational> c(f.coeffs().begin(), f.coeffs().end());
    return GPoly(std::move(c));
}

inline bool is_real_poly(const GPoly& f) {
    for (const auto& c : f.coeffs())
        if (!c.is_real()) return false;
    return true;
}

inline QPoly real_part_poly(const GPoly& f) {
    std::vector<Rational> c;
    for (const auto& z : f.coeffs()) c.push_back(z.re());
    return QPoly(std::move(c));
}

inline GPoly conjugate_poly(const GPoly& f) {
    std::vector<GaussianRational> c;
    for (const auto& z : f.coeffs()) c.push_back(conjugate(z));
    return GPoly(std::move(c));
}

// Trager's algorithm on one squarefree factor.
inline std::vector<GPoly> trager(const GPoly& g) {
    if (g.degree() <= 1) return {monic(g)};
    for (long k = 0;; ++k) {
        long s = (k + 1) / 2 * (k % 2 ? 1 : -1);
        GaussianRational shift(Rational(0), Rational(s));
        GPoly gs = taylor_shift(g, shift);
        GPoly norm = gs * conjugate_poly(gs);
        QPoly nq = real_part_poly(norm);
        if (!is_squarefree(nq)) continue;
        auto parts = zx::factor_squarefree(to_integer_poly(nq));
        std::vector<GPoly> out;
        for (const auto& part : parts) {
            GPoly h = gcd(gs, to_gaussian(from_integer_poly(part)));
            if (h.degree() > 0) out.push_back(taylor_shift(h, -shift));
        }
        return out;
    }
}

}  // namespace detail

/// Monic irreducible factors over Q of a squarefree f.
inline std::vector<QPoly> factor_over_rationals(const QPoly& f) {
    if (f.degree() <= 0) return {};
    std::vector<QPoly> out;
    for (const auto& part : zx::factor_squarefree(detail::to_integer_poly(f)))
        out.push_back(detail::from_integer_poly(part));
    return out;
}

/// Monic irreducible factors over Q(i) of a squarefree f.
inline std::vector<GPoly> factor_over_gaussian(const GPoly& f) {
    if (f.degree() <= 0) return {};
    std::vector<GPoly> out;
    if (detail::is_real_poly(f)) {
        for (const auto& q : factor_over_rationals(detail::real_part_poly(f)))
            for (auto& h : detail::trager(detail::to_gaussian(q))) out.push_back(std::move(h));
    } else {
        out = detail::trager(f);
    }
    return out;
}

}  // namespace s1e
