#pragma once

// Random generators and slow independent oracles shared by the test binaries.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <s1embed/s1embed.hpp>

namespace s1e::oracle {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    Rational rational(long range = 9, long max_den = 4) {
        return Rational(integer(-range, range), integer(1, max_den));
    }
    Rational nonzero_rational(long range = 9, long max_den = 4) {
        for (;;) {
            Rational r = rational(range, max_den);
            if (!r.is_zero()) return r;
        }
    }
    GaussianRational gaussian(long range = 5, long max_den = 3) { return {rational(range, max_den), rational(range, max_den)}; }
    GaussianRational nonzero_gaussian(long range = 5, long max_den = 3) {
        for (;;) {
            GaussianRational z = gaussian(range, max_den);
            if (!z.is_zero()) return z;
        }
    }
    GaussianRational gaussian_integer(long range = 3) { return {Rational(integer(-range, range)), Rational(integer(-range, range))}; }

    /// Random polynomial with up to `terms` terms of total degree <= max_deg.
    MultiPoly poly(const VarSetPtr& vs, unsigned max_deg, unsigned terms, bool real = false, bool integral = false) {
        MultiPoly p(vs);
        for (unsigned t = 0; t < terms; ++t) {
            Monomial m{};
            long budget = integer(0, max_deg);
            for (std::size_t i = 0; i < vs->arity() && budget > 0; ++i) {
                long e = i + 1 == vs->arity() ? budget : integer(0, budget);
                m[i] = static_cast<std::uint32_t>(e);
                budget -= e;
            }
            std::shuffle(m.begin(), m.begin() + static_cast<long>(vs->arity()), rng_);
            GaussianRational c = integral ? gaussian_integer() : gaussian();
            if (real) c = GaussianRational(integral ? Rational(integer(-5, 5)) : rational());
            p.add_term(m, c);
        }
        return p;
    }

    UPoly<Rational> upoly(unsigned max_deg) {
        std::vector<Rational> c;
        for (long i = 0, n = integer(0, max_deg); i <= n; ++i) c.push_back(rational());
        return UPoly<Rational>(std::move(c));
    }

    LaurentPoly laurent(long lo, long hi) {
        std::vector<GaussianRational> c;
        long a = integer(lo, hi), b = integer(a, hi);
        for (long e = a; e <= b; ++e) c.push_back(gaussian());
        return LaurentPoly(a, std::move(c));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Leibniz-formula determinant (n! terms; small matrices only).
inline MultiPoly leibniz_determinant(const std::vector<std::vector<MultiPoly>>& M, const VarSetPtr& vs) {
    const std::size_t n = M.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    MultiPoly det(vs);
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        MultiPoly term = MultiPoly::constant(vs, inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * M[i][perm[i]];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

/// Sylvester resultant by cofactor expansion; same sign convention as resultant().
inline MultiPoly sylvester_oracle(const MultiPoly& P, const MultiPoly& Q, std::size_t var) {
    VarSetPtr vs = P.varset();
    auto pc = coefficients_in(P, var), qc = coefficients_in(Q, var);
    const std::size_t m = pc.size() - 1, n = qc.size() - 1;
    if (m == 0) return pow(P, n);
    if (n == 0) return pow(Q, m);
    std::vector<std::vector<MultiPoly>> S(m + n, std::vector<MultiPoly>(m + n, MultiPoly(vs)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j) S[r][r + j] = pc[m - j];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j) S[n + r][r + j] = qc[n - j];
    return leibniz_determinant(S, vs);
}

/// Reducibility over Q(i) of a bivariate P by Kronecker substitution
/// y -> x^D with D > deg_x P: factor the univariate image, then try every subset product
/// mapped back to two variables as an exact divisor of P.
inline bool kronecker_reducible(const MultiPoly& P) {
    const VarSetPtr vs = P.varset();
    const long dx = degree_in(P, 0), dy = degree_in(P, 1);
    const long D = dx + 1;
    std::vector<GaussianRational> c(static_cast<std::size_t>(dx + D * dy + 1), GaussianRational(0));
    for (const auto& [m, k] : P.terms()) c[m[0] + static_cast<std::size_t>(D) * m[1]] += k;
    GPoly image(std::move(c));

    // Irreducible factors with multiplicity.
    std::vector<GPoly> parts;
    GPoly rest = monic(image);
    while (rest.degree() > 0) {
        GPoly sqf = exact_quotient(rest, gcd(rest, derivative(rest)));
        for (auto& f : factor_over_gaussian(sqf)) {
            while (rest.degree() > 0 && divmod(rest, f).second.is_zero()) {
                rest = exact_quotient(rest, f);
                parts.push_back(f);
            }
        }
    }
    if (parts.size() > 20) throw std::runtime_error("kronecker oracle: too many univariate factors");
    const std::size_t r = parts.size();
    const long total = monomial_degree(P.leading_monomial());
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << r); ++mask) {
        GPoly prod(GaussianRational(1));
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1) prod = prod * parts[i];
        MultiPoly cand(vs);
        for (std::size_t e = 0; e < prod.coeffs().size(); ++e) {
            Monomial m{};
            m[0] = static_cast<std::uint32_t>(e % static_cast<std::size_t>(D));
            m[1] = static_cast<std::uint32_t>(e / static_cast<std::size_t>(D));
            cand.add_term(m, prod.coeffs()[e]);
        }
        if (cand.is_constant()) continue;
        long cd = monomial_degree(cand.leading_monomial());
        if (cd >= total) continue;
        if (divides(cand, P)) return true;
    }
    return false;
}

/// Newton iteration for g with N(g, v) = 0 mod v^K over truncated series,
/// starting from g = 1. Independent of the order-by-order solver.
inline std::vector<Rational> newton_g(FamilyForm form, const FamilyParams& prm) {
    const long K = form == FamilyForm::II4 || form == FamilyForm::II5 ? *prm.k - 1 : *prm.k;
    using S = UPoly<Rational>;
    const auto len = static_cast<std::size_t>(std::max<long>(K, 1));
    auto trunc = [&](const S& p) { return p.truncated(len); };
    auto mul = [&](const S& a, const S& b) { return trunc(a * b); };
    auto spow = [&](S b, unsigned long e) {
        S r(Rational(1));
        for (; e; --e) r = mul(r, b);
        return r;
    };
    const S v = S::x(), one(Rational(1));
    const unsigned long s = static_cast<unsigned long>(prm.s.value_or(1)), p = static_cast<unsigned long>(prm.p.value_or(1));
    auto N = [&](const S& F) -> S {
        switch (form) {
            case FamilyForm::II1: return trunc(spow(v + spow(F, s), p) - spow(F, s * p + 1));
            case FamilyForm::II2: return trunc(spow(v + spow(F, s), p) - spow(F, s * p - 1));
            case FamilyForm::II3:
                return trunc(v - mul(v, v) * Rational(16) + mul(v, F) * Rational(4) - mul(v, mul(F, F)) * Rational(8) +
                             spow(F, 3) - spow(F, 4));
            case FamilyForm::II4: return trunc(mul(spow(one + mul(v, spow(F, s + 1)), p), F) - one);
            default: return trunc(spow(one + mul(v, spow(F, s + 1)), p) - F);
        }
    };
    // dN/dF by a symmetric difference is not exact for polynomials of degree > 2, so
    // differentiate each form by hand.
    auto dN = [&](const S& F) -> S {
        switch (form) {
            case FamilyForm::II1:
                return trunc(mul(spow(v + spow(F, s), p - 1), spow(F, s - 1)) * Rational(static_cast<long>(s * p)) -
                             spow(F, s * p) * Rational(static_cast<long>(s * p + 1)));
            case FamilyForm::II2: {
                S t = mul(spow(v + spow(F, s), p - 1), spow(F, s - 1)) * Rational(static_cast<long>(s * p));
                if (s * p >= 2) t = t - spow(F, s * p - 2) * Rational(static_cast<long>(s * p - 1));
                return trunc(t);
            }
            case FamilyForm::II3:
                return trunc(v * Rational(4) - mul(v, F) * Rational(16) + spow(F, 2) * Rational(3) - spow(F, 3) * Rational(4));
            case FamilyForm::II4: {
                S base = one + mul(v, spow(F, s + 1));
                S d = p >= 1 ? mul(mul(spow(base, p - 1), mul(v, spow(F, s))), one * Rational(static_cast<long>(p * (s + 1))))
                             : S();
                return trunc(mul(d, F) + spow(base, p));
            }
            default: {
                S base = one + mul(v, spow(F, s + 1));
                return trunc(mul(spow(base, p - 1), mul(v, spow(F, s))) * Rational(static_cast<long>(p * (s + 1))) - one);
            }
        }
    };
    if (K == 0) return {};
    S g = one;
    for (long it = 0; it < 2 * K + 2; ++it) {
        S d = dN(g);
        // Series inverse of d (d(0) != 0).
        S inv(d.coeff(0).inverse());
        for (std::size_t k = 1; k < len; k *= 2) inv = trunc(inv * (S(Rational(2)) - mul(d, inv)));
        g = trunc(g - mul(N(g), inv));
    }
    std::vector<Rational> out;
    for (long j = 0; j < K; ++j) out.push_back(g.coeff(static_cast<std::size_t>(j)));
    return out;
}

}  // namespace s1e::oracle
